from coordination_semantics.model import formula
from coordination_semantics.model import law_schema
from coordination_semantics.model import verdict
from coordination_semantics.model import prospect
from coordination_semantics.model import epistemic
from coordination_semantics.model import distribution
from coordination_semantics.model import report_record
from coordination_semantics.model import ext

from coordination_semantics.semantics import base
from coordination_semantics.semantics import boolean
from coordination_semantics.semantics import prospect
from coordination_semantics.semantics import implicature
from coordination_semantics.semantics import probability

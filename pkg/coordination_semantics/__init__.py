from coordination_semantics import model
from coordination_semantics import syntax
from coordination_semantics import semantics
from coordination_semantics import service

from coordination_semantics.exceptions import (AspectConflictError, AtomLimitError, FormulaSyntaxError,
                                               UnboundMetavariableError, UnknownAtomError, UnknownLabelError,
                                               UnsupportedConnectiveError, ZeroProbabilityError)
from coordination_semantics.model.formula import Aspect, And, Atom, AtomNode, Formula, Not, Or, Xor
from coordination_semantics.model.law_schema import Connective, LawSchema
from coordination_semantics.model.verdict import Counterexample, LawVerdict, VerdictStatus
from coordination_semantics.model.prospect import Judgment, JudgmentCategory, OptionSet, Prospect
from coordination_semantics.model.epistemic import (BeliefModel, EpistemicConstraint, ImplicatureReport, Polarity,
                                                    ProjectionMode, Provenance)
from coordination_semantics.model.distribution import RationalDist, Relevance, SearchResult, SearchStatus
from coordination_semantics.model.ext.corpus import CorpusEntries
from coordination_semantics.model.ext.law_types import LawTypes, get_law
from coordination_semantics.syntax.parser import FormulaParser, parse
from coordination_semantics.service.workbench import Workbench

import jsonpickle

jsonpickle.load_backend('demjson3', 'encode', 'decode', 'JSONDecodeError')
jsonpickle.set_preferred_backend('demjson3')
jsonpickle.set_decoder_options("demjson3", decode_float=float)

from .__version__ import (__title__, __version__, __license__, __author__, __contact__, __url__,
                          __description__, __copyright__)

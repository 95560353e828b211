# Copyright (C) 2026 The coordination_semantics developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from enum import Enum

from coordination_semantics import utils
from coordination_semantics.model import formula


class Polarity(Enum):
    K = 'K'
    NOT_K = 'notK'
    # knows whether: the body has one truth value throughout the belief model
    KW = 'KW'


class Provenance(Enum):
    ASSERTION = 'assertion'
    CLAUSAL = 'clausal'
    SCALAR_WEAK = 'scalar_weak'
    SCALAR_STRONG = 'scalar_strong'
    CONTEXT = 'context'


# lower rank wins during projection
PROVENANCE_RANK = {
    Provenance.ASSERTION: 0,
    Provenance.CLAUSAL: 1,
    Provenance.SCALAR_WEAK: 2,
    Provenance.SCALAR_STRONG: 3,
    Provenance.CONTEXT: 4
}


class ProjectionMode(Enum):
    GAZDAR_DEFAULT = 'gazdar_default'
    SOAMES_CONDITIONAL = 'soames_conditional'

    @classmethod
    def from_option(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {'gazdar': cls.GAZDAR_DEFAULT, 'soames': cls.SOAMES_CONDITIONAL}
        if value in aliases:
            return aliases[value]
        return cls(value)


class EpistemicConstraint:
    """
    A statement about the speaker's knowledge of a propositional body. Two
    constraints are the same when polarity, body text and source node agree;
    provenance only records where the constraint came from.
    """
    def __init__(self, polarity, body, provenance=Provenance.ASSERTION, source=()):
        self.polarity = polarity
        self.body = body
        self.provenance = provenance
        self.source = source

    @property
    def polarity(self):
        return self._polarity

    @polarity.setter
    def polarity(self, value):
        if isinstance(value, str):
            value = Polarity(value)
        if not isinstance(value, Polarity):
            raise ValueError('polarity should be of type Polarity!')
        self._polarity = value

    @property
    def body(self):
        return self._body

    @body.setter
    def body(self, value):
        if not isinstance(value, formula.Formula):
            raise ValueError('body should be of type Formula!')
        self._body = value

    @property
    def provenance(self):
        return self._provenance

    @provenance.setter
    def provenance(self, value):
        if isinstance(value, str):
            value = Provenance(value)
        if not isinstance(value, Provenance):
            raise ValueError('provenance should be of type Provenance!')
        self._provenance = value

    @property
    def source(self):
        return self._source

    @source.setter
    def source(self, value):
        if not isinstance(value, tuple) or not all(isinstance(i, int) for i in value):
            raise ValueError('source should be a subformula path of type tuple!')
        self._source = value

    @property
    def rank(self):
        return PROVENANCE_RANK[self.provenance]

    def holds_in(self, worlds, evaluate):
        values = [evaluate(self.body, world) for world in worlds]
        if self.polarity is Polarity.K:
            return all(values)
        if self.polarity is Polarity.NOT_K:
            return not all(values)
        return all(values) or not any(values)

    def negation(self):
        """The constraint true in exactly the belief models where this one fails, for K and notK."""
        if self.polarity is Polarity.K:
            return EpistemicConstraint(Polarity.NOT_K, self.body, self.provenance, self.source)
        if self.polarity is Polarity.NOT_K:
            return EpistemicConstraint(Polarity.K, self.body, self.provenance, self.source)
        raise ValueError('KW constraints have no single-constraint negation')

    def _key(self):
        return self.polarity, formula.unparse(self.body), self.source

    def __eq__(self, other):
        if not isinstance(other, EpistemicConstraint):
            return False
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return '{}({})'.format(self.polarity.value, formula.unparse(self.body))

    def __repr__(self):
        return 'EpistemicConstraint({}, {}, {})'.format(self, self.provenance.value, self.source)

    def __getstate__(self):
        return {
            'constraint': str(self),
            'polarity': self.polarity.value,
            'body': formula.unparse(self.body),
            'provenance': self.provenance.value,
            'source': list(self.source)
        }


def knows(body, provenance=Provenance.ASSERTION, source=()):
    return EpistemicConstraint(Polarity.K, body, provenance, source)


def not_knows(body, provenance=Provenance.CLAUSAL, source=()):
    return EpistemicConstraint(Polarity.NOT_K, body, provenance, source)


def knows_whether(body, provenance=Provenance.CONTEXT, source=()):
    return EpistemicConstraint(Polarity.KW, body, provenance, source)


class BeliefModel:
    """The worlds compatible with what the speaker believes; never empty."""

    def __init__(self, worlds):
        if not isinstance(worlds, (list, tuple)) or not worlds:
            raise ValueError('a belief model should hold a nonempty list of worlds')
        if not all(isinstance(w, dict) for w in worlds):
            raise ValueError('worlds should be assignments of type dict!')
        self.worlds = [dict(w) for w in worlds]

    def __len__(self):
        return len(self.worlds)

    def __eq__(self, other):
        if not isinstance(other, BeliefModel):
            return False
        return self.worlds == other.worlds

    def __str__(self):
        return '{' + '; '.join(utils.format_assignment(w) for w in self.worlds) + '}'

    def __getstate__(self):
        return [utils.assignment_to_state(w) for w in self.worlds]


class Suppression:
    def __init__(self, constraint, clash_partners):
        self.constraint = constraint
        self.clash_partners = clash_partners

    @property
    def reason(self):
        return 'clashes with {}'.format(', '.join(str(c) for c in self.clash_partners))

    def __getstate__(self):
        data = self.constraint.__getstate__()
        data['status'] = 'suppressed'
        data['clash_partners'] = [str(c) for c in self.clash_partners]
        return data


class ImplicatureReport:
    def __init__(self, formula_text, mode, accepted=None, suppressed=None, model=None):
        if accepted is None:
            accepted = []
        if suppressed is None:
            suppressed = []
        self.formula_text = formula_text
        self.mode = mode
        self.accepted = accepted
        self.suppressed = suppressed
        self.model = model

    @property
    def mode(self):
        return self._mode

    @mode.setter
    def mode(self, value):
        self._mode = ProjectionMode.from_option(value)

    @property
    def accepted(self):
        return self._accepted

    @accepted.setter
    def accepted(self, values):
        if not isinstance(values, list) or not all(isinstance(v, EpistemicConstraint) for v in values):
            raise ValueError('accepted should be a list of EpistemicConstraint')
        self._accepted = values

    @property
    def suppressed(self):
        return self._suppressed

    @suppressed.setter
    def suppressed(self, values):
        if not isinstance(values, list) or not all(isinstance(v, Suppression) for v in values):
            raise ValueError('suppressed should be a list of Suppression')
        self._suppressed = values

    def accepted_of(self, provenance):
        return [c for c in self.accepted if c.provenance is Provenance(provenance)]

    def suppressed_constraints(self):
        return [s.constraint for s in self.suppressed]

    def __getstate__(self):
        accepted = []
        for constraint in self.accepted:
            data = constraint.__getstate__()
            data['status'] = 'accepted'
            accepted.append(data)
        data = {
            'formula': self.formula_text,
            'mode': self.mode.value,
            'accepted': accepted,
            'suppressed': [s.__getstate__() for s in self.suppressed]
        }
        if self.model is not None:
            data['belief_model'] = self.model.__getstate__()
        return data

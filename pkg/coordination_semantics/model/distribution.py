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

import functools
from enum import Enum
from fractions import Fraction

from coordination_semantics import utils
from coordination_semantics.exceptions import ZeroProbabilityError


class RationalDist:
    """
    An exact probability distribution over the truth assignments to a list of atoms.
    Masses are Fractions listed in truth-table row order (first atom varying fastest).
    """
    def __init__(self, atoms, masses):
        self.atoms = atoms
        self.masses = masses

    @classmethod
    def uniform(cls, atoms):
        cells = 2 ** len(atoms)
        return cls(atoms, [Fraction(1, cells)] * cells)

    @classmethod
    def from_table(cls, atoms, table):
        """Builds a distribution from {assignment string 'A=1,B=0': mass}; absent rows get 0."""
        masses = []
        for row in utils.truth_table_rows(atoms):
            masses.append(Fraction(table.get(utils.format_assignment(row), 0)))
        return cls(atoms, masses)

    @property
    def atoms(self):
        return self._atoms

    @atoms.setter
    def atoms(self, values):
        if not isinstance(values, (list, tuple)) or not all(isinstance(v, str) for v in values):
            raise ValueError('atoms should be a list of atom names')
        if len(set(values)) != len(values):
            raise ValueError('atoms should be distinct')
        self._atoms = tuple(values)

    @property
    def masses(self):
        return self._masses

    @masses.setter
    def masses(self, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != 2 ** len(self.atoms):
            raise ValueError('a distribution over {} atoms needs {} masses'.format(len(self.atoms),
                                                                                  2 ** len(self.atoms)))
        if any(v < 0 for v in values):
            raise ValueError('masses should be nonnegative')
        if sum(values) != 1:
            raise ValueError('masses should sum to exactly 1, got {}'.format(utils.fraction_to_str(sum(values))))
        self._masses = values

    def items(self):
        return zip(utils.truth_table_rows(self.atoms), self.masses)

    def extended(self, names):
        """Adds atoms that are false with certainty."""
        extra = [name for name in names if name not in self.atoms]
        if not extra:
            return self
        masses = list(self.masses) + [Fraction(0)] * (2 ** (len(self.atoms) + len(extra)) - len(self.masses))
        return RationalDist(list(self.atoms) + extra, masses)

    def __eq__(self, other):
        if not isinstance(other, RationalDist):
            return False
        return self.atoms == other.atoms and self.masses == other.masses

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.atoms, self.masses))

    def __str__(self):
        return '{' + ', '.join('{}: {}'.format(utils.format_assignment(row), utils.fraction_to_str(mass))
                               for row, mass in self.items()) + '}'

    def __repr__(self):
        return 'RationalDist({})'.format(self)

    def __getstate__(self):
        return {
            'atoms': list(self.atoms),
            'table': [{'assignment': utils.assignment_to_state(row), 'mass': utils.fraction_to_str(mass)}
                      for row, mass in self.items()]
        }

    def __setstate__(self, state):
        self._atoms = tuple(state['atoms'])
        self._masses = tuple(Fraction(entry['mass']) for entry in state['table'])


class SearchStatus(Enum):
    NO_COUNTEREXAMPLE = 'no_counterexample'
    COUNTEREXAMPLE = 'counterexample'


class SearchResult:
    def __init__(self, label, status=SearchStatus.NO_COUNTEREXAMPLE, witness=None, checked=0, premises_met=0,
                 equality_cases=0):
        self.label = label
        self.status = status
        self.witness = witness
        self.checked = checked
        self.premises_met = premises_met
        self.equality_cases = equality_cases
        if (self.status is SearchStatus.COUNTEREXAMPLE) != (self.witness is not None):
            raise ValueError('a search result carries a witness iff it found a counterexample')

    @property
    def status(self):
        return self._status

    @status.setter
    def status(self, value):
        if isinstance(value, str):
            value = SearchStatus(value)
        if not isinstance(value, SearchStatus):
            raise ValueError('status should be of type SearchStatus!')
        self._status = value

    @property
    def witness(self):
        return self._witness

    @witness.setter
    def witness(self, value):
        if value is None or isinstance(value, RationalDist):
            self._witness = value
            return
        raise ValueError('witness should be of type RationalDist!')

    @property
    def found(self):
        return self.status is SearchStatus.COUNTEREXAMPLE

    @property
    def vacuous(self):
        """No distribution met the premises, so a missing counterexample shows nothing."""
        return self.premises_met == 0

    def merge(self, other):
        """Combines two searches; the first witness wins."""
        witness = self.witness if self.witness is not None else other.witness
        status = SearchStatus.COUNTEREXAMPLE if witness is not None else SearchStatus.NO_COUNTEREXAMPLE
        return SearchResult(self.label, status, witness, self.checked + other.checked,
                            self.premises_met + other.premises_met, self.equality_cases + other.equality_cases)

    def __str__(self):
        text = '{}: {} ({} checked, {} meeting premises)'.format(self.label, self.status.value, self.checked,
                                                                  self.premises_met)
        if self.witness is not None:
            text += ' witness {}'.format(self.witness)
        return text

    def __getstate__(self):
        data = {
            'label': self.label,
            'status': self.status.value,
            'checked': self.checked,
            'premises_met': self.premises_met,
            'equality_cases': self.equality_cases,
            'vacuous': self.vacuous
        }
        if self.witness is not None:
            data['witness'] = self.witness.__getstate__()
        return data


@functools.total_ordering
class Relevance:
    """
    The likelihood pair (P(e|h), P(e|not h)). Ordering compares likelihood ratios
    exactly, which orders log-likelihood ratios without computing a logarithm.
    """
    def __init__(self, given_h, given_not_h):
        self.given_h = Fraction(given_h)
        self.given_not_h = Fraction(given_not_h)
        if self.given_h == 0 and self.given_not_h == 0:
            raise ZeroProbabilityError('relevance is undefined for evidence of probability 0')

    @property
    def infinite(self):
        return self.given_h == 0 or self.given_not_h == 0

    def _key(self):
        if self.given_not_h == 0:
            return 1, Fraction(0)
        if self.given_h == 0:
            return -1, Fraction(0)
        return 0, self.given_h / self.given_not_h

    @property
    def sign(self):
        kind, ratio = self._key()
        if kind != 0:
            return kind
        return (ratio > 1) - (ratio < 1)

    def __eq__(self, other):
        if not isinstance(other, Relevance):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, Relevance):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        kind, ratio = self._key()
        if kind == 1:
            return '+inf'
        if kind == -1:
            return '-inf'
        return 'log({})'.format(utils.fraction_to_str(ratio))

    def __getstate__(self):
        return {
            'given_h': utils.fraction_to_str(self.given_h),
            'given_not_h': utils.fraction_to_str(self.given_not_h),
            'value': str(self),
            'sign': self.sign
        }

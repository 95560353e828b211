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

import logging
import math
from enum import Enum
from fractions import Fraction

from coordination_semantics.exceptions import AtomLimitError, UnknownAtomError, ZeroProbabilityError
from coordination_semantics.model import formula
from coordination_semantics.model.distribution import RationalDist, Relevance, SearchResult, SearchStatus
from coordination_semantics.semantics import base
from coordination_semantics.semantics.boolean import evaluate

MAX_GRID_ATOMS = 3
MAX_GRID_DENOMINATOR = 12
MAX_ORDERING_DENOMINATOR = 8

A, B, C, H = (formula.AtomNode(name) for name in 'ABCH')


def implies(antecedent, consequent):
    return formula.Not(formula.And(antecedent, formula.Not(consequent)))


class FregePremise(Enum):
    # 0 < P(A), P(C) < 1
    BETA = 'beta'
    # P(A) != 0 and P(C) != 1
    DELTA = 'delta'
    # only P(A) > 0, so that P(C|A) is defined
    NONE = 'none'


def _compositions(total, cells):
    if cells == 1:
        yield total,
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, cells - 1):
            yield (first,) + rest


class RelevanceProbability(base.BaseSemantics):
    """
    Exact probabilities of formulas over finite distributions, and exhaustive searches
    of rational grids for counterexamples to relevance theorems. Every search returns
    the first witness in grid order.
    """
    name = 'probability'

    def prob(self, d, f):
        f = self.resolve(f)
        unknown = [name for name in formula.atom_names(f) if name not in d.atoms]
        if unknown:
            raise UnknownAtomError('distribution has no atom(s) {}'.format(', '.join(unknown)))
        return sum((mass for row, mass in d.items() if mass and evaluate(f, row)), Fraction(0))

    def cond_prob(self, d, f, g):
        f, g = self.resolve(f), self.resolve(g)
        given = self.prob(d, g)
        if given == 0:
            raise ZeroProbabilityError('cannot condition on {}, which has probability 0'.format(g))
        return self.prob(d, formula.And(f, g)) / given

    @staticmethod
    def grid_size(atom_count, denominator):
        cells = 2 ** atom_count
        return math.comb(denominator + cells - 1, cells - 1)

    def grid(self, atoms, denominator, max_denominator=MAX_GRID_DENOMINATOR):
        """Yields every distribution whose masses are multiples of 1/denominator."""
        atoms = list(atoms)
        if len(atoms) > MAX_GRID_ATOMS:
            raise AtomLimitError('grids span at most {} atoms, got {}'.format(MAX_GRID_ATOMS, len(atoms)))
        if not isinstance(denominator, int) or not 1 <= denominator <= max_denominator:
            raise ValueError('denominator should be an int between 1 and {}'.format(max_denominator))
        logging.debug('Enumerating {} distributions over {} with denominator {}'
                      .format(self.grid_size(len(atoms), denominator), atoms, denominator))
        for counts in _compositions(denominator, 2 ** len(atoms)):
            yield RationalDist(atoms, [Fraction(k, denominator) for k in counts])

    def _frege_search(self, denominator, premise):
        result = SearchResult('frege.{}'.format(premise.value))
        for d in self.grid(['A', 'C'], denominator):
            result.checked += 1
            p_a, p_c = self.prob(d, A), self.prob(d, C)
            if self.prob(d, implies(A, C)) != 1:
                continue
            if premise is FregePremise.BETA and not (0 < p_a < 1 and 0 < p_c < 1):
                continue
            if premise is FregePremise.DELTA and not (p_a != 0 and p_c != 1):
                continue
            if premise is FregePremise.NONE and p_a == 0:
                continue
            result.premises_met += 1
            if self.cond_prob(d, C, A) <= p_c:
                result.status = SearchStatus.COUNTEREXAMPLE
                result.witness = d
                break
        logging.debug(str(result))
        return result

    def check_frege_theorem(self, denominator, premise=None):
        """
        P(A implies C) = 1 together with 0 < P(A), P(C) < 1 (or the weaker P(A) != 0,
        P(C) != 1) should force P(C|A) > P(C). Without a premise argument both
        premise sets are searched.
        """
        if premise is not None:
            return self._frege_search(denominator, FregePremise(premise))
        result = self._frege_search(denominator, FregePremise.BETA)
        result = result.merge(self._frege_search(denominator, FregePremise.DELTA))
        result.label = 'frege'
        return result

    def check_disjunction_corollary(self, denominator):
        """
        P(A or B) = 1 with 0 < P(A), P(B) < 1 should make each disjunct negatively
        relevant to the other, and P(B|A) = 0 whenever P(A and B) = 0.
        """
        result = SearchResult('corollary')
        for d in self.grid(['A', 'B'], denominator):
            result.checked += 1
            p_a, p_b = self.prob(d, A), self.prob(d, B)
            if self.prob(d, formula.Or(A, B)) != 1 or not (0 < p_a < 1 and 0 < p_b < 1):
                continue
            result.premises_met += 1
            b_given_a, a_given_b = self.cond_prob(d, B, A), self.cond_prob(d, A, B)
            extreme = self.prob(d, formula.And(A, B)) == 0
            if b_given_a >= p_b or a_given_b >= p_a or (extreme and b_given_a != 0):
                result.status = SearchStatus.COUNTEREXAMPLE
                result.witness = d
                break
        logging.debug(str(result))
        return result

    def check_explosion_irrelevance(self, d, b):
        """A contradiction is probabilistically independent of every formula."""
        b = self.resolve(b)
        d = d.extended(['A'])
        contradiction = formula.And(A, formula.Not(A))
        joint = self.prob(d, formula.And(contradiction, b))
        return joint == self.prob(d, contradiction) * self.prob(d, b)

    def llr(self, d, e, h):
        """
        The relevance of e to h as the likelihood pair (P(e|h), P(e|not h)). Raises
        ZeroProbabilityError unless 0 < P(h) < 1, and also when P(e) = 0, since both
        likelihoods vanish and no ratio is defined.
        """
        e, h = self.resolve(e), self.resolve(h)
        p_h = self.prob(d, h)
        if p_h == 0 or p_h == 1:
            raise ZeroProbabilityError('relevance to {} needs 0 < P(h) < 1, got {}'.format(h, p_h))
        given_h = self.prob(d, formula.And(e, h)) / p_h
        given_not_h = self.prob(d, formula.And(e, formula.Not(h))) / (1 - p_h)
        return Relevance(given_h, given_not_h)

    def conditionally_independent(self, d, hypothesis=H):
        """P(A and B|hypothesis) = P(A|hypothesis) P(B|hypothesis), cross-multiplied."""
        hypothesis = self.resolve(hypothesis)
        p_h = self.prob(d, hypothesis)
        joint = self.prob(d, formula.And(formula.And(A, B), hypothesis))
        return joint * p_h == self.prob(d, formula.And(A, hypothesis)) * self.prob(d, formula.And(B, hypothesis))

    def meets_ordering_premises(self, d):
        """
        0 < P(H) < 1, A and B possible, independent given H and given not H, jointly
        possible without settling H, and each positively relevant to H.
        """
        p_h = self.prob(d, H)
        if not 0 < p_h < 1 or self.prob(d, A) == 0 or self.prob(d, B) == 0:
            return False
        if not (self.conditionally_independent(d, H) and self.conditionally_independent(d, formula.Not(H))):
            return False
        both = formula.And(A, B)
        if self.prob(d, both) == 0 or self.cond_prob(d, H, both) == 1:
            return False
        return self.llr(d, A, H).sign > 0 and self.llr(d, B, H).sign > 0

    def relevance_chain(self, d):
        """Returns the relevances of A or B, of the stronger disjunct and of A and B, in that order."""
        strongest = max(self.llr(d, A, H), self.llr(d, B, H))
        return self.llr(d, formula.Or(A, B), H), strongest, self.llr(d, formula.And(A, B), H)

    def ordering_holds(self, d):
        relevance_or, strongest, relevance_and = self.relevance_chain(d)
        return relevance_or <= strongest <= relevance_and

    def check_relevance_ordering(self, denominator):
        """
        For A and B each positively relevant to H and independent given H and given
        not H, relevance should grow from A or B through the stronger disjunct to
        A and B. Ties are counted as equality cases, not violations. Small grids
        may hold no distribution meeting the premises; the result is then vacuous.
        """
        result = SearchResult('ordering')
        for d in self.grid(['A', 'B', 'H'], denominator, MAX_ORDERING_DENOMINATOR):
            result.checked += 1
            if not self.meets_ordering_premises(d):
                continue
            result.premises_met += 1
            relevance_or, strongest, relevance_and = self.relevance_chain(d)
            if relevance_or == strongest or strongest == relevance_and:
                result.equality_cases += 1
                logging.debug('Equality case {}'.format(d))
            if not relevance_or <= strongest <= relevance_and:
                result.status = SearchStatus.COUNTEREXAMPLE
                result.witness = d
                break
        if result.vacuous:
            logging.warning('No distribution with denominator {} meets the ordering premises'.format(denominator))
        logging.debug(str(result))
        return result

    def check_disjoint_convexity(self, denominator):
        """
        For exclusive A and B, P(H|A or B) is a convex combination of P(H|A) and
        P(H|B); equally relevant disjuncts then pass their relevance on unchanged.
        """
        result = SearchResult('convexity')
        for d in self.grid(['A', 'B', 'H'], denominator):
            result.checked += 1
            if self.prob(d, formula.And(A, B)) != 0 or self.prob(d, A) == 0 or self.prob(d, B) == 0:
                continue
            result.premises_met += 1
            h_given_a, h_given_b = self.cond_prob(d, H, A), self.cond_prob(d, H, B)
            h_given_either = self.cond_prob(d, H, formula.Or(A, B))
            violated = not min(h_given_a, h_given_b) <= h_given_either <= max(h_given_a, h_given_b)
            if not violated and 0 < self.prob(d, H) < 1:
                relevance_a, relevance_b = self.llr(d, A, H), self.llr(d, B, H)
                if relevance_a == relevance_b:
                    result.equality_cases += 1
                    violated = self.llr(d, formula.Or(A, B), H) != relevance_a
            if violated:
                result.status = SearchStatus.COUNTEREXAMPLE
                result.witness = d
                break
        logging.debug(str(result))
        return result

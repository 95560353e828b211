import itertools
import logging
import unittest
from fractions import Fraction

import pytest

from coordination_semantics.exceptions import AtomLimitError, UnknownAtomError, ZeroProbabilityError
from coordination_semantics.model import formula
from coordination_semantics.model.distribution import RationalDist, Relevance, SearchResult, SearchStatus
from coordination_semantics.semantics.probability import FregePremise, RelevanceProbability


@pytest.fixture
def probability(workbench):
    return workbench.probability()


class TestRationalDist(unittest.TestCase):

    def test_uniform(self):
        d = RationalDist.uniform(['A', 'B'])
        self.assertEqual((Fraction(1, 4),) * 4, d.masses)

    def test_from_table(self):
        d = RationalDist.from_table(['A', 'B'], {'A=1,B=0': '1/2', 'A=0,B=1': '1/2'})
        self.assertEqual((0, Fraction(1, 2), Fraction(1, 2), 0), d.masses)
        self.assertEqual('{A=0,B=0: 0, A=1,B=0: 1/2, A=0,B=1: 1/2, A=1,B=1: 0}', str(d))

    def test_invalid_masses(self):
        with self.assertRaises(ValueError):
            RationalDist(['A'], [1])
        with self.assertRaises(ValueError):
            RationalDist(['A'], [Fraction(1, 2), Fraction(1, 3)])
        with self.assertRaises(ValueError):
            RationalDist(['A'], [Fraction(3, 2), Fraction(-1, 2)])
        with self.assertRaises(ValueError):
            RationalDist(['A', 'A'], [1, 0, 0, 0])

    def test_extended(self):
        d = RationalDist(['B'], [Fraction(1, 2), Fraction(1, 2)]).extended(['A'])
        self.assertEqual(('B', 'A'), d.atoms)
        self.assertEqual((Fraction(1, 2), Fraction(1, 2), 0, 0), d.masses)

    def test_state(self):
        state = RationalDist.uniform(['A']).__getstate__()
        self.assertEqual({'atoms': ['A'], 'table': [{'assignment': {'A': 0}, 'mass': '1/2'},
                                                    {'assignment': {'A': 1}, 'mass': '1/2'}]}, state)
        d = RationalDist.uniform(['A'])
        d.__setstate__(state)
        self.assertEqual(RationalDist.uniform(['A']), d)


class TestRelevance(unittest.TestCase):

    def test_ordering(self):
        self.assertGreater(Relevance(Fraction(1, 2), Fraction(1, 4)), Relevance(Fraction(1, 4), Fraction(1, 4)))
        self.assertLess(Relevance(0, Fraction(1, 2)), Relevance(Fraction(1, 4), Fraction(1, 2)))
        self.assertEqual(Relevance(Fraction(1, 2), Fraction(1, 4)), Relevance(Fraction(1, 3), Fraction(1, 6)))
        self.assertGreater(Relevance(Fraction(1, 5), 0), Relevance(1, Fraction(1, 100)))

    def test_text_and_sign(self):
        self.assertEqual('+inf', str(Relevance(1, 0)))
        self.assertEqual('-inf', str(Relevance(0, 1)))
        self.assertEqual('log(2)', str(Relevance(Fraction(1, 2), Fraction(1, 4))))
        self.assertEqual(0, Relevance(Fraction(1, 3), Fraction(1, 3)).sign)
        self.assertEqual(-1, Relevance(Fraction(1, 4), Fraction(1, 2)).sign)

    def test_undefined(self):
        with self.assertRaises(ZeroProbabilityError):
            Relevance(0, 0)


def test_search_result_needs_witness_for_counterexample():
    with pytest.raises(ValueError):
        SearchResult('frege', SearchStatus.COUNTEREXAMPLE)
    with pytest.raises(ValueError):
        SearchResult('frege', 'maybe')


def test_prob(probability):
    d = RationalDist.uniform(['A', 'B'])
    assert probability.prob(d, 'A or B') == Fraction(3, 4)
    assert probability.prob(d, 'A and not A') == 0
    assert probability.cond_prob(d, 'A', 'A or B') == Fraction(2, 3)
    with pytest.raises(UnknownAtomError):
        probability.prob(d, 'C')
    with pytest.raises(ZeroProbabilityError):
        probability.cond_prob(d, 'A', 'B and not B')


def test_grid(probability):
    grid = list(probability.grid(['A', 'C'], 2))
    assert len(grid) == 10 == RelevanceProbability.grid_size(2, 2)
    assert grid[0].masses == (0, 0, 0, 1)
    assert grid[-1].masses == (1, 0, 0, 0)
    assert len(set(grid)) == 10
    assert RelevanceProbability.grid_size(3, 4) == 330


def test_grid_limits(probability):
    with pytest.raises(AtomLimitError):
        list(probability.grid(['A', 'B', 'C', 'H'], 2))
    with pytest.raises(ValueError):
        list(probability.grid(['A'], 0))
    with pytest.raises(ValueError):
        list(probability.grid(['A'], 13))


@pytest.mark.parametrize('denominator', [2, 6])
def test_frege_theorem(probability, denominator):
    result = probability.check_frege_theorem(denominator)
    assert result.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result.label == 'frege'
    assert result.premises_met > 0
    assert result.checked == 2 * RelevanceProbability.grid_size(2, denominator)


def test_frege_theorem_needs_its_premises(probability):
    result = probability.check_frege_theorem(4, FregePremise.NONE)
    assert result.found
    assert result.checked == 1
    assert result.witness == RationalDist.from_table(['A', 'C'], {'A=1,C=1': 1})


def test_frege_premise_from_value(probability):
    assert probability.check_frege_theorem(2, 'delta').label == 'frege.delta'


def test_disjunction_corollary(probability):
    result = probability.check_disjunction_corollary(4)
    assert not result.found
    assert result.premises_met > 0


def test_extreme_disjunction(probability):
    d = RationalDist.from_table(['A', 'B'], {'A=1,B=0': '1/2', 'A=0,B=1': '1/2'})
    assert probability.cond_prob(d, 'B', 'A') == 0
    assert probability.cond_prob(d, 'B', 'A') < probability.prob(d, 'B')


def test_explosion_irrelevance(probability):
    grid = list(probability.grid(['A', 'B'], 4))
    assert len(grid) == 35
    assert all(probability.check_explosion_irrelevance(d, 'B') for d in grid)
    assert probability.check_explosion_irrelevance(RationalDist.uniform(['B']), 'B')


def test_finite_additivity(probability, workbench):
    formulas = [workbench.formula(label) for label in workbench.labels()]
    for d in probability.grid(['A', 'B', 'C'], 2):
        for f, g in itertools.product(formulas, repeat=2):
            assert (probability.prob(d, formula.Or(f, g)) + probability.prob(d, formula.And(f, g)) ==
                    probability.prob(d, f) + probability.prob(d, g))


@pytest.mark.parametrize('b', ['A', 'B', 'A and not A', 'not B', 'B xor C', '1a', '2b', '5c', '6a'])
def test_explosion_irrelevance_for_every_formula(probability, b):
    atoms = sorted({'A'} | set(formula.atom_names(probability.resolve(b))))
    assert all(probability.check_explosion_irrelevance(d, b) for d in probability.grid(atoms, 2))


def test_llr(probability):
    d = RationalDist.uniform(['A', 'H'])
    assert str(probability.llr(d, 'H', 'H')) == '+inf'
    assert probability.llr(d, 'A', 'H').sign == 0
    with pytest.raises(ZeroProbabilityError):
        probability.llr(RationalDist.from_table(['H'], {'H=1': 1}), 'H', 'H')
    with pytest.raises(ZeroProbabilityError):
        probability.llr(d, 'A and not A', 'H')


def product_distribution():
    """P(H) = 1/2 with A and B independent given H (3/4 each) and given not H (1/4 each)."""
    table = {}
    for a, b in itertools.product((1, 0), repeat=2):
        table['A={},B={},H=1'.format(a, b)] = Fraction(3 ** (a + b), 32)
        table['A={},B={},H=0'.format(a, b)] = Fraction(3 ** (2 - a - b), 32)
    return RationalDist.from_table(['A', 'B', 'H'], table)


def test_ordering_premises_on_product_distribution(probability):
    d = product_distribution()
    assert probability.prob(d, 'H') == Fraction(1, 2)
    assert probability.cond_prob(d, 'A', 'H') == Fraction(3, 4)
    assert probability.cond_prob(d, 'B', 'not H') == Fraction(1, 4)
    assert probability.conditionally_independent(d, 'H')
    assert probability.conditionally_independent(d, 'not H')
    assert probability.meets_ordering_premises(d)
    assert [str(r) for r in probability.relevance_chain(d)] == ['log(15/7)', 'log(3)', 'log(9)']
    assert probability.ordering_holds(d)


def test_ordering_premises_need_conditional_independence(probability):
    d = RationalDist.from_table(['A', 'B', 'H'], {'A=1,B=1,H=1': '1/4', 'A=0,B=0,H=1': '1/4',
                                                  'A=1,B=0,H=0': '1/4', 'A=0,B=1,H=0': '1/4'})
    assert not probability.conditionally_independent(d, 'H')
    assert not probability.meets_ordering_premises(d)
    assert not probability.meets_ordering_premises(RationalDist.uniform(['A', 'B', 'H']))


def test_relevance_ordering(probability):
    result = probability.check_relevance_ordering(8)
    assert not result.found
    assert not result.vacuous
    assert result.checked == RelevanceProbability.grid_size(3, 8) == 6435
    assert result.premises_met == 9


def test_relevance_ordering_is_vacuous_on_small_grids(probability, caplog):
    with caplog.at_level(logging.DEBUG):
        result = probability.check_relevance_ordering(4)
    assert not result.found
    assert result.vacuous
    assert result.premises_met == 0
    assert result.checked == 330
    assert result.__getstate__()['vacuous']
    assert 'No distribution with denominator 4 meets the ordering premises' in caplog.text
    assert 'ordering: no_counterexample' in caplog.text


def test_relevance_ordering_denominator_limit(probability):
    with pytest.raises(ValueError):
        probability.check_relevance_ordering(9)


def test_disjoint_convexity(probability):
    result = probability.check_disjoint_convexity(4)
    assert not result.found
    assert result.premises_met > 0
    assert result.equality_cases > 0

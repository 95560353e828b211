import unittest

import pytest

from coordination_semantics.model import formula
from coordination_semantics.model.formula import And, Atom, AtomNode, Not, Or, Xor
from coordination_semantics.syntax.parser import parse

A, B, C = AtomNode('A'), AtomNode('B'), AtomNode('C')


class TestAtom(unittest.TestCase):

    def test_identity_by_name(self):
        self.assertEqual(Atom('A'), Atom('A', formula.Aspect.ITERABLE))
        self.assertNotEqual(Atom('A'), Atom('B'))

    def test_invalid_names(self):
        for name in ['', '1A', 'A-B', 'A B']:
            with self.assertRaises(ValueError):
                Atom(name)

    def test_invalid_aspect(self):
        with self.assertRaises(ValueError):
            Atom('A', 'habitual')


def test_unparse_minimal_parentheses():
    assert formula.unparse(And(A, Or(B, C))) == 'A and (B or C)'
    assert formula.unparse(Or(And(A, B), And(A, C), 1)) == 'A and B or A and C'
    assert formula.unparse(And(Or(A, B), Or(A, C, 1))) == '(A or B) and (A or C)'
    assert formula.unparse(Or(Or(A, B), C, 1)) == '(A or B) or C'
    assert formula.unparse(Or(A, Or(B, C, 1))) == 'A or B or C'
    assert formula.unparse(Not(And(A, B))) == 'not (A and B)'
    assert formula.unparse(Xor(A, And(B, C))) == 'A xor B and C'
    assert formula.unparse(AtomNode(Atom('talks', 'iterable'))) == 'talks:iterable'


def test_length_metric():
    assert formula.length_metric(A) == 1
    assert formula.length_metric(parse('(A or B) and (A or C)')) == 7
    assert formula.length_metric(parse('(A and B) or (A and C)')) == 7
    assert formula.length_metric(parse('A or (A and B)')) == 5


def test_atoms_sorted_and_unique():
    f = parse('C or (A and C) or B')
    assert formula.atom_names(f) == ['A', 'B', 'C']


def test_or_nodes_in_coefficient_order():
    f = parse('(A or B) and (A or C)')
    assert [(path, node.coeff_id) for path, node in formula.or_nodes(f)] == [((0,), 0), ((1,), 1)]


def test_subformula_and_swap():
    f = parse('(A or B) and (A or C)')
    assert formula.subformula(f, (1, 0)) == A
    swapped = formula.swap_children(f, (1,))
    assert swapped == parse('(A or B) and (C or A)')
    with pytest.raises(ValueError):
        formula.subformula(f, (2,))
    with pytest.raises(ValueError):
        formula.swap_children(f, (0, 0))


def test_coefficients_are_dense():
    f = parse('A or (B or (C and (A or B)))')
    assert sorted(formula.coeff_ids(f)) == [0, 1, 2]


def test_state_round_trip():
    f = parse('not A and (B:iterable or C) xor A')
    assert formula.formula_from_state(f.__getstate__()) == f


def test_renumber_reassigns_coefficients():
    f = formula.renumber(And(Or(A, B, 7), Or(A, C, 7)))
    assert formula.coeff_ids(f) == [0, 1]


def test_invalid_children():
    with pytest.raises(ValueError):
        And(A, 'B')
    with pytest.raises(ValueError):
        Or(A, B, coeff_id=-1)

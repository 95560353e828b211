import unittest

import pytest

from coordination_semantics.exceptions import UnboundMetavariableError
from coordination_semantics.model import formula
from coordination_semantics.model.ext import law_types
from coordination_semantics.model.ext.law_types import CLASSICAL, XOR, get_law
from coordination_semantics.model.law_schema import Connective, Join, LawSchema, Meet, MetaVar, instantiate
from coordination_semantics.syntax.parser import parse

X, Y, Z = MetaVar('X'), MetaVar('Y'), MetaVar('Z')
A, B, C = formula.AtomNode('A'), formula.AtomNode('B'), formula.AtomNode('C')


class TestLawSchema(unittest.TestCase):

    def test_inventory(self):
        self.assertEqual(['Dis.1', 'Dis.2', 'Abs.1', 'Abs.2', 'Ide.1', 'Ide.2'], law_types.LAW_ORDER)
        for name in law_types.LAW_ORDER:
            schema = get_law(name)
            self.assertEqual(name, schema.name)
            self.assertEqual(CLASSICAL, schema.connective_map)

    def test_unknown_law(self):
        with self.assertRaises(ValueError):
            get_law('Com.1')
        with self.assertRaises(ValueError):
            get_law('Dis.1', 'nand')

    def test_partial_connective_map(self):
        with self.assertRaises(ValueError):
            LawSchema('half', Meet(X, Join(Y, Z)), X, {'meet': Connective.AND})

    def test_disjoint_metavariables(self):
        with self.assertRaises(ValueError):
            LawSchema('bad', Meet(X, X), Join(Y, Y), CLASSICAL)

    def test_equality_ignores_name(self):
        self.assertEqual(get_law('Dis.1'), LawSchema('renamed', Meet(X, Join(Y, Z)), Join(Meet(X, Y), Meet(X, Z)),
                                                     CLASSICAL))
        self.assertNotEqual(get_law('Dis.1'), get_law('Dis.1', 'xor'))


def test_instantiate_distributive():
    lhs, rhs = instantiate(get_law('Dis.2'), {'X': A, 'Y': B, 'Z': C})
    assert lhs == parse('A or (B and C)')
    assert rhs == parse('(A or B) and (A or C)')
    assert formula.coeff_ids(rhs) == [0, 1]


def test_instantiate_with_xor():
    lhs, rhs = get_law('Dis.2', 'xor').instantiate({'X': A, 'Y': B, 'Z': C})
    assert lhs == parse('A xor (B and C)')
    assert rhs == parse('(A xor B) and (A xor C)')


def test_instantiate_idempotent():
    lhs, rhs = instantiate(get_law('Ide.2'), {'X': A})
    assert lhs == parse('A and A')
    assert rhs == A


def test_instantiate_collapses_to_absorption_variant():
    lhs, rhs = instantiate(get_law('Dis.1'), {'X': A, 'Y': A, 'Z': B})
    assert lhs == parse('A and (A or B)')
    assert rhs == parse('(A and A) or (A and B)')


def test_instantiate_renumbers_formula_bindings():
    lhs, _ = instantiate(get_law('Ide.1'), {'X': parse('A or B')})
    assert lhs == parse('(A or B) or (A or B)')
    assert formula.coeff_ids(lhs) == [0, 1, 2]


def test_unbound_metavariable():
    with pytest.raises(UnboundMetavariableError):
        instantiate(get_law('Dis.1'), {'X': A, 'Y': B})
    with pytest.raises(ValueError):
        instantiate(get_law('Ide.1'), {'X': 'A'})


def test_xor_map():
    assert get_law('Abs.1', 'xor').connective_map == XOR
    assert Connective.XOR.build(A, B) == formula.Xor(A, B)

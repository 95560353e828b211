import logging
import unittest
from fractions import Fraction

import jsonpickle
import pytest

from coordination_semantics import utils
from coordination_semantics.exceptions import UnknownLabelError
from coordination_semantics.model.prospect import OptionSet, Prospect


class TestUtils(unittest.TestCase):

    def test_fraction_to_str(self):
        self.assertEqual('1/3', utils.fraction_to_str(Fraction(2, 6)))
        self.assertEqual('1', utils.fraction_to_str(Fraction(4, 4)))
        self.assertEqual('0', utils.fraction_to_str(0))

    def test_truth_table_rows_first_name_fastest(self):
        rows = list(utils.truth_table_rows(['A', 'B']))
        self.assertEqual([{'A': False, 'B': False}, {'A': True, 'B': False},
                          {'A': False, 'B': True}, {'A': True, 'B': True}], rows)
        self.assertEqual([{}], list(utils.truth_table_rows([])))

    def test_format_assignment(self):
        self.assertEqual('A=1,B=0', utils.format_assignment({'B': False, 'A': True}))

    def test_assignment_state(self):
        state = utils.assignment_to_state({'B': False, 'A': True})
        self.assertEqual({'A': 1, 'B': 0}, state)
        self.assertEqual({'A': True, 'B': False}, utils.assignment_from_state(state))


def test_to_state():
    options = OptionSet([Prospect({'A': 2}), Prospect({'A': 1, 'B': 1})])
    assert utils.to_state({'options': options, 'p': Fraction(1, 2), 'ids': (0, 1)}) == \
        {'options': [[['A', 1], ['B', 1]], [['A', 2]]], 'p': '1/2', 'ids': [0, 1]}


def test_to_json():
    text = utils.to_json({'witness': Prospect({'A': 2}), 'valid': False})
    assert jsonpickle.decode(text) == {'witness': [['A', 2]], 'valid': False}


def test_handle_semantic_error(caplog):
    with pytest.raises(UnknownLabelError):
        utils.handle_semantic_error(UnknownLabelError("unknown corpus label '7a'"), 'Looking up 7a')
    assert caplog.record_tuples == [
        ('root', logging.ERROR, "Looking up 7a failed with UnknownLabelError: unknown corpus label '7a'")
    ]

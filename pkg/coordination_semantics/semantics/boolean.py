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

from coordination_semantics import utils
from coordination_semantics.exceptions import UnknownAtomError, UnsupportedConnectiveError
from coordination_semantics.model import formula
from coordination_semantics.model.ext import law_types
from coordination_semantics.model.law_schema import Connective, LawSchema
from coordination_semantics.model.verdict import Counterexample, LawVerdict, VerdictStatus
from coordination_semantics.semantics import base

MAX_TRUTH_TABLE_ATOMS = 12
FRESH_ATOMS = {'X': 'A', 'Y': 'B', 'Z': 'C'}
PARITY_ATOMS = 'ABCDEFGHIJKL'


def evaluate(f, assignment):
    if isinstance(f, formula.AtomNode):
        try:
            return bool(assignment[f.atom.name])
        except KeyError:
            raise UnknownAtomError('assignment has no value for atom {}'.format(f.atom.name)) from None
    if isinstance(f, formula.Not):
        return not evaluate(f.child, assignment)
    left, right = evaluate(f.left, assignment), evaluate(f.right, assignment)
    if isinstance(f, formula.And):
        return left and right
    if isinstance(f, formula.Or):
        return left or right
    return left != right


class BooleanSemantics(base.BaseSemantics):
    """
    Classical two-valued semantics. Equivalence and entailment are decided by full
    truth tables; witnesses are the first differing row, the first atom varying fastest.
    """
    name = 'boolean'

    def eval(self, f, assignment):
        return evaluate(self.resolve(f), assignment)

    def _search(self, f, g, differs):
        names = sorted(set(formula.atom_names(f)) | set(formula.atom_names(g)))
        self.check_atom_limit(names, MAX_TRUTH_TABLE_ATOMS)
        logging.debug('Searching {} rows for {} vs {}'.format(2 ** len(names), f, g))
        checked = 0
        for row in utils.truth_table_rows(names):
            checked += 1
            if differs(evaluate(f, row), evaluate(g, row)):
                logging.debug('Found witness {}'.format(utils.format_assignment(row)))
                return LawVerdict(VerdictStatus.INVALID, Counterexample(row), checked)
        return LawVerdict(VerdictStatus.VALID, None, checked)

    def equivalent(self, f, g):
        return self._search(self.resolve(f), self.resolve(g), lambda a, b: a != b)

    def entails(self, f, g):
        return self._search(self.resolve(f), self.resolve(g), lambda a, b: a and not b)

    def check_law(self, schema):
        if not isinstance(schema, LawSchema):
            raise ValueError('schema should be of type LawSchema!')
        binding_names = {name: FRESH_ATOMS[name] for name in schema.metavariables()}
        binding = {name: formula.AtomNode(atom) for name, atom in binding_names.items()}
        lhs, rhs = schema.instantiate(binding)
        verdict = self.equivalent(lhs, rhs)
        if verdict.counterexample is not None:
            verdict.counterexample.binding = binding_names
        logging.debug('{} under {}: {}'.format(schema.name, schema.connective_map, verdict))
        return verdict

    def law_matrix(self, connective_set='classical'):
        return [(name, self.check_law(law_types.get_law(name, connective_set))) for name in law_types.LAW_ORDER]

    def dual(self, schema):
        if not isinstance(schema, LawSchema):
            raise ValueError('schema should be of type LawSchema!')
        if Connective.XOR in schema.connective_map.values():
            raise UnsupportedConnectiveError('duality is defined for meet and join only, {} maps to xor'
                                             .format(schema.name))
        lhs, rhs = schema.lhs.dual(), schema.rhs.dual()
        name = law_types.name_for_templates(lhs, rhs) or 'dual({})'.format(schema.name)
        return LawSchema(name, lhs, rhs, schema.connective_map)

    def xor_parity(self, n):
        if not isinstance(n, int) or not 1 <= n <= MAX_TRUTH_TABLE_ATOMS:
            raise ValueError('n should be an int between 1 and {}'.format(MAX_TRUTH_TABLE_ATOMS))
        names = list(PARITY_ATOMS[:n])
        chain = formula.AtomNode(names[-1])
        for name in reversed(names[:-1]):
            chain = formula.Xor(formula.AtomNode(name), chain)
        for row in utils.truth_table_rows(names):
            odd = sum(row.values()) % 2 == 1
            if evaluate(chain, row) != odd:
                return False
        return True

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

import itertools
import logging

from coordination_semantics.exceptions import UnsupportedConnectiveError
from coordination_semantics.model import formula
from coordination_semantics.model.law_schema import Connective, LawSchema
from coordination_semantics.model.prospect import (DoubleImage, Judgment, JudgmentCategory, LawProfile,
                                                   OptionComparison, OptionSet, Prospect)
from coordination_semantics.semantics import base

LAW_ATOMS = {'X': 'A', 'Y': 'B', 'Z': 'C'}


def witness_key(prospect):
    # larger coefficients first, so a double image is the preferred witness
    return -prospect.max_coefficient(), prospect.pairs


class ProspectSemantics(base.BaseSemantics):
    """
    Sentences denote formal vectors. 'and' adds vectors; each occurrence of 'or'
    chooses one branch through its own 0/1 coefficient, so a formula with k
    disjunctions denotes up to 2**k options.
    """
    name = 'prospect'

    @staticmethod
    def _check_denotable(f):
        if formula.contains(f, formula.Not):
            raise UnsupportedConnectiveError('negation has no vector denotation: {}'.format(f))
        if formula.contains(f, formula.Xor):
            raise UnsupportedConnectiveError('xor has no vector denotation: {}'.format(f))

    def _denote(self, f, coefficients):
        if isinstance(f, formula.AtomNode):
            return Prospect.unit(f.atom.name)
        if isinstance(f, formula.And):
            return self._denote(f.left, coefficients) + self._denote(f.right, coefficients)
        if isinstance(f, formula.Or):
            try:
                choice = coefficients[f.coeff_id]
            except KeyError:
                raise ValueError('no coefficient given for or-node {}'.format(f.coeff_id)) from None
            if choice not in (0, 1):
                raise ValueError('coefficients should be 0 or 1')
            return self._denote(f.left if choice == 1 else f.right, coefficients)
        raise UnsupportedConnectiveError('unsupported connective {}'.format(type(f).__name__))

    def denote_one(self, f, coefficients):
        f = self.resolve(f)
        self._check_denotable(f)
        return self._denote(f, coefficients)

    def denote_options(self, f):
        f = self.resolve(f)
        self._check_denotable(f)
        ids = formula.coeff_ids(f)
        options = set()
        for choices in itertools.product((1, 0), repeat=len(ids)):
            options.add(self._denote(f, dict(zip(ids, choices))))
        logging.debug('{} denotes {} option(s) over {} coefficient(s)'.format(f, len(options), len(ids)))
        return OptionSet(options)

    def option_equivalent(self, f, g):
        left, right = self.denote_options(f), self.denote_options(g)
        if left == right:
            return OptionComparison(True)
        difference = left.prospects ^ right.prospects
        return OptionComparison(False, min(difference, key=witness_key))

    def judge(self, f):
        f = self.resolve(f)
        options = self.denote_options(f)
        aspects = formula.atom_aspects(f)
        double_images = [DoubleImage(option, name, value)
                         for option in options for name, value in option.pairs
                         if value >= 2 and aspects[name] is formula.Aspect.STATIVE]
        hobson_nodes = [node.coeff_id for _, node in formula.or_nodes(f)
                        if self.denote_options(node.left) == self.denote_options(node.right)]
        if double_images:
            category = JudgmentCategory.WEIRD_DOUBLE_IMAGE
        elif hobson_nodes:
            category = JudgmentCategory.ODD_HOBSON
        else:
            category = JudgmentCategory.ACCEPTABLE
        return Judgment(category, options, double_images, hobson_nodes)

    def law_profile(self, schema):
        if not isinstance(schema, LawSchema):
            raise ValueError('schema should be of type LawSchema!')
        if Connective.XOR in schema.connective_map.values():
            raise UnsupportedConnectiveError('xor has no vector denotation: {}'.format(schema.name))
        binding = {name: formula.AtomNode(LAW_ATOMS[name]) for name in schema.metavariables()}
        lhs, rhs = schema.instantiate(binding)
        return LawProfile(schema.name, lhs, rhs, self.judge(lhs), self.judge(rhs), self.option_equivalent(lhs, rhs))

    @staticmethod
    def drop_double_images(options, aspects):
        """Discards every option showing a stative atom twice or more."""
        kept = [p for p in options
                if all(value < 2 or aspects.get(name) is not formula.Aspect.STATIVE for name, value in p.pairs)]
        if not kept:
            raise ValueError('every option is a double image')
        return OptionSet(kept)

    @staticmethod
    def collapse_double_images(options, aspects):
        """Cuts stative coefficients down to 1, as an idempotent conjunction would."""
        collapsed = []
        for p in options:
            collapsed.append(Prospect({name: 1 if aspects.get(name) is formula.Aspect.STATIVE else value
                                       for name, value in p.pairs}))
        return OptionSet(collapsed)

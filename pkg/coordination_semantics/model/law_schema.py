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

from coordination_semantics.exceptions import UnboundMetavariableError
from coordination_semantics.model import formula


class Connective(Enum):
    AND = 'and'
    OR = 'or'
    XOR = 'xor'

    def build(self, left, right):
        if self is Connective.AND:
            return formula.And(left, right)
        if self is Connective.OR:
            return formula.Or(left, right)
        return formula.Xor(left, right)


class Template:
    """A node of a law template over metavariables and the abstract connectives meet/join."""

    def __eq__(self, other):
        if other is None or type(other) is not type(self):
            return False
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())


class MetaVar(Template):
    METAVARIABLES = ('X', 'Y', 'Z')

    def __init__(self, name):
        if name not in self.METAVARIABLES:
            raise ValueError('metavariable should be one of X, Y, Z!')
        self.name = name

    def _key(self):
        return 'MetaVar', self.name

    def metavariables(self):
        return {self.name}

    def connectives(self):
        return set()

    def dual(self):
        return self

    def __str__(self):
        return self.name

    def __getstate__(self):
        return self.name


class Lattice(Template):
    operation = None

    def __init__(self, left, right):
        if not isinstance(left, Template) or not isinstance(right, Template):
            raise ValueError('left and right should be of type Template!')
        self.left = left
        self.right = right

    def _key(self):
        return self.operation, self.left, self.right

    def metavariables(self):
        return self.left.metavariables() | self.right.metavariables()

    def connectives(self):
        return {self.operation} | self.left.connectives() | self.right.connectives()

    def __str__(self):
        def side(node):
            return str(node) if isinstance(node, MetaVar) else '(' + str(node) + ')'
        return '{} {} {}'.format(side(self.left), self.operation, side(self.right))

    def __getstate__(self):
        return [self.operation, self.left.__getstate__(), self.right.__getstate__()]


class Meet(Lattice):
    operation = 'meet'

    def dual(self):
        return Join(self.left.dual(), self.right.dual())


class Join(Lattice):
    operation = 'join'

    def dual(self):
        return Meet(self.left.dual(), self.right.dual())


class LawSchema:
    """
    An equation between two templates plus the concrete connective each template
    connective stands for.
    """
    def __init__(self, name, lhs, rhs, connective_map):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.connective_map = connective_map
        self.validate()

    @property
    def name(self):
        return self._name

    @name.setter
    def name(self, value):
        if not isinstance(value, str) or value == '':
            raise ValueError('name should be a nonempty str!')
        self._name = value

    @property
    def lhs(self):
        return self._lhs

    @lhs.setter
    def lhs(self, value):
        if not isinstance(value, Template):
            raise ValueError('lhs should be of type Template!')
        self._lhs = value

    @property
    def rhs(self):
        return self._rhs

    @rhs.setter
    def rhs(self, value):
        if not isinstance(value, Template):
            raise ValueError('rhs should be of type Template!')
        self._rhs = value

    @property
    def connective_map(self):
        return self._connective_map

    @connective_map.setter
    def connective_map(self, value):
        if not isinstance(value, dict) or \
                any(key not in ('meet', 'join') or not isinstance(con, Connective) for key, con in value.items()):
            raise ValueError('connective_map should map meet/join to Connective values!')
        self._connective_map = dict(value)

    def metavariables(self):
        return sorted(self.lhs.metavariables() | self.rhs.metavariables())

    def connectives(self):
        return self.lhs.connectives() | self.rhs.connectives()

    def validate(self):
        # one side's metavariables contain the other's (Abs and Ide drop some on the right)
        lhs_vars, rhs_vars = self.lhs.metavariables(), self.rhs.metavariables()
        if not (lhs_vars <= rhs_vars or rhs_vars <= lhs_vars):
            raise ValueError('the metavariables of one side of {} should contain the other side\'s'
                             .format(self.name))
        missing = self.connectives() - set(self.connective_map)
        if missing:
            raise ValueError('connective_map of {} does not interpret {}'.format(self.name, sorted(missing)))

    def with_connective_map(self, connective_map):
        return LawSchema(self.name, self.lhs, self.rhs, connective_map)

    def instantiate(self, binding):
        return instantiate(self, binding)

    def _realize(self, template, binding):
        if isinstance(template, MetaVar):
            return binding[template.name]
        connective = self.connective_map[template.operation]
        return connective.build(self._realize(template.left, binding), self._realize(template.right, binding))

    def __eq__(self, other):
        # equality is up to the name: dual(Dis.1) and Dis.2 are the same law
        if not isinstance(other, LawSchema):
            return False
        return self.lhs == other.lhs and self.rhs == other.rhs and self.connective_map == other.connective_map

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lhs, self.rhs, tuple(sorted((k, v.value) for k, v in self.connective_map.items()))))

    def __str__(self):
        return '{}: {} = {}'.format(self.name, self.lhs, self.rhs)

    def __repr__(self):
        return 'LawSchema({})'.format(self)

    def __getstate__(self):
        return {
            'name': self.name,
            'lhs': self.lhs.__getstate__(),
            'rhs': self.rhs.__getstate__(),
            'connective_map': {key: value.value for key, value in sorted(self.connective_map.items())}
        }


def instantiate(schema, binding):
    """
    Replaces metavariables by formulas and template connectives by concrete ones.
    Each side gets fresh coefficient ids in textual order.
    """
    unbound = [name for name in schema.metavariables() if name not in binding]
    if unbound:
        raise UnboundMetavariableError('no binding for metavariable(s) {} of {}'.format(', '.join(unbound),
                                                                                       schema.name))
    for name, value in binding.items():
        if not isinstance(value, formula.Formula):
            raise ValueError('binding of {} should be of type Formula!'.format(name))
    lhs = formula.renumber(schema._realize(schema.lhs, binding))
    rhs = formula.renumber(schema._realize(schema.rhs, binding))
    return lhs, rhs

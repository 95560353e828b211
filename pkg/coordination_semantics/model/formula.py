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
import re
from abc import ABC, abstractmethod
from enum import Enum


class Aspect(Enum):
    STATIVE = 'stative'
    ITERABLE = 'iterable'


class Atom:
    """
    A sentence letter. Two atoms are the same atom iff their names agree; the aspect
    is a property of the name within one formula.
    """
    NAME_PATTERN = re.compile(r'[A-Za-z][A-Za-z0-9_]*\Z')

    def __init__(self, name, aspect=Aspect.STATIVE):
        if not isinstance(name, str) or self.NAME_PATTERN.match(name) is None:
            raise ValueError('name of atom should be a str matching [A-Za-z][A-Za-z0-9_]*!')
        if isinstance(aspect, str):
            aspect = Aspect(aspect)
        if not isinstance(aspect, Aspect):
            raise ValueError('aspect should be of type Aspect!')
        self._name = name
        self._aspect = aspect

    @property
    def name(self):
        return self._name

    @property
    def aspect(self):
        return self._aspect

    @property
    def stative(self):
        return self._aspect is Aspect.STATIVE

    def __eq__(self, other):
        if not isinstance(other, Atom):
            return False
        return self.name == other.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        if self.stative:
            return 'Atom({!r})'.format(self.name)
        return 'Atom({!r}, {})'.format(self.name, self.aspect)

    def __getstate__(self):
        return {'name': self.name, 'aspect': self.aspect.value}

    def __setstate__(self, state):
        self._name = state['name']
        self._aspect = Aspect(state.get('aspect', Aspect.STATIVE.value))


class Formula(ABC):
    """
    An abstract node of the object language. Nodes are immutable; rebuilding goes
    through with_children.
    """
    # binding strength used by unparse: or < xor < and < not < atom
    precedence = 0
    word = None

    @property
    @abstractmethod
    def children(self):
        pass

    @abstractmethod
    def with_children(self, *children):
        pass

    def _key(self):
        return (type(self).__name__,) + tuple(self.children)

    def __eq__(self, other):
        if other is None or type(other) is not type(self):
            return False
        if id(self) == id(other):
            return True
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return unparse(self)

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, ', '.join(repr(c) for c in self._key()[1:]))

    def __getstate__(self):
        return {'type': type(self).__name__, 'children': [child.__getstate__() for child in self.children]}


class AtomNode(Formula):
    precedence = 5

    def __init__(self, atom):
        if isinstance(atom, str):
            atom = Atom(atom)
        if not isinstance(atom, Atom):
            raise ValueError('atom should be of type Atom!')
        self._atom = atom

    @property
    def atom(self):
        return self._atom

    @property
    def children(self):
        return ()

    def with_children(self, *children):
        return self

    def _key(self):
        return 'AtomNode', self.atom.name, self.atom.aspect

    def __repr__(self):
        return repr(self.atom)

    def __getstate__(self):
        return {'type': 'AtomNode', 'atom': self.atom.__getstate__()}


class Not(Formula):
    precedence = 4
    word = 'not'

    def __init__(self, child):
        if not isinstance(child, Formula):
            raise ValueError('child should be of type Formula!')
        self._child = child

    @property
    def child(self):
        return self._child

    @property
    def children(self):
        return self._child,

    def with_children(self, *children):
        return Not(*children)


class BinaryFormula(Formula):

    def __init__(self, left, right):
        if not isinstance(left, Formula) or not isinstance(right, Formula):
            raise ValueError('left and right should be of type Formula!')
        self._left = left
        self._right = right

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    @property
    def children(self):
        return self._left, self._right


class And(BinaryFormula):
    precedence = 3
    word = 'and'

    def with_children(self, *children):
        return And(*children)


class Xor(BinaryFormula):
    precedence = 2
    word = 'xor'

    def with_children(self, *children):
        return Xor(*children)


class Or(BinaryFormula):
    """
    Disjunction. Every occurrence carries its own coefficient variable, identified by
    coeff_id, unique within one formula.
    """
    precedence = 1
    word = 'or'

    def __init__(self, left, right, coeff_id=0):
        super().__init__(left, right)
        if not isinstance(coeff_id, int) or isinstance(coeff_id, bool) or coeff_id < 0:
            raise ValueError('coeff_id should be a nonnegative int!')
        self._coeff_id = coeff_id

    @property
    def coeff_id(self):
        return self._coeff_id

    def with_children(self, *children):
        return Or(*children, coeff_id=self.coeff_id)

    def _key(self):
        return 'Or', self.left, self.right, self.coeff_id

    def __getstate__(self):
        data = super().__getstate__()
        data['coeff_id'] = self.coeff_id
        return data


NODE_TYPES = {cls.__name__: cls for cls in (AtomNode, Not, And, Or, Xor)}


def formula_from_state(state):
    node_type = state.get('type')
    if node_type == 'AtomNode':
        atom = Atom.__new__(Atom)
        atom.__setstate__(state['atom'])
        return AtomNode(atom)
    if node_type not in NODE_TYPES:
        raise ValueError('unknown formula node type {!r}'.format(node_type))
    children = [formula_from_state(child) for child in state['children']]
    if node_type == 'Or':
        return Or(*children, coeff_id=state.get('coeff_id', 0))
    return NODE_TYPES[node_type](*children)


def walk(f, path=()):
    """Yields (path, node) pairs in pre-order; a path lists child indices from the root."""
    yield path, f
    for index, child in enumerate(f.children):
        yield from walk(child, path + (index,))


def subformula(f, path):
    for index in path:
        try:
            f = f.children[index]
        except IndexError:
            raise ValueError('path {} does not address a subformula'.format(path))
    return f


def replace_at(f, path, replacement):
    if not path:
        return replacement
    children = list(f.children)
    if path[0] >= len(children):
        raise ValueError('path {} does not address a subformula'.format(path))
    children[path[0]] = replace_at(children[path[0]], path[1:], replacement)
    return f.with_children(*children)


def swap_children(f, path=()):
    node = subformula(f, path)
    if not isinstance(node, BinaryFormula):
        raise ValueError('only binary connectives have children to swap')
    return replace_at(f, path, node.with_children(node.right, node.left))


def atoms(f):
    """Returns the atoms of f, each once, sorted by name."""
    found = {}
    for _, node in walk(f):
        if isinstance(node, AtomNode):
            found.setdefault(node.atom.name, node.atom)
    return [found[name] for name in sorted(found)]


def atom_names(f):
    return [atom.name for atom in atoms(f)]


def atom_aspects(f):
    return {atom.name: atom.aspect for atom in atoms(f)}


def or_nodes(f):
    """Returns (path, Or) pairs ordered by coefficient id."""
    found = [(path, node) for path, node in walk(f) if isinstance(node, Or)]
    return sorted(found, key=lambda item: item[1].coeff_id)


def coeff_ids(f):
    return [node.coeff_id for _, node in or_nodes(f)]


def renumber(f):
    """Assigns coefficient ids 0..k-1 to the Or nodes of f in textual (in-order) order."""
    counter = itertools.count()

    def visit(node):
        if isinstance(node, Or):
            left = visit(node.left)
            coeff_id = next(counter)
            return Or(left, visit(node.right), coeff_id=coeff_id)
        if not node.children:
            return node
        return node.with_children(*[visit(child) for child in node.children])
    return visit(f)


def contains(f, *node_types):
    return any(isinstance(node, node_types) for _, node in walk(f))


def _wrap(text, parenthesize):
    return '(' + text + ')' if parenthesize else text


def unparse(f):
    """
    Canonical text of f: lowercase connective words and the fewest parentheses the
    grammar needs. Binary connectives associate to the right.
    """
    if isinstance(f, AtomNode):
        if f.atom.stative:
            return f.atom.name
        return '{}:{}'.format(f.atom.name, f.atom.aspect.value)
    if isinstance(f, Not):
        return 'not ' + _wrap(unparse(f.child), f.child.precedence < Not.precedence)
    left = _wrap(unparse(f.left), f.left.precedence <= f.precedence)
    right = _wrap(unparse(f.right), f.right.precedence < f.precedence)
    return '{} {} {}'.format(left, f.word, right)


def length_metric(f):
    """Token count of the canonical unparse: atoms plus connective words, no parentheses."""
    return sum(1 for _ in walk(f))

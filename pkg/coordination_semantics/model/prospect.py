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

from collections import Counter
from enum import Enum


class Prospect:
    """
    A formal vector over atoms with nonnegative integer coefficients. Absent atoms
    have coefficient 0; the empty prospect is the null vector.
    """
    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = {}
        if not isinstance(coefficients, dict):
            coefficients = dict(coefficients)
        for name, value in coefficients.items():
            if not isinstance(name, str):
                raise ValueError('prospect coordinates should be atom names of type str!')
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError('prospect coefficients should be nonnegative ints!')
        self._pairs = tuple(sorted((name, value) for name, value in coefficients.items() if value > 0))

    @classmethod
    def unit(cls, name):
        return cls({name: 1})

    @property
    def pairs(self):
        return self._pairs

    @property
    def null(self):
        return not self._pairs

    def coefficient(self, name):
        return dict(self._pairs).get(name, 0)

    def max_coefficient(self):
        return max((value for _, value in self._pairs), default=0)

    def as_dict(self):
        return dict(self._pairs)

    def __add__(self, other):
        if not isinstance(other, Prospect):
            return NotImplemented
        total = Counter(self.as_dict())
        total.update(other.as_dict())
        return Prospect(dict(total))

    def __eq__(self, other):
        if not isinstance(other, Prospect):
            return False
        return self._pairs == other._pairs

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._pairs < other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __str__(self):
        if self.null:
            return '0'
        return ' + '.join(name if value == 1 else '{}{}'.format(value, name) for name, value in self._pairs)

    def __repr__(self):
        return 'Prospect({})'.format(self.as_dict())

    def __getstate__(self):
        return [[name, value] for name, value in self._pairs]

    def __setstate__(self, state):
        self._pairs = tuple(sorted((str(name), int(value)) for name, value in state if int(value) > 0))


class OptionSet:
    """The finite, nonempty set of prospects a formula denotes across its coefficient choices."""

    def __init__(self, prospects):
        prospects = frozenset(prospects)
        if not prospects:
            raise ValueError('an option set should contain at least one prospect')
        if not all(isinstance(p, Prospect) for p in prospects):
            raise ValueError('options should be of type Prospect!')
        self._prospects = prospects

    @property
    def prospects(self):
        return self._prospects

    def sorted(self):
        return sorted(self._prospects)

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self._prospects)

    def __contains__(self, item):
        return item in self._prospects

    def __eq__(self, other):
        if isinstance(other, OptionSet):
            return self._prospects == other._prospects
        return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._prospects)

    def __str__(self):
        return '{' + ', '.join(str(p) for p in self.sorted()) + '}'

    def __repr__(self):
        return 'OptionSet({})'.format(self)

    def __getstate__(self):
        return [p.__getstate__() for p in self.sorted()]

    def __setstate__(self, state):
        prospects = []
        for item in state:
            prospect = Prospect()
            prospect.__setstate__(item)
            prospects.append(prospect)
        self._prospects = frozenset(prospects)


class OptionComparison:
    """Outcome of comparing two option sets; unpacks as (equivalent, witness)."""

    def __init__(self, equivalent, witness=None):
        if not isinstance(equivalent, bool):
            raise ValueError('equivalent should be of type bool!')
        if equivalent != (witness is None):
            raise ValueError('a witness is given iff the option sets differ')
        self.equivalent = equivalent
        self.witness = witness

    def __bool__(self):
        return self.equivalent

    def __iter__(self):
        return iter((self.equivalent, self.witness))

    def __getstate__(self):
        data = {'equivalent': self.equivalent}
        if self.witness is not None:
            data['witness'] = self.witness.__getstate__()
        return data


class JudgmentCategory(Enum):
    ACCEPTABLE = 'acceptable'
    ODD_HOBSON = 'odd_hobson'
    WEIRD_DOUBLE_IMAGE = 'weird_double_image'


class DoubleImage:
    def __init__(self, option, atom, coefficient):
        self.option = option
        self.atom = atom
        self.coefficient = coefficient

    def __eq__(self, other):
        if not isinstance(other, DoubleImage):
            return False
        return (self.option, self.atom, self.coefficient) == (other.option, other.atom, other.coefficient)

    def __repr__(self):
        return 'DoubleImage({}, {}, {})'.format(self.option, self.atom, self.coefficient)

    def __getstate__(self):
        return {'option': self.option.__getstate__(), 'atom': self.atom, 'coefficient': self.coefficient}


class Judgment:
    def __init__(self, category, options, double_images=None, hobson_nodes=None):
        if double_images is None:
            double_images = []
        if hobson_nodes is None:
            hobson_nodes = []
        self.category = category
        self.options = options
        self.double_images = double_images
        self.hobson_nodes = hobson_nodes

    @property
    def category(self):
        return self._category

    @category.setter
    def category(self, value):
        if isinstance(value, str):
            value = JudgmentCategory(value)
        if not isinstance(value, JudgmentCategory):
            raise ValueError('category should be of type JudgmentCategory!')
        self._category = value

    @property
    def options(self):
        return self._options

    @options.setter
    def options(self, value):
        if not isinstance(value, OptionSet):
            raise ValueError('options should be of type OptionSet!')
        self._options = value

    @property
    def double_images(self):
        return self._double_images

    @double_images.setter
    def double_images(self, values):
        if not isinstance(values, list) or not all(isinstance(v, DoubleImage) for v in values):
            raise ValueError('double_images should be a list of DoubleImage')
        self._double_images = values

    @property
    def hobson_nodes(self):
        return self._hobson_nodes

    @hobson_nodes.setter
    def hobson_nodes(self, values):
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise ValueError('hobson_nodes should be a list of coefficient ids')
        self._hobson_nodes = values

    @property
    def acceptable(self):
        return self.category is JudgmentCategory.ACCEPTABLE

    def __str__(self):
        return self.category.value

    def __getstate__(self):
        return {
            'category': self.category.value,
            'options': self.options.__getstate__(),
            'double_images': [d.__getstate__() for d in self.double_images],
            'hobson_nodes': list(self.hobson_nodes)
        }


class LawProfile:
    """How one classical law instance fares under the vector-option semantics."""

    def __init__(self, name, lhs, rhs, lhs_judgment, rhs_judgment, comparison):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.lhs_judgment = lhs_judgment
        self.rhs_judgment = rhs_judgment
        self.comparison = comparison

    @property
    def holds(self):
        return self.comparison.equivalent and self.lhs_judgment.acceptable and self.rhs_judgment.acceptable

    def __getstate__(self):
        return {
            'law': self.name,
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
            'lhs_judgment': self.lhs_judgment.category.value,
            'rhs_judgment': self.rhs_judgment.category.value,
            'option_equivalent': self.comparison.__getstate__(),
            'holds': self.holds
        }

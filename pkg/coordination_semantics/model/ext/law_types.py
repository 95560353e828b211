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

from coordination_semantics.model.law_schema import Connective, Join, LawSchema, Meet, MetaVar

X, Y, Z = MetaVar('X'), MetaVar('Y'), MetaVar('Z')

CLASSICAL = {'meet': Connective.AND, 'join': Connective.OR}
XOR = {'meet': Connective.AND, 'join': Connective.XOR}

ConnectiveMaps = {
    'classical': CLASSICAL,
    'xor': XOR
}

LawTypes = {
    'Dis.1': {
        'lhs': Meet(X, Join(Y, Z)),
        'rhs': Join(Meet(X, Y), Meet(X, Z)),
        'family': 'distributive'
    },
    'Dis.2': {
        'lhs': Join(X, Meet(Y, Z)),
        'rhs': Meet(Join(X, Y), Join(X, Z)),
        'family': 'distributive'
    },
    'Abs.1': {
        'lhs': Join(X, Meet(X, Y)),
        'rhs': X,
        'family': 'absorption'
    },
    'Abs.2': {
        'lhs': Meet(X, Join(X, Y)),
        'rhs': X,
        'family': 'absorption'
    },
    'Ide.1': {
        'lhs': Join(X, X),
        'rhs': X,
        'family': 'idempotent'
    },
    'Ide.2': {
        'lhs': Meet(X, X),
        'rhs': X,
        'family': 'idempotent'
    }
}

LAW_ORDER = ['Dis.1', 'Dis.2', 'Abs.1', 'Abs.2', 'Ide.1', 'Ide.2']


def get_law(name, connective_set='classical'):
    if name not in LawTypes:
        raise ValueError('unknown law {!r}; expected one of {}'.format(name, ', '.join(LAW_ORDER)))
    if connective_set not in ConnectiveMaps:
        raise ValueError('connective_set should be one of {}'.format(', '.join(sorted(ConnectiveMaps))))
    law_type = LawTypes[name]
    return LawSchema(name, law_type['lhs'], law_type['rhs'], ConnectiveMaps[connective_set])


def name_for_templates(lhs, rhs):
    for name in LAW_ORDER:
        if LawTypes[name]['lhs'] == lhs and LawTypes[name]['rhs'] == rhs:
            return name
    return None

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

import coordination_semantics
from coordination_semantics.exceptions import AtomLimitError
from coordination_semantics.model import formula
from coordination_semantics.syntax import parser


class BaseSemantics:
    """
    The workbench independent part of a semantics engine. Specific engines inherit
    from this class; the workbench, when given, resolves corpus labels.
    """
    name = None

    def __init__(self, workbench=None):
        self.workbench = workbench

    @property
    def workbench(self):
        return self._workbench

    @workbench.setter
    def workbench(self, value):
        if value is None or isinstance(value, coordination_semantics.service.workbench.Workbench):
            self._workbench = value
            return
        raise ValueError('workbench should be of type Workbench')

    def resolve(self, item):
        """Accepts a Formula, a corpus label or formula text."""
        if isinstance(item, formula.Formula):
            return item
        if not isinstance(item, str):
            raise ValueError('expected a Formula, a corpus label or formula text, got {}'.format(type(item).__name__))
        if self.workbench is not None:
            return self.workbench.formula(item)
        return parser.parse(item)

    def check_atom_limit(self, names, limit):
        if len(names) > limit:
            raise AtomLimitError('{} semantics handles at most {} atoms, got {} ({})'
                                 .format(self.name, limit, len(names), ', '.join(names)))

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

class FormulaSyntaxError(ValueError):
    """
    Raised when a formula text does not conform to the object-language grammar.
    position is the 0-based character offset of the offending input.
    """
    def __init__(self, text, position, message):
        self.text = text
        self.position = position
        self.message = message
        super().__init__('{} at column {}: {!r}'.format(message, self.column, text))

    @property
    def column(self):
        return self.position + 1


class AspectConflictError(FormulaSyntaxError):
    pass


class UnknownLabelError(ValueError):
    pass


class UnboundMetavariableError(ValueError):
    pass


class UnknownAtomError(ValueError):
    pass


class AtomLimitError(ValueError):
    pass


class UnsupportedConnectiveError(ValueError):
    pass


class ZeroProbabilityError(ValueError):
    pass

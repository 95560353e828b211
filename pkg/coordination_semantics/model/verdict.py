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

from coordination_semantics import utils


class VerdictStatus(Enum):
    VALID = 'valid'
    INVALID = 'invalid'


class Counterexample:
    """
    A truth-table row on which two formulas differ, with the metavariable binding
    that produced them when the formulas came from a law schema.
    """
    def __init__(self, assignment, binding=None):
        self.assignment = assignment
        self.binding = binding

    @property
    def assignment(self):
        return self._assignment

    @assignment.setter
    def assignment(self, value):
        if not isinstance(value, dict) or not all(isinstance(v, bool) for v in value.values()):
            raise ValueError('assignment should be a dict of atom names to bool!')
        self._assignment = dict(value)

    @property
    def binding(self):
        return self._binding

    @binding.setter
    def binding(self, value):
        if value is None:
            self._binding = None
            return
        if not isinstance(value, dict):
            raise ValueError('binding should be of type dict!')
        self._binding = dict(value)

    def __eq__(self, other):
        if not isinstance(other, Counterexample):
            return False
        return self.assignment == other.assignment and self.binding == other.binding

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        text = utils.format_assignment(self.assignment)
        if self.binding:
            text = '{} with {}'.format(text, ','.join('{}->{}'.format(k, self.binding[k]) for k in sorted(self.binding)))
        return text

    def __getstate__(self):
        data = {'assignment': utils.assignment_to_state(self.assignment)}
        if self.binding:
            data['binding'] = {key: str(self.binding[key]) for key in sorted(self.binding)}
        return data

    def __setstate__(self, state):
        self.assignment = utils.assignment_from_state(state.get('assignment', {}))
        self.binding = state.get('binding', None)


class LawVerdict:
    def __init__(self, status=VerdictStatus.VALID, counterexample=None, checked=0):
        self.status = status
        self.counterexample = counterexample
        self.checked = checked
        if (self.status is VerdictStatus.INVALID) != (self.counterexample is not None):
            raise ValueError('a verdict carries a counterexample iff it is invalid')

    @property
    def status(self):
        return self._status

    @status.setter
    def status(self, value):
        if isinstance(value, str):
            value = VerdictStatus(value)
        if not isinstance(value, VerdictStatus):
            raise ValueError('status should be of type VerdictStatus!')
        self._status = value

    @property
    def counterexample(self):
        return self._counterexample

    @counterexample.setter
    def counterexample(self, value):
        if value is None or isinstance(value, Counterexample):
            self._counterexample = value
            return
        raise ValueError('counterexample should be of type Counterexample!')

    @property
    def checked(self):
        return self._checked

    @checked.setter
    def checked(self, value):
        if not isinstance(value, int) or value < 0:
            raise ValueError('checked should be a nonnegative int!')
        self._checked = value

    @property
    def valid(self):
        return self.status is VerdictStatus.VALID

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return self.status.value
        return '{} ({})'.format(self.status.value, self.counterexample)

    def __getstate__(self):
        data = {'status': self.status.value, 'checked': self.checked}
        if self.counterexample is not None:
            data['counterexample'] = self.counterexample.__getstate__()
        return data

    def __setstate__(self, state):
        self.status = state.get('status', VerdictStatus.VALID.value)
        self.checked = state.get('checked', 0)
        self.counterexample = None
        if state.get('counterexample') is not None:
            counterexample = Counterexample({})
            counterexample.__setstate__(state['counterexample'])
            self.counterexample = counterexample

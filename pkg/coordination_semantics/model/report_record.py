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


class RecordStatus(Enum):
    MATCH = 'match'
    # expected and computed agree, but the check had nothing to test
    VACUOUS = 'vacuous'
    MISMATCH = 'mismatch'


class ReportRecord:
    """
    One checked claim. expected and computed are plain serializable values and the
    claim matches iff they are equal; detail carries witnesses for the reader.
    A vacuous record agrees with its expectation without having been exercised.
    """
    def __init__(self, claim_id, inputs, expected, computed, detail=None, vacuous=False):
        self.claim_id = claim_id
        self.inputs = inputs
        self.expected = utils.to_state(expected)
        self.computed = utils.to_state(computed)
        self.detail = utils.to_state(detail)
        self.vacuous = vacuous

    @property
    def claim_id(self):
        return self._claim_id

    @claim_id.setter
    def claim_id(self, value):
        if not isinstance(value, str) or value == '':
            raise ValueError('claim_id should be a nonempty str!')
        self._claim_id = value

    @property
    def inputs(self):
        return self._inputs

    @inputs.setter
    def inputs(self, value):
        if not isinstance(value, dict):
            raise ValueError('inputs should be of type dict!')
        self._inputs = utils.to_state(value)

    @property
    def vacuous(self):
        return self._vacuous

    @vacuous.setter
    def vacuous(self, value):
        if not isinstance(value, bool):
            raise ValueError('vacuous should be of type bool!')
        self._vacuous = value

    @property
    def status(self):
        if self.expected != self.computed:
            return RecordStatus.MISMATCH
        return RecordStatus.VACUOUS if self.vacuous else RecordStatus.MATCH

    @property
    def matched(self):
        return self.status is RecordStatus.MATCH

    @property
    def failed(self):
        return self.status is RecordStatus.MISMATCH

    def __eq__(self, other):
        if not isinstance(other, ReportRecord):
            return False
        return self.__getstate__() == other.__getstate__()

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '{} {}'.format(self.status.value, self.claim_id)

    def __getstate__(self):
        data = {
            'claim_id': self.claim_id,
            'inputs': self.inputs,
            'expected': self.expected,
            'computed': self.computed,
            'status': self.status.value
        }
        if self.detail is not None:
            data['detail'] = self.detail
        return data

    def __setstate__(self, state):
        self.claim_id = state['claim_id']
        self.inputs = state.get('inputs', {})
        self.expected = state.get('expected')
        self.computed = state.get('computed')
        self.detail = state.get('detail')
        self.vacuous = state.get('status') == RecordStatus.VACUOUS.value

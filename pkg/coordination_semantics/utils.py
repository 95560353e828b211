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
from fractions import Fraction

import jsonpickle


def fraction_to_str(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def truth_table_rows(names):
    """
    Yields every assignment over names as a dict name -> bool.
    Row i gives names[k] the value of bit k of i, so the first name varies fastest.
    """
    names = list(names)
    for index in range(2 ** len(names)):
        yield {name: bool(index >> bit & 1) for bit, name in enumerate(names)}


def assignment_to_state(assignment):
    return {name: int(bool(assignment[name])) for name in sorted(assignment)}


def assignment_from_state(state):
    return {name: bool(value) for name, value in state.items()}


def format_assignment(assignment):
    return ','.join('{}={}'.format(name, int(bool(assignment[name]))) for name in sorted(assignment))


def transform_to_json_dict(obj):
    try:
        data = obj.__getstate__()
    except AttributeError:
        data = obj.__dict__
    return data


def to_state(obj):
    if obj is None or isinstance(obj, (str, bool, int, float)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_to_str(obj)
    if isinstance(obj, (list, tuple)):
        return [to_state(item) for item in obj]
    if isinstance(obj, dict):
        return {key: to_state(value) for key, value in obj.items()}
    return to_state(transform_to_json_dict(obj))


def to_json(obj):
    return jsonpickle.encode(to_state(obj), unpicklable=False)


def handle_semantic_error(error, failed_action):
    logging.error("{} failed with {}: {}".format(failed_action, type(error).__name__, error))
    raise error

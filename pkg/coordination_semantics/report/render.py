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

from coordination_semantics import utils


def prospect_text(state):
    return ' + '.join(name if value == 1 else '{}{}'.format(value, name) for name, value in state)


def options_text(state):
    return '{' + ', '.join(prospect_text(p) for p in state) + '}'


def assignment_text(state):
    return ','.join('{}={}'.format(name, state[name]) for name in sorted(state))


def counterexample_text(state):
    text = assignment_text(state['assignment'])
    if state.get('binding'):
        text += ' with ' + ','.join('{}->{}'.format(k, v) for k, v in sorted(state['binding'].items()))
    return text


def verdict_text(state):
    if state['status'] == 'valid':
        return 'valid'
    return 'invalid, counterexample {}'.format(counterexample_text(state['counterexample']))


def comparison_text(state):
    if 'unsupported' in state:
        return 'n/a ({})'.format(state['unsupported'])
    if state['equivalent']:
        return 'same options'
    return 'options differ, e.g. {}'.format(prospect_text(state['witness']))


def laws_text(state):
    lines = ['laws under {} connectives'.format(state['connectives'])]
    for row in state['laws']:
        lines.append('{:<6} {:<8} {}'.format(row['law'], row['verdict']['status'], row['equation']))
        if 'counterexample' in row['verdict']:
            lines.append('       counterexample {}'.format(counterexample_text(row['verdict']['counterexample'])))
    return lines


def denote_text(state):
    return ['{}: {}'.format(row['formula'], options_text(row['options'])) for row in state]


def judgment_lines(row):
    lines = ['{} [{}]: {}, options {}'.format(row['formula'], row['canonical'], row['category'],
                                             options_text(row['options']))]
    for image in row['double_images']:
        lines.append('  double image {} on {}'.format(prospect_text(image['option']), image['atom']))
    for coeff_id in row['hobson_nodes']:
        lines.append("  hobson's choice at or #{}".format(coeff_id))
    return lines


def pair_lines(row):
    return ['{} vs {}: boolean {}; {}'.format(row['f'], row['g'], verdict_text(row['boolean']),
                                             comparison_text(row['options']))]


def judge_text(state):
    lines = []
    for row in state['formulas']:
        lines.extend(judgment_lines(row))
    for row in state['pairs']:
        lines.extend(pair_lines(row))
    return lines


def equiv_text(state):
    return pair_lines(state)


def constraint_text(state):
    text = '{:<10} {} [{}]'.format(state['status'], state['constraint'], state['provenance'])
    if state.get('clash_partners'):
        text += ' clashes with ' + ', '.join(state['clash_partners'])
    return text


def implicatures_text(state):
    lines = ['{} ({})'.format(state['formula'], state['mode'])]
    lines.extend(constraint_text(c) for c in state['accepted'] + state['suppressed'])
    if 'belief_model' in state:
        lines.append('belief model {' + '; '.join(assignment_text(w) for w in state['belief_model']) + '}')
    return lines


def search_text(state):
    if 'irrelevant' in state:
        return ['explosion {}: {} over {} distributions'.format(
            state['b'], 'irrelevant' if state['irrelevant'] else 'RELEVANT', state['distributions'])]
    lines = ['{}: {} ({} checked, {} meeting premises, {} equality cases)'.format(
        state['label'], state['status'], state['checked'], state['premises_met'], state['equality_cases'])]
    if state.get('vacuous'):
        lines.append('  no distribution meets the premises')
    if 'witness' in state:
        for row in state['witness']['table']:
            lines.append('  {}: {}'.format(assignment_text(row['assignment']), row['mass']))
    return lines


def reproduce_text(state):
    lines = []
    for record in state['records']:
        lines.append('{:<8} {}  expected {} computed {}'.format(record['status'], record['claim_id'],
                                                               utils.to_json(record['expected']),
                                                               utils.to_json(record['computed'])))
    lines.append('{}/{} claims match, {} vacuous'.format(state['matched'], state['total'], state['vacuous']))
    return lines


TEXT_RENDERERS = {
    'laws': laws_text,
    'denote': denote_text,
    'judge': judge_text,
    'equiv': equiv_text,
    'implicatures': implicatures_text,
    'prob': search_text,
    'reproduce': reproduce_text
}


def render(command, state, output_format='text'):
    if output_format == 'json':
        return utils.to_json(state) + '\n'
    if output_format != 'text':
        raise ValueError('output format should be text or json')
    return '\n'.join(TEXT_RENDERERS[command](state)) + '\n'

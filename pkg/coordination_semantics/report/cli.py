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

import argparse
import itertools
import logging
import sys

from coordination_semantics import utils
from coordination_semantics.__version__ import __version__
from coordination_semantics.exceptions import UnsupportedConnectiveError
from coordination_semantics.model import formula
from coordination_semantics.model.ext import law_types
from coordination_semantics.model.report_record import RecordStatus
from coordination_semantics.report import claims, render
from coordination_semantics.semantics.boolean import FRESH_ATOMS
from coordination_semantics.service.workbench import Workbench

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

THEOREMS = ['frege', 'corollary', 'explosion', 'ordering', 'convexity']


def coeff_ids(value):
    try:
        return frozenset(int(item) for item in value.split(',') if item.strip() != '')
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated or-node ids, got {!r}'.format(value)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text', help='output format')
    common.add_argument('--mode', choices=['gazdar', 'soames'], default='gazdar',
                        help='projection of strong scalar implicatures')
    common.add_argument('--denominator', type=int, default=4, help='grid denominator for probability searches')
    common.add_argument('--opinionated', type=coeff_ids, default=None, metavar='ID[,ID]',
                        help='or-nodes whose conjunction the speaker is opinionated about (soames mode)')
    common.add_argument('--out', metavar='FILE', help='also write the result as JSON to FILE')
    common.add_argument('--verbose', action='store_true', help='log debug output to stderr')

    parser = argparse.ArgumentParser(prog='coordination-semantics',
                                     description='Boolean, vector-option and implicature semantics of coordination.')
    parser.add_argument('--version', action='version', version="%(prog)s {}".format(__version__))
    commands = parser.add_subparsers(dest='command', required=True)

    laws = commands.add_parser('laws', parents=[common], help='check the lattice laws')
    laws.add_argument('connectives', nargs='?', choices=sorted(law_types.ConnectiveMaps), default='classical')

    denote = commands.add_parser('denote', parents=[common], help='list the vector options of formulas')
    denote.add_argument('formulas', nargs='+', metavar='LABEL_OR_FORMULA')

    judge = commands.add_parser('judge', parents=[common], help='judge formulas and compare them pairwise')
    judge.add_argument('formulas', nargs='+', metavar='LABEL_OR_FORMULA')

    equiv = commands.add_parser('equiv', parents=[common], help='compare two formulas under both semantics')
    equiv.add_argument('f', metavar='LABEL_OR_FORMULA')
    equiv.add_argument('g', metavar='LABEL_OR_FORMULA')

    implicatures = commands.add_parser('implicatures', parents=[common], help='project implicatures')
    implicatures.add_argument('formula', metavar='LABEL_OR_FORMULA')

    prob = commands.add_parser('prob', parents=[common], help='search a probability grid for counterexamples')
    prob.add_argument('theorem', choices=THEOREMS)
    prob.add_argument('formula', nargs='?', default='B', metavar='LABEL_OR_FORMULA',
                      help='the formula b of the explosion check')

    commands.add_parser('reproduce', parents=[common], help='check every claim of the acceptance suite')
    return parser


def cmd_laws(workbench, args):
    engine = workbench.boolean()
    rows = []
    for name in law_types.LAW_ORDER:
        schema = law_types.get_law(name, args.connectives)
        binding = {key: formula.AtomNode(FRESH_ATOMS[key]) for key in schema.metavariables()}
        lhs, rhs = schema.instantiate(binding)
        rows.append({'law': name, 'equation': '{} = {}'.format(lhs, rhs),
                     'verdict': engine.check_law(schema).__getstate__()})
    return {'connectives': args.connectives, 'laws': rows}, EXIT_OK


def cmd_denote(workbench, args):
    engine = workbench.prospect()
    return [{'formula': item, 'options': engine.denote_options(item).__getstate__()} for item in args.formulas], EXIT_OK


def compare(workbench, f, g):
    try:
        options = workbench.prospect().option_equivalent(f, g).__getstate__()
    except UnsupportedConnectiveError as e:
        options = {'unsupported': str(e)}
    return {'f': f, 'g': g, 'boolean': workbench.boolean().equivalent(f, g).__getstate__(), 'options': options}


def cmd_judge(workbench, args):
    engine = workbench.prospect()
    rows = []
    for item in args.formulas:
        row = {'formula': item, 'canonical': str(workbench.formula(item))}
        row.update(engine.judge(item).__getstate__())
        rows.append(row)
    pairs = [compare(workbench, f, g) for f, g in itertools.combinations(args.formulas, 2)]
    return {'formulas': rows, 'pairs': pairs}, EXIT_OK


def cmd_equiv(workbench, args):
    return compare(workbench, args.f, args.g), EXIT_OK


def cmd_implicatures(workbench, args):
    engine = workbench.implicatures(opinionated=args.opinionated)
    return engine.project(args.formula).__getstate__(), EXIT_OK


def cmd_prob(workbench, args):
    engine = workbench.probability()
    denominator = workbench.denominator
    if args.theorem == 'explosion':
        b = workbench.formula(args.formula)
        grid = list(engine.grid(sorted({'A'} | set(formula.atom_names(b))), denominator))
        irrelevant = all(engine.check_explosion_irrelevance(d, b) for d in grid)
        return {'b': str(b), 'denominator': denominator, 'distributions': len(grid),
                'irrelevant': irrelevant}, EXIT_OK
    searches = {
        'frege': engine.check_frege_theorem,
        'corollary': engine.check_disjunction_corollary,
        'ordering': engine.check_relevance_ordering,
        'convexity': engine.check_disjoint_convexity
    }
    return searches[args.theorem](denominator).__getstate__(), EXIT_OK


def cmd_reproduce(workbench, args):
    records = claims.run_suite(workbench)
    first = utils.to_json(records)
    second = utils.to_json(claims.run_suite(workbench))
    records.append(claims.determinism_record(first, second))
    matched = sum(1 for record in records if record.matched)
    vacuous = sum(1 for record in records if record.status is RecordStatus.VACUOUS)
    for record in records:
        if record.failed:
            logging.warning('Claim {} does not match: expected {}, computed {}'
                            .format(record.claim_id, record.expected, record.computed))
        elif record.status is RecordStatus.VACUOUS:
            logging.warning('Claim {} holds vacuously'.format(record.claim_id))
    state = {'records': [record.__getstate__() for record in records], 'matched': matched, 'vacuous': vacuous,
             'total': len(records)}
    return state, EXIT_OK if matched + vacuous == len(records) else EXIT_MISMATCH


COMMANDS = {
    'laws': cmd_laws,
    'denote': cmd_denote,
    'judge': cmd_judge,
    'equiv': cmd_equiv,
    'implicatures': cmd_implicatures,
    'prob': cmd_prob,
    'reproduce': cmd_reproduce
}


def main(argv=None, corpus=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(message)s')
    try:
        workbench = Workbench(corpus=corpus, mode=args.mode, denominator=args.denominator)
        state, status = COMMANDS[args.command](workbench, args)
    except ValueError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render.render(args.command, state, args.format))
    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='\n') as out:
            out.write(utils.to_json(state) + '\n')
    return status


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()

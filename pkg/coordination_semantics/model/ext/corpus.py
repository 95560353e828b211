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

# Schematic renderings of the example sentences. A, B and C stand for the three
# clauses ("Anna is affable", "Brenda is benevolent", "Cindy is careful"); the
# bolded-comma prosody is rendered as explicit parentheses. The reduced forms
# (3a)-(4b) are entered through their sentential re-expansions.
CorpusEntries = {
    '1a': {
        'text': 'A and (B or C)',
        'gloss': 'Anna is affable, and Brenda is benevolent or Cindy is careful.'
    },
    '1b': {
        'text': '(A and B) or (A and C)',
        'gloss': 'Anna is affable and Brenda is benevolent, or Anna is affable and Cindy is careful.'
    },
    '2a': {
        'text': 'A or (B and C)',
        'gloss': 'Anna is affable, or Brenda is benevolent and Cindy is careful.'
    },
    '2b': {
        'text': '(A or B) and (A or C)',
        'gloss': 'Anna is affable or Brenda is benevolent, and Anna is affable or Cindy is careful.'
    },
    "2b'": {
        'text': '(A or B) and (C or A)',
        'gloss': 'Anna is affable or Brenda is benevolent, and Cindy is careful or Anna is affable.'
    },
    '3a': {
        'text': 'A or (B and C)',
        'gloss': 'Kim is affable, or she is benevolent and careful.'
    },
    '3b': {
        'text': '(A or B) and (A or C)',
        'gloss': 'Kim is affable or benevolent, and she is affable or careful.'
    },
    '4a': {
        'text': 'A or (B and C)',
        'gloss': 'Anna (came), or Brenda and Cindy came.'
    },
    '4b': {
        'text': '(A or B) and (A or C)',
        'gloss': 'Anna or Brenda (came), and Anna or Cindy came.'
    },
    '5a': {
        'text': 'A or (A and B)',
        'gloss': 'Anna is affable, or Anna is affable and Brenda is benevolent.'
    },
    '5b': {
        'text': 'A',
        'gloss': 'Anna is affable.'
    },
    '5c': {
        'text': 'A and (A or B)',
        'gloss': 'Anna is affable, and Anna is affable or Brenda is benevolent.'
    },
    "5c'": {
        'text': 'A and (B or A)',
        'gloss': 'Anna is affable, and Brenda is benevolent or Anna is affable.'
    },
    '6a': {
        'text': 'A or A',
        'gloss': 'Anna is affable or Anna is affable.'
    },
    '6b': {
        'text': 'A',
        'gloss': 'Anna is affable.'
    },
    '6c': {
        'text': 'A and A',
        'gloss': 'Anna is affable and Anna is affable.'
    }
}

CORPUS_ORDER = ['1a', '1b', '2a', '2b', "2b'", '3a', '3b', '4a', '4b', '5a', '5b', '5c', "5c'", '6a', '6b', '6c']

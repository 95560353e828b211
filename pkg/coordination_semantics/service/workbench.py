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

from coordination_semantics import utils
from coordination_semantics.exceptions import UnknownLabelError
from coordination_semantics.model import formula
from coordination_semantics.model import law_schema
from coordination_semantics.model.epistemic import ProjectionMode
from coordination_semantics.model.ext import corpus as corpus_registry
from coordination_semantics.semantics import boolean, implicature, probability, prospect
from coordination_semantics.syntax import parser


class Workbench:

    def __init__(self, corpus=None, mode=ProjectionMode.GAZDAR_DEFAULT, denominator=4):
        self.corpus = corpus
        self.mode = mode
        self.denominator = denominator
        self._parser = parser.FormulaParser()

    @property
    def corpus(self):
        return self._corpus

    @corpus.setter
    def corpus(self, value):
        if value is None:
            self._corpus = corpus_registry.CorpusEntries
            return
        if not isinstance(value, dict):
            raise ValueError('corpus should be of type dict!')
        for label, entry in value.items():
            if not isinstance(entry, dict) or not isinstance(entry.get('text'), str):
                raise ValueError('corpus entry {!r} should be a dict with a text of type str!'.format(label))
        self._corpus = value

    @property
    def mode(self):
        return self._mode

    @mode.setter
    def mode(self, value):
        try:
            self._mode = ProjectionMode.from_option(value)
        except ValueError:
            raise ValueError('mode should be of type ProjectionMode!') from None

    @property
    def denominator(self):
        return self._denominator

    @denominator.setter
    def denominator(self, value):
        if not isinstance(value, int) or isinstance(value, bool) or not \
                1 <= value <= probability.MAX_GRID_DENOMINATOR:
            raise ValueError('denominator should be an int between 1 and {}!'
                             .format(probability.MAX_GRID_DENOMINATOR))
        self._denominator = value

    def parse(self, text):
        try:
            return self._parser.parse(text)
        except ValueError as e:
            utils.handle_semantic_error(e, 'Parsing {!r}'.format(text))

    def corpus_lookup(self, label):
        if label not in self.corpus:
            logging.error('unknown corpus label {!r}'.format(label))
            raise UnknownLabelError('unknown corpus label {!r}; expected one of {}'
                                    .format(label, ', '.join(self.labels())))
        return self.parse(self.corpus[label]['text'])

    def labels(self):
        ordered = [label for label in corpus_registry.CORPUS_ORDER if label in self.corpus]
        return ordered + sorted(label for label in self.corpus if label not in ordered)

    def corpus_entries(self):
        """Returns (label, formula text, gloss) triples in corpus order."""
        return [(label, self.corpus[label]['text'], self.corpus[label].get('gloss', '')) for label in self.labels()]

    def formula(self, label_or_text):
        """A corpus label wins over formula text; '5b' and 'A' both resolve."""
        if isinstance(label_or_text, formula.Formula):
            return label_or_text
        if label_or_text in self.corpus:
            return self.corpus_lookup(label_or_text)
        return self.parse(label_or_text)

    def length_metric(self, label_or_text):
        return formula.length_metric(self.formula(label_or_text))

    def instantiate(self, schema, binding):
        return law_schema.instantiate(schema, {name: self.formula(value) for name, value in binding.items()})

    def boolean(self):
        return boolean.BooleanSemantics(self)

    def prospect(self):
        return prospect.ProspectSemantics(self)

    def implicatures(self, mode=None, opinionated=None):
        return implicature.ImplicatureEngine(self, self.mode if mode is None else mode, opinionated)

    def probability(self):
        return probability.RelevanceProbability(self)

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

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from coordination_semantics.exceptions import AspectConflictError, FormulaSyntaxError
from coordination_semantics.model import formula

# and binds tighter than xor, xor tighter than or; all three associate to the right
formula_grammar = r"""
    ?start: disjunction

    ?disjunction: exclusive
                | exclusive "or" disjunction     -> or_
    ?exclusive: conjunction
              | conjunction "xor" exclusive      -> xor_
    ?conjunction: negation
                | negation "and" conjunction     -> and_
    ?negation: "not" negation                    -> not_
             | atom
             | "(" disjunction ")"

    atom: NAME (":" ASPECT)?

    ASPECT: "stative" | "iterable"
    NAME: /[A-Za-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class FormulaBuilder(Transformer):
    """
    Builds formula nodes from the parse tree and records every atom occurrence with
    its annotation, so aspects can be resolved once the whole text is read.
    """
    def __init__(self):
        super().__init__()
        self.occurrences = []

    def atom(self, items):
        name = items[0]
        aspect = str(items[1]) if len(items) > 1 else None
        self.occurrences.append((str(name), aspect, name.start_pos))
        return formula.AtomNode(formula.Atom(str(name)))

    def not_(self, items):
        return formula.Not(items[0])

    def and_(self, items):
        return formula.And(items[0], items[1])

    def xor_(self, items):
        return formula.Xor(items[0], items[1])

    def or_(self, items):
        return formula.Or(items[0], items[1])


class FormulaParser:
    def __init__(self):
        self.parser = Lark(formula_grammar, start='start', parser='lalr')

    def parse(self, text):
        if not isinstance(text, str):
            raise ValueError('formula text should be of type str!')
        try:
            tree = self.parser.parse(text)
        except UnexpectedInput as e:
            raise self._syntax_error(text, e) from None
        builder = FormulaBuilder()
        result = builder.transform(tree)
        aspects = self._resolve_aspects(text, builder.occurrences)
        result = _with_aspects(result, aspects)
        result = formula.renumber(result)
        logging.debug('Parsed {!r} into {!r}'.format(text, result))
        return result

    @staticmethod
    def _syntax_error(text, error):
        position = getattr(error, 'pos_in_stream', None)
        if position is None or position < 0:
            position = len(text)
        if isinstance(error, UnexpectedCharacters):
            message = 'unexpected character {!r}'.format(text[position:position + 1])
        elif isinstance(error, UnexpectedEOF):
            message = 'unexpected end of input'
        elif isinstance(error, UnexpectedToken):
            if error.token.type == '$END':
                position = len(text)
                message = 'unexpected end of input'
            else:
                message = 'unexpected token {!r}'.format(str(error.token))
        else:
            message = 'syntax error'
        return FormulaSyntaxError(text, position, message)

    @staticmethod
    def _resolve_aspects(text, occurrences):
        # unannotated occurrences take the annotated aspect of their name, else stative
        aspects = {}
        for name, aspect, position in occurrences:
            if aspect is None:
                continue
            if name in aspects and aspects[name] != aspect:
                raise AspectConflictError(text, position,
                                          'atom {} annotated both {} and {}'.format(name, aspects[name], aspect))
            aspects[name] = aspect
        return {name: formula.Aspect(aspect) for name, aspect in aspects.items()}


def _with_aspects(f, aspects):
    if isinstance(f, formula.AtomNode):
        aspect = aspects.get(f.atom.name, formula.Aspect.STATIVE)
        return formula.AtomNode(formula.Atom(f.atom.name, aspect))
    return f.with_children(*[_with_aspects(child, aspects) for child in f.children])


_default_parser = None


def parse(text):
    global _default_parser
    if _default_parser is None:
        _default_parser = FormulaParser()
    return _default_parser.parse(text)

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

import itertools
import logging

from coordination_semantics import utils
from coordination_semantics.model import formula
from coordination_semantics.model.epistemic import (BeliefModel, EpistemicConstraint, ImplicatureReport, Polarity,
                                                    ProjectionMode, Provenance, Suppression, knows, knows_whether,
                                                    not_knows)
from coordination_semantics.semantics import base
from coordination_semantics.semantics.boolean import evaluate

MAX_EPISTEMIC_ATOMS = 4


class ImplicatureEngine(base.BaseSemantics):
    """
    Assertions and potential implicatures of a sentence, projected with assertion
    precedence. Consistency is decided over belief models: nonempty sets of worlds
    where K holds of what is true throughout and notK of what fails somewhere.
    """
    name = 'implicature'

    def __init__(self, workbench=None, mode=ProjectionMode.GAZDAR_DEFAULT, opinionated=None):
        super().__init__(workbench)
        self.mode = mode
        self.opinionated = opinionated

    @property
    def mode(self):
        return self._mode

    @mode.setter
    def mode(self, value):
        try:
            self._mode = ProjectionMode.from_option(value)
        except ValueError:
            raise ValueError('mode should be gazdar or soames') from None

    @property
    def opinionated(self):
        return self._opinionated

    @opinionated.setter
    def opinionated(self, values):
        if values is None:
            self._opinionated = frozenset()
            return
        values = frozenset(values)
        if not all(isinstance(v, int) for v in values):
            raise ValueError('opinionated should be a collection of or-node coefficient ids')
        self._opinionated = values

    def _prepare(self, f):
        f = self.resolve(f)
        self.check_atom_limit(formula.atom_names(f), MAX_EPISTEMIC_ATOMS)
        return f

    def assertions(self, f):
        f = self._prepare(f)
        result = [knows(f, Provenance.ASSERTION, ())]
        if isinstance(f, formula.And):
            result.extend(knows(node, Provenance.ASSERTION, path) for path, node in _conjuncts(f))
        return _unique(result)

    def potential_clausal(self, f):
        f = self._prepare(f)
        result = []
        for path, node in formula.walk(f):
            if isinstance(node, formula.Or):
                for disjunct in node.children:
                    result.append(not_knows(disjunct, Provenance.CLAUSAL, path))
                    result.append(not_knows(formula.Not(disjunct), Provenance.CLAUSAL, path))
        return _unique(result)

    def potential_scalar(self, f, mode=None, opinionated=None):
        f = self._prepare(f)
        mode = self.mode if mode is None else ProjectionMode.from_option(mode)
        opinionated = self.opinionated if opinionated is None else frozenset(opinionated)
        result = []
        for path, node in formula.walk(f):
            if isinstance(node, formula.Or):
                both = formula.And(node.left, node.right)
                result.append(not_knows(both, Provenance.SCALAR_WEAK, path))
                if mode is ProjectionMode.GAZDAR_DEFAULT or node.coeff_id in opinionated:
                    result.append(knows(formula.Not(both), Provenance.SCALAR_STRONG, path))
        return _unique(result)

    def _worlds(self, constraints):
        names = sorted({name for c in constraints for name in formula.atom_names(c.body)})
        self.check_atom_limit(names, MAX_EPISTEMIC_ATOMS)
        return list(utils.truth_table_rows(names))

    def consistent(self, constraints, minimal=True):
        """
        Returns (True, BeliefModel) when some belief model satisfies every constraint,
        else (False, None). With minimal, the model is the first smallest one in
        truth-table order.
        """
        constraints = list(constraints)
        if not all(isinstance(c, EpistemicConstraint) for c in constraints):
            raise ValueError('constraints should be of type EpistemicConstraint!')
        worlds = self._worlds(constraints)
        pool = [w for w in worlds
                if all(evaluate(c.body, w) for c in constraints if c.polarity is Polarity.K)]
        if not pool:
            return False, None
        monotone = all(c.polarity is not Polarity.KW for c in constraints)
        if monotone:
            # without KW, adding worlds never breaks a model, so the whole pool decides
            if not all(c.holds_in(pool, evaluate) for c in constraints):
                return False, None
            if not minimal:
                return True, BeliefModel(pool)
        for size in range(1, len(pool) + 1):
            for candidate in itertools.combinations(pool, size):
                if all(c.holds_in(candidate, evaluate) for c in constraints):
                    return True, BeliefModel(list(candidate))
        return False, None

    def entails(self, constraints, conclusion):
        constraints = list(constraints)
        if conclusion.polarity is Polarity.KW:
            counter = [not_knows(conclusion.body), not_knows(formula.Not(conclusion.body))]
        else:
            counter = [conclusion.negation()]
        satisfiable, _ = self.consistent(constraints + counter, minimal=False)
        return not satisfiable

    def _clash_partners(self, accepted, constraint):
        partners = list(accepted)
        for candidate in list(partners):
            rest = [c for c in partners if c is not candidate]
            if not self.consistent(rest + [constraint], minimal=False)[0]:
                partners = rest
        return partners

    def project(self, f, mode=None, opinionated=None):
        f = self._prepare(f)
        mode = self.mode if mode is None else ProjectionMode.from_option(mode)
        accepted = self.assertions(f)
        satisfiable, _ = self.consistent(accepted, minimal=False)
        if not satisfiable:
            # only a contradictory sentence gets here; its assertions still stand
            logging.warning('assertions of {} are jointly unsatisfiable'.format(f))
        candidates = self.potential_clausal(f) + self.potential_scalar(f, mode, opinionated)
        candidates = sorted(candidates, key=lambda c: (c.rank, c.source))
        suppressed = []
        seen = set(accepted)
        for constraint in candidates:
            if constraint in seen:
                continue
            seen.add(constraint)
            if self.consistent(accepted + [constraint], minimal=False)[0]:
                accepted.append(constraint)
                continue
            suppression = Suppression(constraint, self._clash_partners(accepted, constraint))
            logging.debug('Suppressed {}: {}'.format(constraint, suppression.reason))
            suppressed.append(suppression)
        model = self.consistent(accepted)[1]
        return ImplicatureReport(formula.unparse(f), mode, accepted, suppressed, model)

    def soames_derivation(self, f, coeff_id):
        """
        Checks that ignorance about each disjunct, the assertion of the disjunction and
        the presumption that the speaker knows whether both disjuncts hold jointly
        entail knowledge that they do not both hold. False when the premises are
        themselves inconsistent.
        """
        f = self._prepare(f)
        nodes = {node.coeff_id: (path, node) for path, node in formula.or_nodes(f)}
        if coeff_id not in nodes:
            raise ValueError('formula has no or-node with coefficient id {}'.format(coeff_id))
        path, node = nodes[coeff_id]
        both = formula.And(node.left, node.right)
        premises = [knows(node, Provenance.ASSERTION, path),
                    not_knows(node.left, Provenance.CLAUSAL, path),
                    not_knows(node.right, Provenance.CLAUSAL, path),
                    knows_whether(both, Provenance.CONTEXT, path)]
        if not self.consistent(premises, minimal=False)[0]:
            return False
        return self.entails(premises, knows(formula.Not(both), Provenance.SCALAR_STRONG, path))


def _conjuncts(f, path=()):
    if isinstance(f, formula.And):
        for index, child in enumerate(f.children):
            yield from _conjuncts(child, path + (index,))
    else:
        yield path, f


def _unique(constraints):
    seen = set()
    result = []
    for constraint in constraints:
        if constraint not in seen:
            seen.add(constraint)
            result.append(constraint)
    return result

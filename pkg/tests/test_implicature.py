import logging

import pytest

from coordination_semantics.exceptions import AtomLimitError
from coordination_semantics.model import formula
from coordination_semantics.model.epistemic import (BeliefModel, EpistemicConstraint, ImplicatureReport, Polarity,
                                                    ProjectionMode, Provenance, knows, knows_whether, not_knows)
from coordination_semantics.semantics.implicature import ImplicatureEngine
from coordination_semantics.syntax.parser import parse


def names(constraints):
    return [str(c) for c in constraints]


@pytest.fixture
def engine(workbench):
    return workbench.implicatures()


def test_constraint_identity():
    assert not_knows(parse('A'), Provenance.CLAUSAL, (0,)) == not_knows(parse('A'), Provenance.SCALAR_WEAK, (0,))
    assert not_knows(parse('A'), Provenance.CLAUSAL, (0,)) != not_knows(parse('A'), Provenance.CLAUSAL, (1,))
    assert knows(parse('A')) != not_knows(parse('A'))
    with pytest.raises(ValueError):
        EpistemicConstraint(Polarity.K, 'A')
    with pytest.raises(ValueError):
        EpistemicConstraint(Polarity.K, parse('A'), source=[0])


def test_negation():
    assert knows(parse('A')).negation().polarity is Polarity.NOT_K
    assert not_knows(parse('A')).negation().polarity is Polarity.K
    with pytest.raises(ValueError):
        knows_whether(parse('A')).negation()


def test_projection_mode_aliases():
    assert ProjectionMode.from_option('gazdar') is ProjectionMode.GAZDAR_DEFAULT
    assert ProjectionMode.from_option('soames_conditional') is ProjectionMode.SOAMES_CONDITIONAL
    with pytest.raises(ValueError):
        ProjectionMode.from_option('grice')
    with pytest.raises(ValueError):
        ImplicatureEngine(mode='grice')


def test_assertions(engine):
    assert names(engine.assertions('5c')) == ['K(A and (A or B))', 'K(A)', 'K(A or B)']
    assert names(engine.assertions('6a')) == ['K(A or A)']


def test_potential_clausal(engine):
    assert names(engine.potential_clausal('A or B')) == ['notK(A)', 'notK(not A)', 'notK(B)', 'notK(not B)']
    assert names(engine.potential_clausal('6a')) == ['notK(A)', 'notK(not A)']
    assert engine.potential_clausal('A and B') == []
    assert len(engine.potential_clausal('2b')) == 8


def test_potential_scalar(engine):
    assert names(engine.potential_scalar('A or B', 'gazdar')) == ['notK(A and B)', 'K(not (A and B))']
    assert names(engine.potential_scalar('A or B', 'soames')) == ['notK(A and B)']
    assert names(engine.potential_scalar('A or B', 'soames', opinionated=[0])) == \
        ['notK(A and B)', 'K(not (A and B))']
    assert [c.provenance for c in engine.potential_scalar('A or B')] == \
        [Provenance.SCALAR_WEAK, Provenance.SCALAR_STRONG]


def test_consistent(engine):
    a, b = parse('A'), parse('B')
    assert engine.consistent([knows(a), not_knows(a)]) == (False, None)
    satisfiable, model = engine.consistent([knows(parse('A or B')), not_knows(a), not_knows(b)])
    assert satisfiable
    assert model == BeliefModel([{'A': True, 'B': False}, {'A': False, 'B': True}])
    assert str(model) == '{A=1,B=0; A=0,B=1}'


def test_consistent_with_knows_whether(engine):
    a = parse('A')
    assert engine.consistent([knows_whether(a), not_knows(a), not_knows(formula.Not(a))]) == (False, None)
    satisfiable, model = engine.consistent([knows_whether(parse('A and B')), not_knows(a)])
    assert satisfiable
    assert len(model) == 1


def test_consistent_rejects_other_values(engine):
    with pytest.raises(ValueError):
        engine.consistent(['K(A)'])


def test_entails(engine):
    assert engine.entails([knows(parse('A and B'))], knows(parse('A')))
    assert not engine.entails([knows(parse('A or B'))], knows(parse('A')))
    assert engine.entails([knows(parse('A'))], knows_whether(parse('A')))


@pytest.mark.parametrize('label, expected', [
    ('6a', {'notK(A)': ['K(A or A)']}),
    ('5c', {'notK(A)': ['K(A)']}),
    ('5a', {'notK(A)': ['K(A or A and B)']})
])
def test_clausal_suppressions(engine, label, expected):
    report = engine.project(label)
    found = {str(s.constraint): names(s.clash_partners)
             for s in report.suppressed if s.constraint.provenance is Provenance.CLAUSAL}
    assert found == expected


def test_hobson_keeps_ignorance_of_negation(engine):
    report = engine.project('6a')
    assert 'notK(not A)' in names(report.accepted)
    assert 'notK(A)' in names(report.suppressed_constraints())


def test_distributed_disjunction_keeps_everything(engine):
    report = engine.project('2b', mode='gazdar')
    counts = [len(report.accepted_of(p)) for p in
              (Provenance.ASSERTION, Provenance.CLAUSAL, Provenance.SCALAR_WEAK, Provenance.SCALAR_STRONG)]
    assert counts == [3, 8, 2, 2]
    assert report.suppressed == []


def test_accepted_constraints_are_satisfiable(workbench):
    for mode in ('gazdar', 'soames'):
        engine = workbench.implicatures(mode=mode)
        for label in workbench.labels():
            report = engine.project(label)
            satisfiable, model = engine.consistent(report.accepted)
            assert satisfiable, label
            assert model == report.model


def test_suppression_is_logged(engine, caplog):
    with caplog.at_level(logging.DEBUG):
        engine.project('6a')
    assert 'Suppressed notK(A): clashes with K(A or A)' in caplog.text


def test_report_state(engine):
    state = engine.project('6a').__getstate__()
    assert state['formula'] == 'A or A'
    assert state['mode'] == 'gazdar_default'
    assert all(item['status'] == 'accepted' for item in state['accepted'])
    assert state['suppressed'][0]['clash_partners'] == ['K(A or A)']
    assert state['belief_model'] == [{'A': 1}]


def test_report_validation():
    with pytest.raises(ValueError):
        ImplicatureReport('A', 'gazdar', accepted=['K(A)'])


def test_soames_derivation(engine):
    assert engine.soames_derivation('A or B', 0)
    with pytest.raises(ValueError):
        engine.soames_derivation('A or B', 3)


def test_atom_limit(engine):
    with pytest.raises(AtomLimitError):
        engine.project('A or B or C or D or E')


def test_opinionated_validation():
    with pytest.raises(ValueError):
        ImplicatureEngine(opinionated=['0'])


def test_clash_partners_never_outrank_the_suppressed(workbench):
    for mode in ('gazdar', 'soames'):
        engine = workbench.implicatures(mode=mode)
        for label in workbench.labels():
            for suppression in engine.project(label).suppressed:
                assert all(c.rank <= suppression.constraint.rank for c in suppression.clash_partners), label


def test_dropping_strong_scalars_keeps_higher_priority_decisions(workbench):
    higher = (Provenance.ASSERTION, Provenance.CLAUSAL, Provenance.SCALAR_WEAK)
    gazdar = workbench.implicatures(mode='gazdar')
    soames = workbench.implicatures(mode='soames')
    for label in workbench.labels():
        with_strong, without_strong = gazdar.project(label), soames.project(label)
        for provenance in higher:
            assert names(with_strong.accepted_of(provenance)) == names(without_strong.accepted_of(provenance)), label
        suppressed = [[str(c) for c in report.suppressed_constraints() if c.provenance in higher]
                      for report in (with_strong, without_strong)]
        assert suppressed[0] == suppressed[1], label
        opinionated = soames.project(label, opinionated=formula.coeff_ids(workbench.formula(label)))
        for provenance in higher:
            assert names(opinionated.accepted_of(provenance)) == names(without_strong.accepted_of(provenance)), label


def test_projection_is_deterministic(workbench):
    engine = workbench.implicatures()
    for label in workbench.labels():
        first = engine.project(label).__getstate__()
        assert engine.project(label).__getstate__() == first
        assert ImplicatureEngine(workbench).project(label).__getstate__() == first

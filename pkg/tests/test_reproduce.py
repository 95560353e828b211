import logging
import re

import jsonpickle
import pytest

from coordination_semantics.model.report_record import RecordStatus, ReportRecord
from coordination_semantics.report import claims, cli


def test_record_status():
    record = ReportRecord('laws.classical.Dis.1', {'connectives': 'classical'}, 'valid', 'valid')
    assert record.status is RecordStatus.MATCH
    assert str(record) == 'match laws.classical.Dis.1'
    assert 'detail' not in record.__getstate__()
    assert not ReportRecord('x', {}, [1], [2]).matched
    assert ReportRecord('x', {}, [1], [2]).failed


def test_vacuous_record_is_not_a_match():
    record = ReportRecord('prob.ordering.4', {'denominator': 4}, 'no_counterexample', 'no_counterexample',
                          vacuous=True)
    assert record.status is RecordStatus.VACUOUS
    assert not record.matched
    assert not record.failed
    restored = ReportRecord('x', {}, None, None)
    restored.__setstate__(record.__getstate__())
    assert restored.status is RecordStatus.VACUOUS
    assert ReportRecord('x', {}, 1, 2, vacuous=True).status is RecordStatus.MISMATCH


def test_record_validation():
    with pytest.raises(ValueError):
        ReportRecord('', {}, 1, 1)
    with pytest.raises(ValueError):
        ReportRecord('x', [], 1, 1)
    with pytest.raises(ValueError):
        ReportRecord('x', {}, 1, 1, vacuous='yes')


def test_failing_claim_is_a_mismatch(caplog):
    def compute():
        raise ValueError('no options')
    record = claims.check('broken', {}, True, compute)
    assert not record.matched
    assert record.computed == {'error': 'ValueError'}
    assert 'Claim broken failed with ValueError: no options' in caplog.text


def test_every_claim_matches(workbench):
    records = claims.run_suite(workbench)
    assert [record.claim_id for record in records if record.failed] == []
    assert [record.claim_id for record in records if record.status is RecordStatus.VACUOUS] == ['prob.ordering.4']
    assert len({record.claim_id for record in records}) == len(records)


def test_ordering_claims_require_qualifying_distributions(workbench):
    records = {record.claim_id: record for record in claims.probability_claims(workbench)}
    assert records['prob.ordering.8'].status is RecordStatus.MATCH
    assert records['prob.ordering.8'].computed == {'status': 'no_counterexample', 'premises_met': 9}
    assert records['prob.ordering.4'].computed == {'status': 'no_counterexample', 'premises_met': 0}
    assert records['prob.ordering.4'].detail['vacuous']


def test_reproduce(capsys, caplog):
    with caplog.at_level(logging.WARNING):
        status = cli.main(['reproduce'])
    out = capsys.readouterr().out
    assert status == cli.EXIT_OK
    matched, count, vacuous = re.match(r'(\d+)/(\d+) claims match, (\d+) vacuous', out.splitlines()[-1]).groups()
    assert int(matched) + int(vacuous) == int(count)
    assert vacuous == '1'
    assert 'match    determinism.reproduce' in out
    assert 'vacuous  prob.ordering.4' in out
    assert 'match    prob.ordering.8' in out
    assert 'Claim prob.ordering.4 holds vacuously' in caplog.text


def test_reproduce_is_byte_identical(capsys):
    cli.main(['reproduce', '--format', 'json'])
    first = capsys.readouterr().out
    cli.main(['reproduce', '--format', 'json'])
    assert capsys.readouterr().out == first


def test_tampered_corpus_mismatches(capsys, caplog, tampered_corpus):
    with caplog.at_level(logging.WARNING):
        status = cli.main(['reproduce', '--format', 'json'], corpus=tampered_corpus)
    state = jsonpickle.decode(capsys.readouterr().out)
    assert status == cli.EXIT_MISMATCH
    statuses = {record['claim_id']: record['status'] for record in state['records']}
    assert statuses['appendix.options.2b'] == 'mismatch'
    assert statuses['appendix.options.1b'] == 'match'
    assert state['matched'] + state['vacuous'] < state['total']
    assert 'Claim appendix.options.2b does not match' in caplog.text

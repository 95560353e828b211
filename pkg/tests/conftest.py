import pytest

from coordination_semantics.model.ext.corpus import CorpusEntries
from coordination_semantics.service.workbench import Workbench


@pytest.fixture
def workbench():
    return Workbench()


@pytest.fixture
def tampered_corpus():
    corpus = {label: dict(entry) for label, entry in CorpusEntries.items()}
    corpus['2b'] = dict(CorpusEntries['1b'])
    return corpus

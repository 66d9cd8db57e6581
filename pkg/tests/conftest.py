import pytest

from palimpsest import CorpusStore, DetectionParams, TextPipeline, build_index
from palimpsest.fixtures import fixture_gold, install_fixture_corpus


@pytest.fixture(scope="session")
def fixture_store(tmp_path_factory):
    store = CorpusStore(tmp_path_factory.mktemp("corpora"))
    install_fixture_corpus(store)
    return store


@pytest.fixture(scope="session")
def fixture_corpus(fixture_store):
    return fixture_store.load_corpus("demo")


@pytest.fixture(scope="session")
def french_pipeline():
    return TextPipeline("fr")


@pytest.fixture(scope="session")
def fixture_index(fixture_corpus, french_pipeline):
    return build_index(fixture_corpus, french_pipeline, DetectionParams())


@pytest.fixture(scope="session")
def fixture_gold_spans(fixture_corpus):
    return fixture_gold(fixture_corpus)

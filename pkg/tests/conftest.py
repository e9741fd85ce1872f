import pytest

from newscaster.resources import default_lexicon, load_resources


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def resources():
    return load_resources()

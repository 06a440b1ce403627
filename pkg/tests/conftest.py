from pathlib import Path

import pytest

from propnet import default_lexicon, load_conllu

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    with open(DATA / "golden.conllu", encoding="utf-8") as f:
        return {s.sentence_id: s for s in load_conllu(f)}


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()

from pathlib import Path

import pytest
from pydantic import ValidationError

from lrpoles._combinatorics import LRViolation, PoleDecomposition
from lrpoles._io import DecompositionFile, EmbeddingFile, TableauFile, load

DATA = Path(__file__).parent.parent / "data"


def test_chain_and_grid_files_agree(worked):
    assert load(TableauFile, DATA / "worked.json").tableau() == worked
    assert TableauFile(chain=[list(level) for level in worked.chain]).tableau() == worked
    assert TableauFile.from_tableau(worked).grid is None


def test_tableau_file_needs_one_form():
    with pytest.raises(ValidationError, match="exactly one of 'chain' and 'grid'"):
        TableauFile()
    with pytest.raises(ValidationError, match="exactly one of 'chain' and 'grid'"):
        TableauFile(chain=[[1]], grid=[[1]])


def test_garbage_fails_certification():
    with pytest.raises(LRViolation) as err:
        load(TableauFile, DATA / "garbage.json").tableau()
    assert err.value.box == (1, 5)


def test_decomposition_file():
    d = load(DecompositionFile, DATA / "decomposition.json").decomposition()
    assert d == PoleDecomposition(((0, 1), (0, 2, 3), (2,)))


def test_embedding_file():
    e = load(EmbeddingFile, DATA / "embedding.json").instance()
    assert e.p == 3
    assert e.ambient.blocks == (2, 1)
    assert e.to_dict() == {"p": 3, "beta": [2, 1], "generators": [[0, 1, 1]]}


def test_embedding_prime_is_checked():
    with pytest.raises(ValidationError, match="4 is not a prime"):
        EmbeddingFile(p=4, beta=[1])

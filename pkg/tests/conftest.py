"""Shared test fixtures."""
import pytest

from lrpoles._combinatorics import enumerate_lr, validate_lr

INTRO = ((3, 2), (5, 4, 3, 2, 1), (4, 3, 2, 1))


# ---- Slow sweeps ----
# Tests marked @pytest.mark.slow run exhaustive sweeps or certify every
# box move of a shape. Off by default; opt in with `pytest --slow`.

def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the exhaustive sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep (opt in with --slow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="slow test (run with --slow)")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# ---- The five tableaux of shape (5,4,3,2,1) \ (4,3,2,1), content (3,2) ----

@pytest.fixture
def intro():
    """Tableaux by name: G1 .. G4, with G3a and G3b the incomparable pair."""
    chains = {
        "G1": [(4, 3, 2, 1), (4, 4, 2, 1, 1), (5, 4, 2, 2, 1), (5, 4, 3, 2, 1)],
        "G2": [(4, 3, 2, 1), (4, 3, 3, 1, 1), (5, 3, 3, 2, 1), (5, 4, 3, 2, 1)],
        "G3a": [(4, 3, 2, 1), (4, 3, 2, 2, 1), (5, 3, 3, 2, 1), (5, 4, 3, 2, 1)],
        "G3b": [(4, 3, 2, 1), (4, 3, 3, 1, 1), (4, 4, 3, 2, 1), (5, 4, 3, 2, 1)],
        "G4": [(4, 3, 2, 1), (4, 3, 2, 2, 1), (4, 4, 3, 2, 1), (5, 4, 3, 2, 1)],
    }
    return {name: validate_lr(chain) for name, chain in chains.items()}


@pytest.fixture
def intro_nodes():
    return enumerate_lr(*INTRO)


@pytest.fixture
def worked():
    """Tableau with two classes of partial maps, one of them EBP."""
    return validate_lr([(2, 2), (3, 2, 1, 1), (3, 3, 2, 1), (4, 3, 2, 1)])

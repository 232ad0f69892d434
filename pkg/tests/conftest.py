import sys
from pathlib import Path

import pytest

from arrtopo.arrangement import lattice_of
from arrtopo.exactlin import canonicalize

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).resolve().parent.parent / "data"


def line(a, b, c):
    """The line a*x + b*y = c in Q^2."""
    return canonicalize([[a, b]], [c], 2)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def three_lines():
    return lattice_of([line(0, 1, 0), line(1, 0, 0), line(1, -1, 0)], 2)


@pytest.fixture
def parallel_lines():
    return lattice_of([line(0, 1, 0), line(0, 1, 1)], 2)


@pytest.fixture
def axes():
    return lattice_of([line(1, 0, 0), line(0, 1, 0)], 2)

import pytest

from kleindoubles.signatures import TopType


def bordered_grid(gmax, kmax, orientable=False):
    return [TopType(g, orientable, k) for g in range(1, gmax + 1) for k in range(1, kmax + 1)]


@pytest.fixture
def grid55():
    return bordered_grid(5, 5)

import itertools

import pytest

from hyperboot import Configuration, HypergraphModel


def cfg(sets, n, j=None):
    sets = [tuple(s) for s in sets]
    if j is None:
        j = len(sets[0])
    return Configuration.from_sets(sets, n, j)


def all_sets(n, j):
    return list(itertools.combinations(range(1, n + 1), j))


@pytest.fixture
def K():
    return HypergraphModel.complete

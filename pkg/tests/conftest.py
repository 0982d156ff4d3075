"""
Pytest configuration and fixtures for jacklab tests.
"""

import pytest

from jacklab.algebra.partitions import Partition
from jacklab.combinatorics.matchings import Matching
from jacklab.core.config import settings


def P(*parts: int) -> Partition:
    return Partition.of(*parts)


@pytest.fixture
def worked_triple():
    """(π, σ, μ) of the worked top-degree example: 72 hands-shaking outcomes."""
    return P(3, 2), P(3, 3), P(3, 3)


@pytest.fixture
def torus_matching():
    """The single bipartite matching in G^{(3);(3)}_{(3),(3)}; it glues a hexagon into a torus."""
    return Matching.parse("[[1,3^],[2,1^],[3,2^]]")


@pytest.fixture
def sequential_workers(monkeypatch):
    """Run suites on one worker thread."""
    monkeypatch.setattr(settings, "JACKLAB_THREADS", 1)
    yield settings

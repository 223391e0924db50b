import pytest

from erideals.graph import Graph, sample_er


@pytest.fixture
def random_graphs():
    """A fixed batch of small random graphs across densities."""
    return [sample_er(4 + i % 6, (1 + i % 9) / 10, 7, i) for i in range(150)]


def pentagon() -> Graph:
    return Graph.cycle(5)

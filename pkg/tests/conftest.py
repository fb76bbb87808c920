import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mvgraph import generators
from mvgraph.graph import from_edge_list


@pytest.fixture
def p3():
    return from_edge_list(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4():
    return generators.generate(generators.cycle(4))


@pytest.fixture
def c5():
    return generators.generate(generators.cycle(5))


def small_connected_graphs(seed=0, count=30):
    """A varied bag of small connected graphs for randomized property checks."""
    import numpy as np

    rng = np.random.Generator(np.random.PCG64(seed))
    graphs = []
    while len(graphs) < count:
        n = int(rng.integers(2, 12))
        kind = int(rng.integers(0, 4))
        if kind == 0:
            spec = generators.tree(n)
        elif kind == 1:
            spec = generators.cycle(max(n, 3))
        elif kind == 2:
            spec = generators.erdos_renyi(n, float(rng.uniform(0.25, 0.8)))
        else:
            spec = generators.complete(n)
        graphs.append(generators.generate(spec, int(rng.integers(0, 2**32))))
    return graphs

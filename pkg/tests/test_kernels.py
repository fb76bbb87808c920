"""Backend agreement: the compiled kernels must match the pure-Python ones."""

import numpy as np
import pytest

from mvgraph import _pykernels, kernels
from mvgraph import generators as gen
from mvgraph.graph import all_pairs_distances


compiled = pytest.importorskip("mvgraph._speedups")


def _graphs():
    yield gen.generate(gen.path(7))
    yield gen.generate(gen.grid(4, 5))
    yield gen.generate(gen.petersen(7, 2))
    for seed in range(4):
        yield gen.generate(gen.erdos_renyi(20, 0.2), seed)


@pytest.mark.parametrize("g", list(_graphs()), ids=lambda g: f"n{g.n}m{g.m}")
def test_all_pairs_agree(g):
    a = compiled.all_pairs_bfs(g.indptr, g.indices, g.n)
    b = _pykernels.all_pairs_bfs(g.indptr, g.indices, g.n)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("g", list(_graphs()), ids=lambda g: f"n{g.n}m{g.m}")
def test_violation_pairs_agree(g):
    dist = all_pairs_distances(g).dist
    rng = np.random.Generator(np.random.PCG64(g.n + g.m))
    for _ in range(10):
        k = int(rng.integers(0, g.n + 1))
        members = np.sort(rng.choice(g.n, size=k, replace=False)).astype(np.int32)
        a = compiled.violation_pairs(g.indptr, g.indices, dist, members)
        b = _pykernels.violation_pairs(g.indptr, g.indices, dist, members)
        assert np.array_equal(a, b)


def test_selected_backend_exposed():
    assert kernels.BACKEND in ("cython", "python")

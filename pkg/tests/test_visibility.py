import math
from itertools import combinations

import numpy as np
import pytest

from mvgraph import generators as gen
from mvgraph.graph import all_pairs_distances, from_edge_list
from mvgraph.visibility import (
    clique_lower_bound,
    degree_lower_bound,
    hypergraph_bound,
    is_mv_set,
    violations,
    x_visible,
)

from conftest import small_connected_graphs
from oracles import mv_oracle, violating_pairs_oracle


def test_x_visible_blocked_path(p3):
    d = all_pairs_distances(p3)
    assert not x_visible(p3, d, 0, 2, {0, 1, 2})


def test_x_visible_complete():
    k6 = gen.generate(gen.complete(6))
    d = all_pairs_distances(k6)
    assert x_visible(k6, d, 0, 5, set(range(6)))


def test_x_visible_second_path(c4):
    # 0-1-2 is blocked but 0-3-2 is not
    d = all_pairs_distances(c4)
    assert x_visible(c4, d, 0, 2, {0, 1, 2})


def test_x_visible_symmetric():
    for g in small_connected_graphs(seed=5, count=10):
        d = all_pairs_distances(g)
        members = set(range(0, g.n, 2))
        for u, v in combinations(range(g.n), 2):
            assert x_visible(g, d, u, v, members) == x_visible(g, d, v, u, members)


def test_violations_p3(p3):
    rep = violations(p3, {0, 1, 2})
    assert rep.count == 1 and rep.pairs == ((0, 2),)


def test_violations_c5(c5):
    assert violations(c5, {0, 1, 3}).count == 0


def test_small_sets_are_mv():
    for g in small_connected_graphs(seed=1, count=10):
        for v in range(g.n):
            assert violations(g, {v}).count == 0
        for u, v in combinations(range(g.n), 2):
            assert violations(g, {u, v}).count == 0


def test_unreachable_pair_is_violation():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert violations(g, {0, 2}).count == 1


def test_violations_match_oracle():
    for g in small_connected_graphs(seed=2, count=15):
        rng = np.random.Generator(np.random.PCG64(g.n * 1000 + g.m))
        for _ in range(6):
            k = int(rng.integers(0, g.n + 1))
            members = set(int(x) for x in rng.choice(g.n, size=k, replace=False))
            rep = violations(g, members)
            assert sorted(rep.pairs) == violating_pairs_oracle(g, members)


def test_checker_equivalence_structured_graphs():
    # paths, cycles, grids up to 9 vertices against the all-paths oracle
    graphs = [
        gen.generate(gen.path(n)) for n in range(2, 10)
    ] + [
        gen.generate(gen.cycle(n)) for n in range(3, 10)
    ] + [gen.generate(gen.grid(3, 3))]
    for g in graphs:
        for size in range(1, min(g.n, 5) + 1):
            for members in combinations(range(g.n), size):
                assert is_mv_set(g, members) == mv_oracle(g, members)


def test_hereditary_property():
    rng = np.random.Generator(np.random.PCG64(99))
    for g in small_connected_graphs(seed=3, count=12):
        k = int(rng.integers(1, g.n + 1))
        members = set(int(x) for x in rng.choice(g.n, size=k, replace=False))
        if violations(g, members).count:
            continue
        for _ in range(4):
            keep = {v for v in members if rng.random() < 0.6}
            assert violations(g, keep).count == 0


def test_degree_lower_bound_star():
    star = from_edge_list(10, [(0, i) for i in range(1, 10)])
    value, witness = degree_lower_bound(star)
    assert value == 9 and witness == set(range(1, 10))
    assert violations(star, witness).count == 0


def test_degree_lower_bound_complete():
    k10 = gen.generate(gen.complete(10))
    value, witness = degree_lower_bound(k10)
    assert value == 9 and witness == set(range(1, 10))


def test_degree_lower_bound_cycle():
    c6 = gen.generate(gen.cycle(6))
    value, witness = degree_lower_bound(c6)
    assert value == 2 and witness == {1, 5}
    assert violations(c6, witness).count == 0


def test_degree_witness_always_verifies():
    for g in small_connected_graphs(seed=4, count=20):
        value, witness = degree_lower_bound(g)
        assert len(witness) == value
        assert violations(g, witness).count == 0


def test_clique_lower_bound():
    assert clique_lower_bound(gen.generate(gen.complete(7))) == 7
    assert clique_lower_bound(gen.generate(gen.tree(9), 2)) == 2
    assert clique_lower_bound(gen.generate(gen.cycle(5))) == 2


def test_cliques_are_mv():
    for seed in range(5):
        g = gen.generate(gen.erdos_renyi(12, 0.5), seed)
        # re-run the greedy to recover the clique itself
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        clique = []
        neigh = [set(a) for a in g.adjacency]
        for v in order:
            if all(v in neigh[u] for u in clique):
                clique.append(v)
        assert len(clique) == clique_lower_bound(g)
        assert violations(g, clique).count == 0


def test_hypergraph_bound_values(p3):
    k10 = gen.generate(gen.complete(10))
    assert hypergraph_bound(k10) == pytest.approx(math.sqrt(10))
    assert hypergraph_bound(p3) == pytest.approx(1.5)
    k2 = gen.generate(gen.complete(2))
    assert hypergraph_bound(k2) == pytest.approx(math.sqrt(2))

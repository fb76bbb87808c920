import pytest

from mvgraph import generators as gen
from mvgraph.errors import GraphError
from mvgraph.generators import GraphClass, MuKind
from mvgraph.graph import from_edge_list, is_connected, leaves
from mvgraph.graphio import write_graph_text
from mvgraph.solvers import exact_mu


def test_grid_sizes():
    g = gen.generate(gen.grid(3, 4))
    assert g.n == 12 and g.m == 17  # 3*3 + 2*4 column/row edges


def test_petersen():
    g = gen.generate(gen.petersen(5, 2))
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_torus_regular():
    g = gen.generate(gen.torus(3, 4))
    assert g.n == 12 and g.m == 24
    assert all(g.degree(v) == 4 for v in range(12))


def test_er_determinism():
    a = gen.generate(gen.erdos_renyi(10, 0.3), 123)
    b = gen.generate(gen.erdos_renyi(10, 0.3), 123)
    assert a == b
    assert write_graph_text(a) == write_graph_text(b)


def test_tree_determinism_and_shape():
    for seed in (0, 1, 99):
        t = gen.generate(gen.tree(30), seed)
        assert t.m == 29 and is_connected(t)
        assert t == gen.generate(gen.tree(30), seed)


def test_mycielskian_counts():
    c5 = gen.generate(gen.cycle(5))
    m = gen.mycielskian(c5)
    assert m.n == 11 and m.m == 20  # 3m + n


def test_mycielskian_k2_is_c5():
    m = gen.mycielskian(from_edge_list(2, [(0, 1)]))
    assert m.n == 5 and m.m == 5
    # connected and 2-regular on 5 vertices: that is C5, up to isomorphism
    assert is_connected(m)
    assert sorted(m.degree(v) for v in range(5)) == [2, 2, 2, 2, 2]


def test_mycielskian_k1():
    m = gen.mycielskian(from_edge_list(1, []))
    assert m.n == 3 and m.m == 1


def test_mycielskian_size_formula():
    for seed in range(4):
        g = gen.generate(gen.erdos_renyi(8, 0.4), seed)
        m = gen.mycielskian(g)
        assert m.n == 2 * g.n + 1
        assert m.m == 3 * g.m + g.n


def test_invalid_parameters():
    with pytest.raises(GraphError):
        gen.petersen(5, 3)  # k must stay below n/2
    with pytest.raises(GraphError):
        gen.erdos_renyi(10, 0.0)
    with pytest.raises(GraphError):
        gen.torus(2, 5)
    with pytest.raises(GraphError):
        gen.complete(0)


def test_known_mu_table():
    cases = [
        (gen.complete(10), MuKind.EXACT, 10),
        (gen.grid(5, 7), MuKind.EXACT, 10),
        (gen.grid(3, 4), MuKind.UNKNOWN, None),
        (gen.torus(10, 10), MuKind.UPPER_BOUND, 30),
        (gen.torus(12, 20), MuKind.EXACT, 36),
        (gen.mycielskian_cycle(8), MuKind.EXACT, 10),
        (gen.mycielskian_cycle(4), MuKind.EXACT, 6),
        (gen.mycielskian_cycle(3), MuKind.UNKNOWN, None),
        (gen.mycielskian_path(4), MuKind.EXACT, 6),
        (gen.mycielskian_path(9), MuKind.EXACT, 11),
        (gen.mycielskian_star(4), MuKind.EXACT, 9),
        (gen.petersen(7, 2), MuKind.UNKNOWN, None),
        (gen.erdos_renyi(10, 0.5), MuKind.UNKNOWN, None),
    ]
    for spec, kind, value in cases:
        g = gen.generate(spec, 0)
        known = gen.known_mu(spec, g)
        assert known.kind is kind, spec.label()
        assert known.value == value, spec.label()


def test_known_mu_tree_uses_leaves():
    spec = gen.tree(12)
    g = gen.generate(spec, 5)
    assert gen.known_mu(spec, g).value == len(leaves(g))


def test_known_mu_rejects_mismatch():
    g = gen.generate(gen.path(4))
    with pytest.raises(GraphError, match="does not match"):
        gen.known_mu(gen.path(5), g)


def test_spec_labels_round_trip():
    for spec in [gen.grid(3, 4), gen.erdos_renyi(10, 0.3), gen.petersen(5, 2)]:
        assert gen.parse_spec(spec.label()) == spec


def test_suite_n10():
    suite = gen.build_suite("n10", 42)
    labels = [inst.spec.label() for inst in suite]
    assert "Complete(10)" in labels
    k10 = suite[labels.index("Complete(10)")]
    assert k10.known.kind is MuKind.EXACT and k10.known.value == 10
    assert all(is_connected(inst.graph) for inst in suite)
    assert len({inst.id for inst in suite}) == len(suite)


def test_suite_deterministic():
    a = gen.build_suite("n10", 7)
    b = gen.build_suite("n10", 7)
    assert [i.id for i in a] == [i.id for i in b]
    assert all(x.graph == y.graph for x, y in zip(a, b))


def test_suite_n100_sizes():
    suite = gen.build_suite("n100", 3)
    assert all(80 <= inst.graph.n <= 120 for inst in suite)
    assert all(is_connected(inst.graph) for inst in suite)


def test_exact_formula_small_instances():
    # every exactly-known class the oracle can reach agrees with the formula
    specs = [gen.complete(5), gen.tree(9), gen.path(8), gen.mycielskian_star(3)]
    for seed, spec in enumerate(specs):
        g = gen.generate(spec, seed)
        known = gen.known_mu(spec, g)
        assert known.kind is MuKind.EXACT
        mu, _ = exact_mu(g)
        assert mu == known.value, spec.label()


def test_manifest_shape():
    suite = gen.build_suite("n10", 1)
    lines = gen.manifest_lines(suite)
    assert lines[0] == gen.MANIFEST_HEADER
    assert len(lines) == len(suite) + 1
    assert all(len(line.split("\t")) == 9 for line in lines[1:])

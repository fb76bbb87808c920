"""Graph-class generators, validation values for mu(G), and benchmark suites.

Canonical labelings:
  Path/Cycle      vertices 0..n-1 along the path/cycle
  Grid(m, n)      row-major, id = i*n + j
  Torus(m, n)     grid plus wrap edges in both dimensions (m, n >= 3)
  Star(k)         center 0, leaves 1..k
  Mycielskian     originals keep ids, shadow of v_i is n+i, apex is 2n
  Petersen(n, k)  outer cycle 0..n-1, inner n..2n-1, spokes i <-> n+i,
                  inner edges n+i <-> n+((i+k) mod n)
  Tree(n)         uniform labeled tree decoded from a random Pruefer sequence
  ErdosRenyi      resampled (fresh substream per attempt) until connected
"""

from __future__ import annotations

import enum
import hashlib
import heapq
from dataclasses import dataclass

import numpy as np

from .errors import GenerationError, GraphError
from .graph import Graph, from_edge_list, is_connected, leaves

ER_MAX_ATTEMPTS = 1000


class GraphClass(enum.Enum):
    COMPLETE = "Complete"
    TREE = "Tree"
    PATH = "Path"
    CYCLE = "Cycle"
    GRID = "Grid"
    TORUS = "Torus"
    MYCIELSKIAN_CYCLE = "MycielskianCycle"
    MYCIELSKIAN_PATH = "MycielskianPath"
    MYCIELSKIAN_STAR = "MycielskianStar"
    PETERSEN = "GeneralizedPetersen"
    ERDOS_RENYI = "ErdosRenyi"


class MuKind(enum.Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class KnownMu:
    kind: MuKind
    value: int | None = None

    def __post_init__(self):
        if (self.value is None) != (self.kind is MuKind.UNKNOWN):
            raise GraphError("KnownMu value present iff kind is not Unknown")


@dataclass(frozen=True)
class GraphClassSpec:
    kind: GraphClass
    params: tuple

    def __post_init__(self):
        k, p = self.kind, self.params
        ok = True
        if k in (GraphClass.COMPLETE, GraphClass.TREE, GraphClass.PATH):
            ok = len(p) == 1 and p[0] >= 1
        elif k is GraphClass.CYCLE:
            ok = len(p) == 1 and p[0] >= 3
        elif k is GraphClass.GRID:
            ok = len(p) == 2 and p[0] >= 1 and p[1] >= 1
        elif k is GraphClass.TORUS:
            ok = len(p) == 2 and p[0] >= 3 and p[1] >= 3
        elif k is GraphClass.MYCIELSKIAN_CYCLE:
            ok = len(p) == 1 and p[0] >= 3
        elif k is GraphClass.MYCIELSKIAN_PATH:
            ok = len(p) == 1 and p[0] >= 1
        elif k is GraphClass.MYCIELSKIAN_STAR:
            ok = len(p) == 1 and p[0] >= 1
        elif k is GraphClass.PETERSEN:
            ok = len(p) == 2 and p[0] >= 3 and 1 <= p[1] < p[0] / 2
        elif k is GraphClass.ERDOS_RENYI:
            ok = len(p) == 2 and p[0] >= 1 and 0 < p[1] <= 1
        if not ok:
            raise GraphError(f"invalid parameters {p} for {k.value}")

    def label(self) -> str:
        inner = ",".join(
            format(x, "g") if isinstance(x, float) else str(x) for x in self.params
        )
        return f"{self.kind.value}({inner})"


def complete(n):
    return GraphClassSpec(GraphClass.COMPLETE, (n,))


def tree(n):
    return GraphClassSpec(GraphClass.TREE, (n,))


def path(n):
    return GraphClassSpec(GraphClass.PATH, (n,))


def cycle(n):
    return GraphClassSpec(GraphClass.CYCLE, (n,))


def grid(m, n):
    return GraphClassSpec(GraphClass.GRID, (m, n))


def torus(m, n):
    return GraphClassSpec(GraphClass.TORUS, (m, n))


def mycielskian_cycle(n):
    return GraphClassSpec(GraphClass.MYCIELSKIAN_CYCLE, (n,))


def mycielskian_path(n):
    return GraphClassSpec(GraphClass.MYCIELSKIAN_PATH, (n,))


def mycielskian_star(k):
    return GraphClassSpec(GraphClass.MYCIELSKIAN_STAR, (k,))


def petersen(n, k):
    return GraphClassSpec(GraphClass.PETERSEN, (n, k))


def erdos_renyi(n, p):
    return GraphClassSpec(GraphClass.ERDOS_RENYI, (n, float(p)))


def parse_spec(text: str) -> GraphClassSpec:
    """Parse a spec label like ``Grid(3,4)`` or ``ErdosRenyi(10,0.3)``."""
    text = text.strip()
    if not text.endswith(")") or "(" not in text:
        raise GraphError(f"malformed class spec {text!r}")
    name, _, inner = text[:-1].partition("(")
    try:
        kind = GraphClass(name)
    except ValueError:
        raise GraphError(f"unknown graph class {name!r}") from None
    params = []
    for field in inner.split(","):
        field = field.strip()
        params.append(float(field) if "." in field else int(field))
    return GraphClassSpec(kind, tuple(params))


def _path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def _cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def _star_graph(k):
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def mycielskian(g: Graph) -> Graph:
    """Mycielskian construction: shadows wired to original neighborhoods plus an apex."""
    n = g.n
    edges = list(g.edges())
    apex = 2 * n
    for i in range(n):
        shadow = n + i
        edges.extend((shadow, x) for x in g.adjacency[i])
        edges.append((shadow, apex))
    return from_edge_list(2 * n + 1, edges)


def _pruefer_tree(n, rng) -> Graph:
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaf_heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    for x in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaf_heap, x)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((u, v))
    return from_edge_list(n, edges)


def _er_graph(n, p, seed) -> Graph:
    for attempt in range(ER_MAX_ATTEMPTS):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, attempt])))
        draws = rng.random(n * (n - 1) // 2)
        edges = []
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                if draws[idx] < p:
                    edges.append((u, v))
                idx += 1
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g
    raise GenerationError(
        f"no connected ErdosRenyi({n},{p}) sample in {ER_MAX_ATTEMPTS} attempts"
    )


def generate(spec: GraphClassSpec, seed: int = 0) -> Graph:
    """Canonical graph for the spec; `seed` matters only for Tree and ErdosRenyi."""
    k, p = spec.kind, spec.params
    if k is GraphClass.COMPLETE:
        n = p[0]
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if k is GraphClass.PATH:
        return _path_graph(p[0])
    if k is GraphClass.CYCLE:
        return _cycle_graph(p[0])
    if k is GraphClass.GRID:
        m, n = p
        edges = []
        for i in range(m):
            for j in range(n):
                v = i * n + j
                if j + 1 < n:
                    edges.append((v, v + 1))
                if i + 1 < m:
                    edges.append((v, v + n))
        return from_edge_list(m * n, edges)
    if k is GraphClass.TORUS:
        m, n = p
        edges = []
        for i in range(m):
            for j in range(n):
                v = i * n + j
                edges.append((v, i * n + (j + 1) % n))
                edges.append((v, ((i + 1) % m) * n + j))
        return from_edge_list(m * n, edges)
    if k is GraphClass.MYCIELSKIAN_CYCLE:
        return mycielskian(_cycle_graph(p[0]))
    if k is GraphClass.MYCIELSKIAN_PATH:
        return mycielskian(_path_graph(p[0]))
    if k is GraphClass.MYCIELSKIAN_STAR:
        return mycielskian(_star_graph(p[0]))
    if k is GraphClass.PETERSEN:
        n, step = p
        edges = [(i, (i + 1) % n) for i in range(n)]
        edges += [(i, n + i) for i in range(n)]
        edges += [(n + i, n + (i + step) % n) for i in range(n)]
        return from_edge_list(2 * n, edges)
    if k is GraphClass.TREE:
        rng = np.random.Generator(np.random.PCG64(seed))
        return _pruefer_tree(p[0], rng)
    if k is GraphClass.ERDOS_RENYI:
        return _er_graph(p[0], p[1], seed)
    raise GraphError(f"unhandled graph class {k}")


def known_mu(spec: GraphClassSpec, g: Graph) -> KnownMu:
    """Validation value for mu(G) for the generated graph of `spec`."""
    k, p = spec.kind, spec.params
    expected_n = {
        GraphClass.COMPLETE: lambda: p[0],
        GraphClass.TREE: lambda: p[0],
        GraphClass.PATH: lambda: p[0],
        GraphClass.CYCLE: lambda: p[0],
        GraphClass.GRID: lambda: p[0] * p[1],
        GraphClass.TORUS: lambda: p[0] * p[1],
        GraphClass.MYCIELSKIAN_CYCLE: lambda: 2 * p[0] + 1,
        GraphClass.MYCIELSKIAN_PATH: lambda: 2 * p[0] + 1,
        GraphClass.MYCIELSKIAN_STAR: lambda: 2 * (p[0] + 1) + 1,
        GraphClass.PETERSEN: lambda: 2 * p[0],
        GraphClass.ERDOS_RENYI: lambda: p[0],
    }[k]()
    if g.n != expected_n:
        raise GraphError(f"graph with n={g.n} does not match spec {spec.label()}")
    if k is GraphClass.COMPLETE:
        return KnownMu(MuKind.EXACT, p[0])
    if k in (GraphClass.TREE, GraphClass.PATH):
        if g.n == 1:
            return KnownMu(MuKind.EXACT, 1)
        return KnownMu(MuKind.EXACT, len(leaves(g)))
    if k is GraphClass.GRID:
        m, n = p
        if m > 3 and n > 3:
            return KnownMu(MuKind.EXACT, 2 * min(m, n))
        return KnownMu(MuKind.UNKNOWN)
    if k is GraphClass.TORUS:
        m, n = p
        kind = MuKind.EXACT if min(m, n) in (12, 15) else MuKind.UPPER_BOUND
        return KnownMu(kind, 3 * min(m, n))
    if k is GraphClass.MYCIELSKIAN_CYCLE:
        n = p[0]
        if n >= 8:
            return KnownMu(MuKind.EXACT, n + n // 4)
        if 4 <= n <= 7:
            return KnownMu(MuKind.EXACT, n + 2)
        return KnownMu(MuKind.UNKNOWN)
    if k is GraphClass.MYCIELSKIAN_PATH:
        n = p[0]
        if n >= 5:
            return KnownMu(MuKind.EXACT, n + (n + 1) // 4)
        if n == 4:
            return KnownMu(MuKind.EXACT, 6)
        return KnownMu(MuKind.UNKNOWN)
    if k is GraphClass.MYCIELSKIAN_STAR:
        return KnownMu(MuKind.EXACT, 2 * p[0] + 1)
    return KnownMu(MuKind.UNKNOWN)


@dataclass(frozen=True)
class Instance:
    id: str
    spec: GraphClassSpec
    graph: Graph
    known: KnownMu
    category: str
    seed: int


def derive_seed(master_seed: int, *tags) -> int:
    """Stable 64-bit substream seed from a master seed and string tags."""
    text = ":".join([str(master_seed)] + [str(t) for t in tags])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


_ER_P = {"n10": [0.2, 0.3, 0.5, 0.2, 0.3], "n100": [0.05, 0.1, 0.2, 0.05, 0.1]}


def _suite_specs(category: str):
    if category == "n10":
        yield "complete-k10", complete(10)
        for i in range(1, 6):
            yield f"tree-{i:02d}", tree(10)
        yield "grid-2x5", grid(2, 5)
        yield "grid-3x4", grid(3, 4)
        yield "cycle-c10", cycle(10)
        yield "myc-c4", mycielskian_cycle(4)
        yield "myc-p4", mycielskian_path(4)
        yield "myc-star4", mycielskian_star(4)
        yield "petersen-5-2", petersen(5, 2)
        for i, p in enumerate(_ER_P["n10"], start=1):
            yield f"er-{i:02d}", erdos_renyi(10, p)
    elif category == "n100":
        yield "complete-k100", complete(100)
        for i in range(1, 6):
            yield f"tree-{i:02d}", tree(100)
        yield "grid-10x10", grid(10, 10)
        yield "grid-4x25", grid(4, 25)
        yield "torus-10x10", torus(10, 10)
        yield "myc-c49", mycielskian_cycle(49)
        yield "myc-p49", mycielskian_path(49)
        yield "myc-star49", mycielskian_star(49)
        yield "petersen-50-2", petersen(50, 2)
        yield "petersen-50-7", petersen(50, 7)
        for i, p in enumerate(_ER_P["n100"], start=1):
            yield f"er-{i:02d}", erdos_renyi(100, p)
    else:
        raise GraphError(f"unknown suite category {category!r}")


def build_suite(category: str, seed: int) -> list[Instance]:
    """Deterministic benchmark suite covering every graph class at one scale."""
    instances = []
    for short_id, spec in _suite_specs(category):
        inst_id = f"{category}-{short_id}"
        inst_seed = derive_seed(seed, inst_id)
        g = generate(spec, inst_seed)
        instances.append(
            Instance(inst_id, spec, g, known_mu(spec, g), category, inst_seed)
        )
    return instances


MANIFEST_HEADER = "id\tclass\tparams\tn\tm\tknown_kind\tknown_value\tcategory\tseed"


def manifest_lines(instances) -> list[str]:
    lines = [MANIFEST_HEADER]
    for inst in instances:
        value = "" if inst.known.value is None else str(inst.known.value)
        lines.append(
            "\t".join(
                [
                    inst.id,
                    inst.spec.kind.value,
                    inst.spec.label(),
                    str(inst.graph.n),
                    str(inst.graph.m),
                    inst.known.kind.value,
                    value,
                    inst.category,
                    str(inst.seed),
                ]
            )
        )
    return lines

"""The three mutual-visibility solvers plus the exact oracle and repair.

All randomness flows from a single 64-bit seed through numpy's PCG64
generator, so every solver is bit-reproducible given (input, seed).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraphError, GraphError, SolverTimeout
from .graph import Graph, all_pairs_distances, is_connected
from .visibility import violations


@dataclass(frozen=True)
class SolveResult:
    set: frozenset[int]
    size: int
    feasible: bool
    violation_count: int
    effort: int
    elapsed: float


def _result(g, members, effort, start) -> SolveResult:
    rep = violations(g, members)
    return SolveResult(
        set=frozenset(int(v) for v in members),
        size=len(members),
        feasible=rep.count == 0,
        violation_count=rep.count,
        effort=effort,
        elapsed=time.perf_counter() - start,
    )


def random_sampling(g: Graph, trials: int = 10000, seed: int = 0) -> SolveResult:
    """Uniform subset sampling: draw a size k in [1, n], then a k-subset,
    keep it when it beats the incumbent and verifies as an MV set."""
    if trials < 1:
        raise GraphError("trials must be >= 1")
    start = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(seed))
    best: list[int] = []
    n = g.n
    for _ in range(trials):
        if n == 0:
            break
        k = int(rng.integers(1, n + 1))
        sample = rng.choice(n, size=k, replace=False)
        if k > len(best) and violations(g, sample, limit=1).count == 0:
            best = sorted(int(v) for v in sample)
    return _result(g, best, trials, start)


@dataclass(frozen=True)
class GaParams:
    population_size: int = 50
    max_iterations: int = 200
    crossover_prob: float = 1.0
    mutation_prob: float = 1.0
    penalty: float | None = None  # defaults to n + 1 at solve time
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 2 or self.max_iterations < 1:
            raise GraphError("GA needs population >= 2 and iterations >= 1")
        if not (0 <= self.crossover_prob <= 1 and 0 <= self.mutation_prob <= 1):
            raise GraphError("GA probabilities must lie in [0, 1]")
        if self.penalty is not None and self.penalty <= 0:
            raise GraphError("GA penalty must be positive")


def ga_fitness(g: Graph, genes: np.ndarray, penalty: float) -> float:
    """Set size minus penalty times the number of violating pairs."""
    members = np.flatnonzero(genes)
    return float(len(members)) - penalty * violations(g, members).count


def ga_solve(g: Graph, params: GaParams = GaParams()) -> SolveResult:
    """Genetic search over characteristic vectors.

    OR-crossover unions two uniformly drawn parents; mutation swaps two gene
    positions; parents, offspring and mutants are merged, sorted by fitness
    and truncated back to the population size.  The best final individual is
    returned as-is: it may be infeasible, which the result reports honestly.
    """
    start = time.perf_counter()
    n = g.n
    penalty = params.penalty if params.penalty is not None else n + 1
    rng = np.random.Generator(np.random.PCG64(params.seed))
    pop_size = params.population_size
    pop = rng.integers(0, 2, size=(pop_size, n), dtype=np.uint8)

    cache: dict[bytes, float] = {}

    def fitness(genes: np.ndarray) -> float:
        key = genes.tobytes()
        fit = cache.get(key)
        if fit is None:
            fit = ga_fitness(g, genes, penalty)
            cache[key] = fit
        return fit

    for _ in range(params.max_iterations):
        children = []
        for _ in range(pop_size // 2):
            i = int(rng.integers(0, pop_size))
            j = int(rng.integers(0, pop_size))
            if rng.random() < params.crossover_prob:
                child = pop[i] | pop[j]
            else:
                child = pop[i].copy()
            children.append(child)
            mutant = child.copy()
            if n >= 2 and rng.random() < params.mutation_prob:
                a, b = rng.choice(n, size=2, replace=False)
                mutant[a], mutant[b] = mutant[b], mutant[a]
            children.append(mutant)
        merged = np.vstack([pop] + children) if children else pop
        fits = np.array([fitness(ind) for ind in merged])
        order = np.argsort(-fits, kind="stable")[:pop_size]
        pop = np.ascontiguousarray(merged[order])

    best = pop[0]
    members = [int(v) for v in np.flatnonzero(best)]
    return _result(g, members, params.max_iterations, start)


def repair(g: Graph, members) -> set[int]:
    """Shrink a candidate set to an MV set by repeatedly dropping the vertex
    in the most violating pairs (smallest id on ties)."""
    current = set(int(v) for v in members)
    while True:
        rep = violations(g, current)
        if rep.count == 0:
            return current
        counts: dict[int, int] = {}
        for a, b in rep.pairs:
            counts[a] = counts.get(a, 0) + 1
            counts[b] = counts.get(b, 0) + 1
        worst = max(counts, key=lambda v: (counts[v], -v))
        current.discard(worst)


@dataclass(frozen=True)
class Hypergraph:
    """3-uniform hypergraph over the vertices of the source graph."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    degree: tuple[int, ...] = field(repr=False)


def build_hypergraph(g: Graph) -> Hypergraph:
    """One hyperedge {u, v, x} per internal vertex x of the canonical
    shortest u-v path.

    The canonical path is extracted from a BFS rooted at min(u, v) whose
    parent links always pick the smallest-id neighbor in the previous
    layer, so the construction is deterministic.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("hypergraph construction needs a connected graph")
    n = g.n
    dist = all_pairs_distances(g).dist
    edges = []
    for root in range(n):
        drow = dist[root]
        parent = [-1] * n
        for x in range(n):
            if x == root:
                continue
            dx = drow[x]
            for y in g.adjacency[x]:  # sorted, so first hit is the min id
                if drow[y] == dx - 1:
                    parent[x] = y
                    break
        for w in range(root + 1, n):
            if drow[w] < 2:
                continue
            x = parent[w]
            while x != root:
                edges.append(tuple(sorted((root, w, x))))
                x = parent[x]
    edges = sorted(set(edges))
    degree = [0] * n
    for e in edges:
        for v in e:
            degree[v] += 1
    return Hypergraph(n, tuple(edges), tuple(degree))


def greedy_independent_set(h: Hypergraph) -> set[int]:
    """Delete maximum-degree vertices (smallest id on ties) until no
    hyperedge survives; the remaining vertices contain no full edge."""
    degree = list(h.degree)
    alive_edge = [True] * len(h.edges)
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            incident[v].append(idx)
    surviving = set(range(h.n))
    while True:
        best = -1
        best_deg = 0
        for v in range(h.n):
            if degree[v] > best_deg:
                best, best_deg = v, degree[v]
        if best < 0:
            return surviving
        surviving.discard(best)
        for idx in incident[best]:
            if alive_edge[idx]:
                alive_edge[idx] = False
                for v in h.edges[idx]:
                    degree[v] -= 1


def exact_mu(
    g: Graph, cap: int = 16, budget: float | None = None
) -> tuple[int, frozenset[int]]:
    """Maximum MV set size with a witness, by decreasing-size enumeration.

    Raises SolverTimeout when `budget` seconds elapse before an answer;
    never returns a wrong value.
    """
    if g.n > cap:
        raise GraphError(f"exact search capped at {cap} vertices, graph has {g.n}")
    start = time.perf_counter()
    n = g.n
    if n == 0:
        return 0, frozenset()
    checked = 0
    for k in range(n, 0, -1):
        for subset in combinations(range(n), k):
            checked += 1
            if budget is not None and checked % 256 == 0:
                if time.perf_counter() - start > budget:
                    raise SolverTimeout(
                        f"exact search exceeded {budget} s after {checked} subsets"
                    )
            if violations(g, subset, limit=1).count == 0:
                return k, frozenset(subset)
    return 0, frozenset()  # unreachable for n >= 1: singletons are MV sets


def hypergraph_solve(g: Graph) -> SolveResult:
    """Greedy independent set of the path hypergraph; exact below 7 vertices.

    Independence in the hypergraph makes the canonical path of every
    surviving pair internally disjoint from the set, so the output is
    always an MV set (verified before returning).
    """
    if not is_connected(g):
        raise DisconnectedGraphError("hypergraph solver needs a connected graph")
    start = time.perf_counter()
    if g.n <= 6:
        _, witness = exact_mu(g, cap=6)
        return _result(g, sorted(witness), 0, start)
    h = build_hypergraph(g)
    members = greedy_independent_set(h)
    return _result(g, sorted(members), g.n - len(members), start)

"""Experiment harness: ratio/timing matrix, summaries, and scatter export."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import GraphError, SolverTimeout
from .generators import GraphClass, Instance, MuKind, derive_seed
from .graph import average_distance, max_degree
from .solvers import GaParams, exact_mu, ga_solve, hypergraph_solve, random_sampling
from .visibility import hypergraph_bound, violations
from . import solvers

ALGOS = ("random", "genetic", "hyper", "exact")

CSV_HEADER = (
    "graph_id,class,category,n,m,algo,seed,rep,set_size,feasible,"
    "known_kind,known_mu,ratio,elapsed_s,delta_lb,hyper_lb,avg_dist"
)

SCATTER_HEADER = "graph_id,class,delta_lb,set_size,algo"

CATEGORY2_CLASSES = (GraphClass.PETERSEN, GraphClass.ERDOS_RENYI)


@dataclass(frozen=True)
class RunRecord:
    graph_id: str
    cls: str
    category: str
    n: int
    m: int
    algo: str
    seed: int
    rep: int
    set_size: int | None
    feasible: bool
    known_kind: str
    known_mu: int | None
    ratio: float | None
    elapsed_s: float
    delta_lb: int
    hyper_lb: float
    avg_dist: float

    def csv_row(self) -> str:
        return ",".join(
            [
                self.graph_id,
                self.cls,
                self.category,
                str(self.n),
                str(self.m),
                self.algo,
                str(self.seed),
                str(self.rep),
                "" if self.set_size is None else str(self.set_size),
                "true" if self.feasible else "false",
                self.known_kind,
                "" if self.known_mu is None else str(self.known_mu),
                "" if self.ratio is None else f"{self.ratio:.6f}",
                f"{self.elapsed_s:.6f}",
                str(self.delta_lb),
                f"{self.hyper_lb:.6f}",
                f"{self.avg_dist:.6f}",
            ]
        )


@dataclass(frozen=True)
class SummaryRow:
    cls: str
    category: str
    algo: str
    mean_ratio: float | None
    mean_elapsed_s: float


def _run_one(inst: Instance, algo: str, seed: int, *, trials, ga_params, use_repair, cap):
    g = inst.graph
    if algo == "random":
        return random_sampling(g, trials=trials, seed=seed)
    if algo == "genetic":
        base = ga_params or GaParams()
        start = time.perf_counter()
        result = ga_solve(g, GaParams(
            population_size=base.population_size,
            max_iterations=base.max_iterations,
            crossover_prob=base.crossover_prob,
            mutation_prob=base.mutation_prob,
            penalty=base.penalty,
            seed=seed,
        ))
        if use_repair and not result.feasible:
            repaired = solvers.repair(g, result.set)
            rep = violations(g, repaired)
            result = solvers.SolveResult(
                set=frozenset(repaired),
                size=len(repaired),
                feasible=rep.count == 0,
                violation_count=rep.count,
                effort=result.effort,
                elapsed=time.perf_counter() - start,
            )
        return result
    if algo == "hyper":
        return hypergraph_solve(g)
    if algo == "exact":
        start = time.perf_counter()
        mu, witness = exact_mu(g, cap=cap)
        return solvers.SolveResult(
            set=witness,
            size=mu,
            feasible=True,
            violation_count=0,
            effort=0,
            elapsed=time.perf_counter() - start,
        )
    raise GraphError(f"unknown algorithm {algo!r}")


def run_matrix(
    suite: list[Instance],
    algos,
    reps: int,
    master_seed: int,
    *,
    trials: int = 10000,
    ga_params: GaParams | None = None,
    use_repair: bool = False,
    cap: int = 16,
) -> list[RunRecord]:
    """One record per (instance, algo, rep); solver failures are captured
    per row instead of aborting the matrix."""
    if reps < 1:
        raise GraphError("reps must be >= 1")
    for algo in algos:
        if algo not in ALGOS:
            raise GraphError(f"unknown algorithm {algo!r}")
    records = []
    for inst in suite:
        g = inst.graph
        delta = max_degree(g)
        avg = average_distance(g)
        hyper_lb = hypergraph_bound(g)
        known_kind = inst.known.kind.value
        for algo in algos:
            for rep in range(reps):
                seed = derive_seed(master_seed, inst.id, algo, rep)
                try:
                    res = _run_one(
                        inst, algo, seed,
                        trials=trials, ga_params=ga_params,
                        use_repair=use_repair, cap=cap,
                    )
                    set_size, feasible = res.size, res.feasible
                    elapsed = res.elapsed
                except (SolverTimeout, GraphError):
                    set_size, feasible, elapsed = None, False, 0.0
                ratio = None
                if inst.known.kind is MuKind.EXACT and set_size is not None:
                    ratio = set_size / inst.known.value
                records.append(
                    RunRecord(
                        graph_id=inst.id,
                        cls=inst.spec.kind.value,
                        category=inst.category,
                        n=g.n,
                        m=g.m,
                        algo=algo,
                        seed=seed,
                        rep=rep,
                        set_size=set_size,
                        feasible=feasible,
                        known_kind=known_kind,
                        known_mu=inst.known.value,
                        ratio=ratio,
                        elapsed_s=elapsed,
                        delta_lb=delta,
                        hyper_lb=hyper_lb,
                        avg_dist=avg,
                    )
                )
    records.sort(key=lambda r: (r.graph_id, r.algo, r.rep))
    return records


def _mean(xs):
    xs = list(xs)
    return sum(xs) / len(xs) if xs else None


def summarize(records: list[RunRecord]) -> list[SummaryRow]:
    """Mean ratio (where defined) and mean runtime per (class, category, algo).

    The three Mycielskian classes additionally roll up into a merged
    "Mycielskian" row to match the granularity of the reported tables.
    """
    groups: dict[tuple[str, str, str], list[RunRecord]] = {}
    for r in records:
        groups.setdefault((r.cls, r.category, r.algo), []).append(r)
        if r.cls.startswith("Mycielskian"):
            groups.setdefault(("Mycielskian", r.category, r.algo), []).append(r)
    rows = []
    for (cls, category, algo), rs in sorted(groups.items()):
        ratios = [r.ratio for r in rs if r.ratio is not None]
        rows.append(
            SummaryRow(
                cls=cls,
                category=category,
                algo=algo,
                mean_ratio=_mean(ratios),
                mean_elapsed_s=_mean(r.elapsed_s for r in rs),
            )
        )
    return rows


def export_scatter(records: list[RunRecord]) -> list[str]:
    """Scatter rows (set size against the degree lower bound) for the
    general graph models, header included."""
    lines = [SCATTER_HEADER]
    cat2 = {c.value for c in CATEGORY2_CLASSES}
    for r in records:
        if r.cls in cat2 and r.set_size is not None:
            lines.append(
                f"{r.graph_id},{r.cls},{r.delta_lb},{r.set_size},{r.algo}"
            )
    return lines


def records_csv(records: list[RunRecord]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"


SUMMARY_HEADER = "class,category,algo,mean_ratio,mean_elapsed_s"


def summary_csv(rows: list[SummaryRow]) -> str:
    lines = [SUMMARY_HEADER]
    for row in rows:
        ratio = "" if row.mean_ratio is None else f"{row.mean_ratio:.6f}"
        lines.append(
            f"{row.cls},{row.category},{row.algo},{ratio},{row.mean_elapsed_s:.6f}"
        )
    return "\n".join(lines) + "\n"


def scatter_csv(records: list[RunRecord]) -> str:
    return "\n".join(export_scatter(records)) + "\n"

"""Command-line interface.

Subcommands: generate, check, solve, bounds, bench.
Exit codes: 0 success, 1 usage error (also: `check` on a non-MV set),
2 data error, 3 solver timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as benchmod
from . import generators
from .errors import GraphError, SolverTimeout
from .graph import average_distance, max_degree
from .graphio import read_graph, write_graph
from .solvers import GaParams, exact_mu, ga_solve, hypergraph_solve, random_sampling, repair
from .visibility import clique_lower_bound, hypergraph_bound, violations

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TIMEOUT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mvgraph", description="Mutual-visibility solvers and benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a graph from a class spec")
    p.add_argument("--spec", required=True, help="class spec, e.g. 'Grid(3,4)' or 'ErdosRenyi(10,0.3)'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output graph file")
    p.add_argument("--manifest", help="optional TSV manifest file")
    p.add_argument("--category", default="n10", choices=["n10", "n100"])

    p = sub.add_parser("check", help="check whether a vertex set is an MV set")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", required=True, help="comma-separated vertex ids, e.g. 0,3,7")

    p = sub.add_parser("solve", help="run one solver on a graph file")
    p.add_argument("--algo", required=True, choices=["random", "genetic", "hyper", "exact"])
    p.add_argument("--graph", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--gens", type=int, default=200)
    p.add_argument("--penalty", type=float, default=None)
    p.add_argument("--repair", action="store_true", help="repair an infeasible GA result")
    p.add_argument("--cap", type=int, default=16, help="exact solver vertex cap")
    p.add_argument("--budget", type=float, default=None, help="exact solver time budget [s]")
    p.add_argument("--out", help="result JSON file (default: stdout)")

    p = sub.add_parser("bounds", help="print lower bounds for a graph file")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("bench", help="run the benchmark matrix on a suite")
    p.add_argument("--suite", required=True, choices=["n10", "n100"])
    p.add_argument("--algos", default="random,genetic,hyper")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--repair", action="store_true")
    p.add_argument("--out", required=True, help="records CSV")
    p.add_argument("--summary", help="summary CSV")
    p.add_argument("--scatter", help="scatter CSV")
    return parser


def _parse_vertex_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _cmd_generate(args) -> int:
    spec = generators.parse_spec(args.spec)
    g = generators.generate(spec, args.seed)
    write_graph(g, args.out)
    if args.manifest:
        inst = generators.Instance(
            id=Path(args.out).stem,
            spec=spec,
            graph=g,
            known=generators.known_mu(spec, g),
            category=args.category,
            seed=args.seed,
        )
        Path(args.manifest).write_text(
            "\n".join(generators.manifest_lines([inst])) + "\n", newline="\n"
        )
    return EXIT_OK


def _cmd_check(args) -> int:
    g = read_graph(args.graph)
    members = _parse_vertex_set(args.set)
    report = violations(g, members)
    print(f"MV: {'yes' if report.count == 0 else 'no'}")
    print(f"violations: {report.count}")
    for a, b in report.pairs:
        print(f"  ({a}, {b})")
    return EXIT_OK if report.count == 0 else 1


def _cmd_solve(args) -> int:
    g = read_graph(args.graph)
    params: dict = {"seed": args.seed}
    if args.algo == "random":
        params["trials"] = args.trials
        res = random_sampling(g, trials=args.trials, seed=args.seed)
    elif args.algo == "genetic":
        ga = GaParams(
            population_size=args.pop,
            max_iterations=args.gens,
            penalty=args.penalty,
            seed=args.seed,
        )
        params.update(pop=args.pop, gens=args.gens,
                      penalty=args.penalty if args.penalty is not None else g.n + 1,
                      repair=args.repair)
        res = ga_solve(g, ga)
        if args.repair and not res.feasible:
            repaired = repair(g, res.set)
            rep = violations(g, repaired)
            res = res.__class__(
                set=frozenset(repaired), size=len(repaired),
                feasible=rep.count == 0, violation_count=rep.count,
                effort=res.effort, elapsed=res.elapsed,
            )
    elif args.algo == "hyper":
        res = hypergraph_solve(g)
    else:
        params.update(cap=args.cap, budget=args.budget)
        mu, witness = exact_mu(g, cap=args.cap, budget=args.budget)
        from .solvers import SolveResult

        res = SolveResult(frozenset(witness), mu, True, 0, 0, 0.0)
    record = {
        "algo": args.algo,
        "parameters": params,
        "set": sorted(res.set),
        "size": res.size,
        "feasible": res.feasible,
        "violation_count": res.violation_count,
        "effort": res.effort,
        "elapsed_seconds": res.elapsed,
    }
    text = json.dumps(record, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = read_graph(args.graph)
    avg = average_distance(g)
    print(f"max_degree: {max_degree(g)}")
    print(f"clique_bound: {clique_lower_bound(g)}")
    print(f"hypergraph_bound: {hypergraph_bound(g):.6f}")
    print(f"avg_distance: {avg:.6f}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    suite = generators.build_suite(args.suite, args.seed)
    records = benchmod.run_matrix(
        suite, algos, args.reps, args.seed,
        trials=args.trials, use_repair=args.repair,
    )
    Path(args.out).write_text(benchmod.records_csv(records), newline="\n")
    if args.summary:
        Path(args.summary).write_text(
            benchmod.summary_csv(benchmod.summarize(records)), newline="\n"
        )
    if args.scatter:
        Path(args.scatter).write_text(benchmod.scatter_csv(records), newline="\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "check": _cmd_check,
        "solve": _cmd_solve,
        "bounds": _cmd_bounds,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except SolverTimeout as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

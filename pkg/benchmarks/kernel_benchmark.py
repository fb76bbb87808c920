"""Compare the compiled BFS kernels against the pure-Python fallback.

Usage: python benchmarks/kernel_benchmark.py
"""

import time

import numpy as np

from mvgraph import _pykernels, generators as gen
from mvgraph.graph import all_pairs_distances

try:
    from mvgraph import _speedups
except ImportError:
    _speedups = None

CASES = [
    ("Grid(10,10)", gen.grid(10, 10), 0),
    ("Tree(200)", gen.tree(200), 1),
    ("ErdosRenyi(150,0.1)", gen.erdos_renyi(150, 0.1), 2),
    ("Complete(100)", gen.complete(100), 0),
]


def bench(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    if _speedups is None:
        print("compiled extension not available; only the fallback will run")
    print(f"{'graph':22s} {'kernel':16s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for label, spec, seed in CASES:
        g = gen.generate(spec, seed)
        dist = all_pairs_distances(g).dist
        rng = np.random.Generator(np.random.PCG64(0))
        members = np.sort(rng.choice(g.n, size=g.n // 2, replace=False)).astype(np.int32)

        rows = [
            ("all_pairs_bfs", lambda mod: lambda: mod.all_pairs_bfs(g.indptr, g.indices, g.n)),
            ("violation_pairs", lambda mod: lambda: mod.violation_pairs(
                g.indptr, g.indices, dist, members)),
        ]
        for name, make in rows:
            t_py = bench(make(_pykernels))
            if _speedups is not None:
                t_cy = bench(make(_speedups))
                print(f"{label:22s} {name:16s} {t_py*1e3:9.2f}ms {t_cy*1e3:9.2f}ms "
                      f"{t_py / t_cy:7.1f}x")
            else:
                print(f"{label:22s} {name:16s} {t_py*1e3:9.2f}ms {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()

"""Time the compiled and pure-Python search kernels on the same workloads.

    python3 benchmarks/bench_kernels.py --repeat 3

Each workload is run through both backends; the results must be identical,
and the script aborts otherwise.
"""

import argparse
import random
import sys
import time
from itertools import combinations

from idpp import Graph, is_to_idpp, kernels
from idpp import _search


def _exhaustive_gadgets(n: int):
    universe = list(combinations(range(n), 2))
    for mask in range(0, 1 << len(universe), 7):
        g = Graph(n, [e for j, e in enumerate(universe) if mask >> j & 1])
        inst, _ = is_to_idpp(g)
        yield inst.graph.masks, list(inst.pairs)


def _random_gadgets(seed: int, count: int, n_lo: int, n_hi: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        inst, _ = is_to_idpp(g)
        yield inst.graph.masks, list(inst.pairs)


def _random_routing(seed: int, count: int, n: int, k: int, p: float):
    rng = random.Random(seed)
    for _ in range(count):
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        yield g.masks, [tuple(rng.sample(range(n), 2)) for _ in range(k)]


WORKLOADS = {
    "gadgets-6-exhaustive": lambda: list(_exhaustive_gadgets(6)),
    "gadgets-8-10-random": lambda: list(_random_gadgets(1, 200, 8, 10)),
    "routing-20-k4": lambda: list(_random_routing(2, 200, 20, 4, 0.15)),
    "routing-40-k3": lambda: list(_random_routing(3, 50, 40, 3, 0.08)),
}


def _time(backend, jobs, repeat: int):
    best, results = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [backend.route_search(adj, pairs) for adj, pairs in jobs]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS), action="append")
    args = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled backend not built; only timing the Python kernel", file=sys.stderr)
    names = args.only or list(WORKLOADS)
    print(f"{'workload':24} {'cases':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name in names:
        jobs = WORKLOADS[name]()
        py_t, py_res = _time(_search, jobs, args.repeat)
        if kernels.compiled_backend is None:
            print(f"{name:24} {len(jobs):6d} {py_t:10.3f} {'-':>10} {'-':>8}")
            continue
        c_t, c_res = _time(kernels.compiled_backend, jobs, args.repeat)
        if c_res != py_res:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:24} {len(jobs):6d} {py_t:10.3f} {c_t:10.3f} {py_t / c_t:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

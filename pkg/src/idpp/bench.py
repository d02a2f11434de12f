"""Seeded random instance families and the exact-vs-greedy comparison table."""

from __future__ import annotations

import csv
import io
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from idpp.graph import Graph
from idpp.reductions import is_to_idpp
from idpp.solvers import BestFound, SolveBudget, exact_idpp, greedy_idpp

FAMILIES = ("gnp", "sparse")
COLUMNS = (
    "trial", "n", "m", "k", "exact", "greedy", "ratio", "sqrt_m", "ratio_le_sqrt_m", "sqrt_m_lt_n",
)


def gnp_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def sparse_edge_count(n: int, alpha: float) -> int:
    return min(round(n**alpha), n * (n - 1) // 2)


def sparse_graph(n: int, alpha: float, rng: random.Random) -> Graph:
    """Uniform graph with ``round(n ** alpha)`` edges (capped at complete)."""
    universe = list(combinations(range(n), 2))
    return Graph(n, rng.sample(universe, sparse_edge_count(n, alpha)))


@dataclass(frozen=True)
class BenchRow:
    trial: int
    n: int
    m: int
    k: int
    exact: int | None
    greedy: int

    @property
    def ratio(self) -> float | None:
        if self.exact is None or self.greedy == 0:
            return None
        return self.exact / self.greedy

    @property
    def sqrt_m(self) -> float:
        return math.sqrt(self.m)

    @property
    def within_bound(self) -> bool | None:
        r = self.ratio
        return None if r is None else r <= self.sqrt_m

    def cells(self) -> list[str]:
        def fmt(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return str(int(x))
            if isinstance(x, float):
                return f"{x:.6f}"
            return str(x)

        return [
            fmt(x)
            for x in (
                self.trial, self.n, self.m, self.k, self.exact, self.greedy,
                self.ratio, self.sqrt_m, self.within_bound, self.sqrt_m < self.n,
            )
        ]


def _run_trial(args: tuple[int, Graph, SolveBudget]) -> BenchRow:
    trial, base, budget = args
    inst, _ = is_to_idpp(base)
    g = inst.graph
    exact = None
    if g.node_count <= budget.max_nodes_exact:
        res = exact_idpp(inst, budget)
        if not isinstance(res, BestFound):
            exact = res.size
    return BenchRow(trial, g.node_count, g.edge_count, inst.k, exact, greedy_idpp(inst).size)


def bench_rows(
    family: str,
    n_min: int,
    n_max: int,
    trials: int,
    seed: int,
    p: float = 0.3,
    alpha: float = 1.2,
    budget: SolveBudget = SolveBudget(),
    jobs: int = 1,
) -> list[BenchRow]:
    """Reduce ``trials`` random independent-set graphs and solve them both ways.

    Graphs are drawn sequentially from one ``random.Random(seed)`` so the
    table does not depend on ``jobs``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if family == "gnp" and not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if family == "sparse" and not 0 < alpha < 2:
        raise ValueError("alpha must lie in (0, 2)")
    rng = random.Random(seed)
    work = []
    for trial in range(trials):
        n = rng.randint(n_min, n_max)
        g = gnp_graph(n, p, rng) if family == "gnp" else sparse_graph(n, alpha, rng)
        work.append((trial, g, budget))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_trial, work, chunksize=max(1, len(work) // (4 * jobs))))
    return [_run_trial(w) for w in work]


def format_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()

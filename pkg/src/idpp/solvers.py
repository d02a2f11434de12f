"""Exact and greedy solvers, and the threshold-dispatch wrapper.

Exact solvers are brute force and refuse instances above
``SolveBudget.max_nodes_exact``. Their search order is fixed (pair subsets
by descending size then lexicographically, candidate paths by length then
lexicographically), so output is reproducible run to run.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from typing import Callable

import mpmath

from idpp import kernels
from idpp.graph import Graph, IdppInstance
from idpp.verify import DppSolution, IdppSolution

# relative slack when comparing the two sides of the boost inequality
INEQUALITY_RTOL = 1e-12


class BudgetError(RuntimeError):
    """The requested exact computation is outside the configured budget."""


@dataclass(frozen=True)
class SolveBudget:
    max_nodes_exact: int = 20
    max_path_nodes: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes_exact < 1:
            raise ValueError("max_nodes_exact must be at least 1")
        if self.max_path_nodes is not None and self.max_path_nodes < 1:
            raise ValueError("max_path_nodes must be at least 1")


@dataclass(frozen=True)
class BestFound:
    """Non-optimal outcome of an exact solve that could not finish.

    ``reason`` is ``"timeout"`` or ``"path-limit"``. Callers must handle
    this separately from a proper optimum.
    """

    solution: IdppSolution
    reason: str

    @property
    def size(self) -> int:
        return self.solution.size


def _require_budget(g: Graph, budget: SolveBudget) -> None:
    if g.node_count > budget.max_nodes_exact:
        raise BudgetError(
            f"exact solve needs n <= {budget.max_nodes_exact}, instance has n = {g.node_count}"
        )


# -- independent set ------------------------------------------------------


def _alpha(adj: tuple[int, ...], mask: int, memo: dict[int, int]) -> int:
    if not mask:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    rest = mask
    best_v, best_deg = -1, -1
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        deg = (adj[v] & mask).bit_count()
        if deg <= 1:
            # some maximum independent set contains a node of degree <= 1
            r = 1 + _alpha(adj, mask & ~(adj[v] | low), memo)
            memo[mask] = r
            return r
        if deg > best_deg:
            best_v, best_deg = v, deg
    low = 1 << best_v
    r = max(
        _alpha(adj, mask & ~low, memo),
        1 + _alpha(adj, mask & ~(adj[best_v] | low), memo),
    )
    memo[mask] = r
    return r


def exact_max_independent_set(g: Graph, budget: SolveBudget = SolveBudget()) -> set[int]:
    """Maximum independent set; ties go to the lexicographically smallest sorted node list."""
    _require_budget(g, budget)
    adj = g.masks
    memo: dict[int, int] = {}
    mask = (1 << g.node_count) - 1
    need = _alpha(adj, mask, memo)
    chosen = set()
    for v in range(g.node_count):
        if not need:
            break
        low = 1 << v
        if not mask & low:
            continue
        after = mask & ~(adj[v] | low)
        if 1 + _alpha(adj, after, memo) == need:
            chosen.add(v)
            mask = after
            need -= 1
        else:
            mask &= ~low
    return chosen


# -- exact routing --------------------------------------------------------


def _exact(inst: IdppInstance, budget: SolveBudget, induced: bool, cls):
    g = inst.graph
    _require_budget(g, budget)
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    routed, status = kernels.route_search(
        g.masks,
        [tuple(p) for p in inst.pairs],
        induced,
        budget.max_path_nodes or 0,
        deadline,
    )
    sol = cls(tuple(sorted(routed)))
    if status == "timeout":
        return BestFound(sol, "timeout")
    if status == "truncated":
        return BestFound(sol, "path-limit")
    return sol


def exact_idpp(
    inst: IdppInstance, budget: SolveBudget = SolveBudget()
) -> IdppSolution | BestFound:
    """Maximum set of pairs routable by induced disjoint paths.

    Returns :class:`BestFound` instead when the time limit expires or the
    path-length cap pruned the search.
    """
    return _exact(inst, budget, True, IdppSolution)


def exact_dpp(inst: IdppInstance, budget: SolveBudget = SolveBudget()) -> DppSolution | BestFound:
    """Maximum set of pairs routable by pairwise node-disjoint paths."""
    return _exact(inst, budget, False, DppSolution)


# -- greedy ---------------------------------------------------------------


def _bfs_dist(g: Graph, alive: list[bool], root: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if alive[w] and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def greedy_idpp(inst: IdppInstance) -> IdppSolution:
    """Route the pair with the globally shortest residual path, repeat.

    After each route the path's closed neighbourhood is deleted. Ties go to
    the lower pair index, and each route is the lexicographically smallest
    shortest path. Shortest paths in an induced subgraph are chordless, so
    the output is always feasible.
    """
    g = inst.graph
    alive = [True] * g.node_count
    open_pairs = list(range(inst.k))
    routed = []
    while open_pairs:
        pick = None
        still_open = []
        for i in open_pairs:
            s, t = inst.pairs[i]
            if not (alive[s] and alive[t]):
                continue
            dist = _bfs_dist(g, alive, t)
            if s not in dist:
                continue
            still_open.append(i)
            if pick is None or dist[s] < pick[1]:
                pick = (i, dist[s], dist)
        if pick is None:
            break
        i, length, dist = pick
        path = [inst.pairs[i].source]
        while dist[path[-1]]:
            d = dist[path[-1]]
            path.append(min(w for w in g.neighbors(path[-1]) if dist.get(w) == d - 1))
        routed.append((i, tuple(path)))
        for v in path:
            alive[v] = False
            for w in g.neighbors(v):
                alive[w] = False
        open_pairs = [j for j in still_open if j != i]
    return IdppSolution(tuple(sorted(routed)))


# -- threshold dispatch ---------------------------------------------------


@dataclass(frozen=True)
class BoostParams:
    epsilon: float
    threshold: int
    derived_epsilon_prime: float


def boost_threshold(epsilon: float) -> BoostParams:
    """Brute-force cutoff ``ceil(3 ** (1 + 1/epsilon))`` and ``epsilon ** 2``."""
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    raw = 3.0 ** (1.0 + 1.0 / epsilon)
    near = round(raw)
    # snap float noise so that exact powers of 3 are not bumped up by one
    threshold = near if abs(raw - near) <= 1e-9 * raw else math.ceil(raw)
    return BoostParams(epsilon, int(threshold), epsilon * epsilon)


def boosted_solve(
    inst: IdppInstance,
    params: BoostParams,
    base: Callable[[IdppInstance], IdppSolution] = greedy_idpp,
    budget: SolveBudget = SolveBudget(),
) -> IdppSolution | BestFound:
    """Exact search below the threshold, ``base`` at or above it.

    Raises :class:`BudgetError` for instances below the threshold when the
    threshold itself exceeds ``budget.max_nodes_exact``; the brute-force
    region would otherwise silently fall back to something non-exact.
    """
    if inst.graph.node_count < params.threshold:
        if params.threshold > budget.max_nodes_exact:
            raise BudgetError(
                f"brute-force region too large for budget: threshold 3^(1+1/eps) = "
                f"{params.threshold} for eps = {params.epsilon} exceeds "
                f"max_nodes_exact = {budget.max_nodes_exact}"
            )
        return exact_idpp(inst, budget)
    return base(inst)


def check_boost_inequality(n: int, epsilon: float) -> bool:
    """Whether ``(n/3) ** (1 - eps**2) >= n ** (1 - eps)`` holds.

    Evaluated at 50 significant digits; sides equal within a relative
    ``INEQUALITY_RTOL`` count as satisfying the inequality.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    with mpmath.workdps(50):
        eps = mpmath.mpf(epsilon)
        lhs = (mpmath.mpf(n) / 3) ** (1 - eps * eps)
        rhs = mpmath.mpf(n) ** (1 - eps)
        return bool(lhs >= rhs * (1 - mpmath.mpf(INEQUALITY_RTOL)))

"""Instance transformations into induced disjoint paths instances.

``is_to_idpp`` hangs two pendant terminals off every node of an
independent-set instance; the pendant pair of ``v`` can only be joined
through ``v``, so routed pairs correspond exactly to independent sets.

``dpp_to_idpp`` subdivides every edge once. Node-disjoint paths in the
original graph become induced disjoint paths after subdivision and back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from idpp.graph import Edge, Graph, IdppInstance
from idpp.verify import DppSolution, IdppSolution


class DppInstance(IdppInstance):
    """Node-disjoint paths instance; same shape as :class:`IdppInstance`."""


@dataclass(frozen=True)
class IsInstance:
    graph: Graph


class ReductionKind(enum.Enum):
    IS_TO_IDPP = "is2idpp"
    DPP_TO_IDPP = "dpp2idpp"


@dataclass(frozen=True)
class ReductionMap:
    kind: ReductionKind
    original_node_count: int
    # IS_TO_IDPP: terminals[v] == (a_v, b_v)
    terminals: tuple[tuple[int, int], ...] = ()
    # DPP_TO_IDPP: original edge (u, v), u < v  ->  midpoint id
    midpoints: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.original_node_count
        if self.kind is ReductionKind.IS_TO_IDPP:
            if len(self.terminals) != n:
                raise ValueError("need one terminal pair per original node")
            ids = [x for ab in self.terminals for x in ab]
            if len(set(ids)) != 2 * n or any(x < n for x in ids):
                raise ValueError("gadget ids must be distinct and disjoint from original ids")
        else:
            mids = list(self.midpoints.values())
            if len(set(mids)) != len(mids) or any(x < n for x in mids):
                raise ValueError("midpoints must be distinct and disjoint from original ids")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReductionMap):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.original_node_count == other.original_node_count
            and self.terminals == other.terminals
            and dict(self.midpoints) == dict(other.midpoints)
        )

    __hash__ = None  # type: ignore[assignment]


def is_to_idpp(inst: IsInstance | Graph) -> tuple[IdppInstance, ReductionMap]:
    """Attach pendant terminals ``a_v = n + 2v`` and ``b_v = n + 2v + 1`` to each node."""
    g = inst.graph if isinstance(inst, IsInstance) else inst
    n = g.node_count
    terminals = tuple((n + 2 * v, n + 2 * v + 1) for v in range(n))
    edges = list(g.edges)
    for v, (a, b) in enumerate(terminals):
        edges.append((v, a))
        edges.append((v, b))
    reduced = IdppInstance(Graph(3 * n, edges), terminals)
    return reduced, ReductionMap(ReductionKind.IS_TO_IDPP, n, terminals=terminals)


def lift_is_solution(rmap: ReductionMap, indep: Iterable[int]) -> IdppSolution:
    """Route the gadget pair of every node in ``indep`` through that node.

    Independence is not checked; a dependent set yields an infeasible routing.
    """
    _expect(rmap, ReductionKind.IS_TO_IDPP)
    routed = []
    for v in sorted(set(indep)):
        if not 0 <= v < rmap.original_node_count:
            raise ValueError(f"{v} is not an original node")
        a, b = rmap.terminals[v]
        routed.append((v, (a, v, b)))
    return IdppSolution(tuple(routed))


def project_idpp_solution(rmap: ReductionMap, sol: IdppSolution) -> set[int]:
    """Middle nodes of the routed gadget paths.

    ``sol`` must already be feasible for the reduced instance.
    """
    _expect(rmap, ReductionKind.IS_TO_IDPP)
    out = set()
    for i, p in sol.routed:
        if not 0 <= i < rmap.original_node_count:
            raise ValueError(f"pair index {i} out of range")
        a, b = rmap.terminals[i]
        if tuple(p) != (a, i, b):
            raise ValueError(f"pair {i} is not routed through its gadget path {(a, i, b)}")
        out.add(p[1])
    return out


def dpp_to_idpp(inst: DppInstance) -> tuple[IdppInstance, ReductionMap]:
    """Replace every edge ``{u, v}`` by ``u - x - v`` with a fresh midpoint ``x``.

    Midpoints are numbered ``n, n + 1, ...`` in canonical edge order.
    """
    g = inst.graph
    n = g.node_count
    mids = {e: n + j for j, e in enumerate(g.edges)}
    edges = []
    for (u, v), x in mids.items():
        edges.append((u, x))
        edges.append((x, v))
    reduced = IdppInstance(Graph(n + len(mids), edges), inst.pairs)
    return reduced, ReductionMap(ReductionKind.DPP_TO_IDPP, n, midpoints=mids)


def lift_dpp_solution(rmap: ReductionMap, sol: IdppSolution) -> IdppSolution:
    """Insert the midpoint of each traversed edge into every path."""
    _expect(rmap, ReductionKind.DPP_TO_IDPP)
    used: set[int] = set()
    routed = []
    for i, p in sol.routed:
        if used.intersection(p) or len(set(p)) != len(p):
            raise ValueError("input paths are not node-disjoint simple paths")
        used.update(p)
        lifted = [p[0]] if p else []
        for u, v in zip(p, p[1:]):
            x = rmap.midpoints.get((u, v) if u < v else (v, u))
            if x is None:
                raise ValueError(f"pair {i}: {u}-{v} is not an edge of the original graph")
            lifted += [x, v]
        routed.append((i, tuple(lifted)))
    return IdppSolution(tuple(routed))


def project_dpp_solution(rmap: ReductionMap, sol: IdppSolution) -> DppSolution:
    """Drop midpoints; ``sol`` must already be feasible for the subdivided instance."""
    _expect(rmap, ReductionKind.DPP_TO_IDPP)
    n = rmap.original_node_count
    return DppSolution(tuple((i, tuple(v for v in p if v < n)) for i, p in sol.routed))


def _expect(rmap: ReductionMap, kind: ReductionKind) -> None:
    if rmap.kind is not kind:
        raise ValueError(f"expected a {kind.value} map, got {rmap.kind.value}")

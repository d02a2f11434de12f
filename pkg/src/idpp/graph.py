"""Simple undirected graphs over contiguous integer node ids."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on nodes ``0 .. node_count - 1``.

    Edges are stored canonically as sorted ``(u, v)`` tuples with ``u < v``.
    Adjacency is kept both as frozensets (for large sparse graphs) and,
    lazily, as integer bitmasks (for the exact search kernels).
    """

    __slots__ = ("node_count", "edges", "_adj", "_masks")

    def __init__(self, node_count: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if node_count < 0:
            raise ValueError(f"node_count must be non-negative, got {node_count}")
        adj: list[set[int]] = [set() for _ in range(node_count)]
        canon: list[Edge] = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            for x in (u, v):
                if not 0 <= x < node_count:
                    raise ValueError(f"edge ({u}, {v}): endpoint {x} out of range [0, {node_count})")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        self.node_count = node_count
        self.edges: tuple[Edge, ...] = tuple(canon)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._masks: tuple[int, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each node as an int bitmask."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in nb) for nb in self._adj)
        return self._masks

    def _check(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise ValueError(f"invalid node id {v} for graph with {self.node_count} nodes")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.node_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"


class TerminalPair(NamedTuple):
    source: int
    sink: int


def check_pairs(g: Graph, pairs: Iterable[Sequence[int]]) -> tuple[TerminalPair, ...]:
    out = []
    for i, p in enumerate(pairs):
        s, t = int(p[0]), int(p[1])
        if not (0 <= s < g.node_count and 0 <= t < g.node_count):
            raise ValueError(f"pair {i} ({s}, {t}) has a terminal outside the graph")
        if s == t:
            raise ValueError(f"pair {i} has source == sink == {s}")
        out.append(TerminalPair(s, t))
    return tuple(out)


class IdppInstance:
    """A graph plus an ordered list of source-sink pairs.

    Distinct pairs may share terminals; that only matters for solutions.
    """

    __slots__ = ("graph", "pairs")

    def __init__(self, graph: Graph, pairs: Iterable[Sequence[int]] = ()) -> None:
        self.graph = graph
        self.pairs = check_pairs(graph, pairs)

    @property
    def k(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.graph == other.graph and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.graph, self.pairs))

    def __repr__(self) -> str:
        g = self.graph
        return f"{type(self).__name__}(n={g.node_count}, m={g.edge_count}, k={self.k})"


def new_graph(node_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(node_count, edges)


def adjacent(g: Graph, u: int, v: int) -> bool:
    return g.adjacent(u, v)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def closed_neighborhood(g: Graph, nodes: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in nodes:
        out.add(v)
        out |= g.neighbors(v)
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep``, relabelled to contiguous ids.

    Returns the subgraph and ``remap`` with ``remap[new_id] == old_id``.
    """
    remap = tuple(sorted(set(keep)))
    for v in remap:
        g._check(v)
    new_id = {old: i for i, old in enumerate(remap)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    return Graph(len(remap), edges), remap


def remove_closed_neighborhood(g: Graph, nodes: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Delete ``nodes`` and everything adjacent to them.

    The survivors keep their relative order; ``remap[new_id]`` gives the
    original id.
    """
    nodes = list(nodes)
    for v in nodes:
        g._check(v)
    gone = closed_neighborhood(g, nodes)
    return induced_subgraph(g, (v for v in range(g.node_count) if v not in gone))

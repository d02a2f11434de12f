"""Slow, independently written reference implementations used by the tests.

Nothing here imports the search kernels or the verifier; paths come from
networkx and every check is a plain double loop over node pairs.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from idpp.graph import Graph, IdppInstance


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges)
    return h


def brute_force_mis(g: Graph) -> set[int]:
    """Lexicographically smallest maximum independent set, by 2^n enumeration."""
    es = edge_set(g)
    for size in range(g.node_count, 0, -1):
        for combo in combinations(range(g.node_count), size):
            if all(frozenset((u, v)) not in es for u, v in combinations(combo, 2)):
                return set(combo)
    return set()


def naive_violations(inst: IdppInstance, routed, induced: bool = True) -> set[tuple[str, tuple]]:
    """(kind name, entry positions) for every rule a routing breaks."""
    g = inst.graph
    es = edge_set(g)
    n = g.node_count

    def edge(u, v):
        return frozenset((u, v)) in es

    found: set[tuple[str, tuple]] = set()
    taken: list[int] = []
    for e, (i, p) in enumerate(routed):
        if i < 0 or i >= len(inst.pairs) or i in taken:
            found.add(("BAD_INDEX", (e,)))
        else:
            taken.append(i)
            if len(p) > 0 and (p[0], p[-1]) != tuple(inst.pairs[i]):
                found.add(("ENDPOINT_MISMATCH", (e,)))
        if len(p) == 0 or any(v < 0 or v >= n for v in p):
            found.add(("NOT_A_PATH", (e,)))
            continue
        if len(set(p)) < len(p):
            found.add(("NOT_A_PATH", (e,)))
            continue
        for a in range(len(p) - 1):
            if not edge(p[a], p[a + 1]):
                found.add(("NOT_A_PATH", (e,)))
        if induced:
            for a in range(len(p)):
                for b in range(a + 2, len(p)):
                    if edge(p[a], p[b]):
                        found.add(("CHORD", (e,)))
    for e in range(len(routed)):
        for f in range(e + 1, len(routed)):
            for u in routed[e][1]:
                for v in routed[f][1]:
                    if not (0 <= u < n and 0 <= v < n):
                        continue
                    if u == v:
                        found.add(("SHARED_NODE", (e, f)))
                    elif induced and edge(u, v):
                        found.add(("ADJACENT_PATHS", (e, f)))
    return found


def _candidate_paths(g: Graph, s: int, t: int, induced: bool) -> list[tuple[int, ...]]:
    es = edge_set(g)
    out = []
    for p in nx.all_simple_paths(to_nx(g), s, t):
        if induced and any(
            frozenset((p[a], p[b])) in es for a in range(len(p)) for b in range(a + 2, len(p))
        ):
            continue
        out.append(tuple(p))
    return out


def brute_force_opt(inst: IdppInstance, induced: bool = True) -> int:
    """Largest number of pairs routable, trying every tuple of candidate paths."""
    g = inst.graph
    es = edge_set(g)
    cands = [_candidate_paths(g, s, t, induced) for s, t in inst.pairs]

    def compatible(p, q):
        for u in p:
            for v in q:
                if u == v or (induced and frozenset((u, v)) in es):
                    return False
        return True

    best = 0

    def search(i: int, chosen: list) -> None:
        nonlocal best
        if len(chosen) + (len(cands) - i) <= best:
            return
        if i == len(cands):
            best = max(best, len(chosen))
            return
        for p in cands[i]:
            if all(compatible(p, q) for q in chosen):
                chosen.append(p)
                search(i + 1, chosen)
                chosen.pop()
        search(i + 1, chosen)

    search(0, [])
    return best


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_pairs(rng: random.Random, n: int, k: int) -> list[tuple[int, int]]:
    return [tuple(rng.sample(range(n), 2)) for _ in range(k)]


def random_instance(rng: random.Random, n: int, p: float, k: int) -> IdppInstance:
    return IdppInstance(random_graph(rng, n, p), random_pairs(rng, n, k))

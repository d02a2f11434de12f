"""Pure-Python exact routing search over bitmask adjacency.

``adj[v]`` is an int bitmask of the neighbours of ``v``; ``allowed`` masks
restrict the search to a residual (induced) subgraph. The compiled
``_csearch`` module implements the same functions with uint64 masks and
is preferred when importable; see :mod:`idpp.kernels`.
"""

from __future__ import annotations

import time
from typing import Sequence


class SearchTimeout(Exception):
    pass


def _sorted(paths: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    paths.sort(key=lambda p: (len(p), p))
    return paths


def enumerate_paths(
    adj: Sequence[int],
    source: int,
    sink: int,
    allowed: int,
    induced: bool = True,
    max_nodes: int = 0,
    deadline: float | None = None,
) -> tuple[list[tuple[int, ...]], bool]:
    """All ``source``-``sink`` paths inside ``allowed``, shortest first.

    With ``induced`` only chordless paths are produced. ``max_nodes`` (0 =
    unbounded) caps path length; the flag returned is True when that cap cut
    off at least one extension. Raises :class:`SearchTimeout` once
    ``time.monotonic()`` passes ``deadline``.
    """
    if not (allowed >> source) & 1 or not (allowed >> sink) & 1:
        return [], False
    if source == sink:
        return [(source,)], False
    out: list[tuple[int, ...]] = []
    path = [source]
    truncated = False
    steps = 0

    def extend(u: int, blocked: int) -> None:
        # blocked: nodes the next node may not be (closed neighbourhoods of
        # earlier path nodes when induced, the path itself otherwise)
        nonlocal truncated, steps
        steps += 1
        if deadline is not None and not steps & 1023 and time.monotonic() > deadline:
            raise SearchTimeout
        if induced and (blocked >> sink) & 1:
            return
        cand = adj[u] & allowed & ~blocked
        if not cand:
            return
        if max_nodes and len(path) >= max_nodes:
            truncated = True
            return
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            path.append(w)
            if w == sink:
                out.append(tuple(path))
            elif induced:
                extend(w, blocked | adj[u] | (1 << u))
            else:
                extend(w, blocked | low)
            path.pop()

    extend(source, 0 if induced else 1 << source)
    return _sorted(out), truncated


def route_search(
    adj: Sequence[int],
    pairs: Sequence[tuple[int, int]],
    induced: bool = True,
    max_nodes: int = 0,
    deadline: float | None = None,
) -> tuple[list[tuple[int, tuple[int, ...]]], str]:
    """Maximum routing by descending-size, lexicographic subset search.

    Returns ``(routed, status)`` where ``status`` is ``"optimal"``,
    ``"truncated"`` (the path-length cap pruned something) or ``"timeout"``
    (``routed`` is then the largest partial routing seen).
    """
    n = len(adj)
    full = (1 << n) - 1
    k = len(pairs)
    path_cache: dict[tuple[int, int], list[tuple[tuple[int, ...], int]]] = {}
    failed: set[tuple[tuple[int, ...], int]] = set()
    best: list[tuple[int, tuple[int, ...]]] = []
    chosen: list[tuple[int, tuple[int, ...]]] = []
    truncated = False

    def candidates(i: int, allowed: int) -> list[tuple[tuple[int, ...], int]]:
        nonlocal truncated
        key = (i, allowed)
        hit = path_cache.get(key)
        if hit is None:
            s, t = pairs[i]
            paths, cut = enumerate_paths(adj, s, t, allowed, induced, max_nodes, deadline)
            truncated |= cut
            hit = []
            for p in paths:
                removed = 0
                for v in p:
                    removed |= 1 << v
                    if induced:
                        removed |= adj[v]
                hit.append((p, removed))
            path_cache[key] = hit
        return hit

    def extend(subset: tuple[int, ...], pos: int, allowed: int) -> bool:
        if pos == len(subset):
            return True
        if deadline is not None and time.monotonic() > deadline:
            raise SearchTimeout
        key = (subset[pos:], allowed)
        if key in failed:
            return False
        i = subset[pos]
        for p, removed in candidates(i, allowed):
            chosen.append((i, p))
            if len(chosen) > len(best):
                best[:] = chosen
            if extend(subset, pos + 1, allowed & ~removed):
                return True
            chosen.pop()
        failed.add(key)
        return False

    try:
        # pairs that can never be routed, and pairs that can never coexist,
        # are skipped; this does not change which subset is found first
        viable = [i for i in range(k) if candidates(i, full)]
        conflict = _conflicts(adj, pairs, viable, induced)
        for size in range(len(viable), 0, -1):
            for subset in _subsets(viable, conflict, size, 0, 0, []):
                del chosen[:]
                if extend(subset, 0, full):
                    return list(chosen), "truncated" if truncated else "optimal"
    except SearchTimeout:
        return list(best), "timeout"
    return [], "truncated" if truncated else "optimal"


def _conflicts(adj, pairs, viable, induced):
    """Bitmask per pair of the pairs whose terminals clash with its own."""
    conflict = {i: 0 for i in viable}
    for x, i in enumerate(viable):
        si, ti = pairs[i]
        touch = (1 << si) | (1 << ti)
        if induced:
            touch |= adj[si] | adj[ti]
        for j in viable[x + 1:]:
            sj, tj = pairs[j]
            if (touch >> sj) & 1 or (touch >> tj) & 1:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    return conflict


def _subsets(viable, conflict, size, start, forbid, acc):
    # lexicographic combinations of ``viable`` avoiding conflicting pairs
    if size == 0:
        yield tuple(acc)
        return
    for x in range(start, len(viable) - size + 1):
        i = viable[x]
        if (forbid >> i) & 1:
            continue
        acc.append(i)
        yield from _subsets(viable, conflict, size - 1, x + 1, forbid | conflict[i], acc)
        acc.pop()

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact routing search; mirrors idpp._search for graphs up to 64 nodes."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
import time

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

MAX_NODES = 64


class SearchTimeout(Exception):
    pass


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef list _enumerate(uint64_t* adj, int source, int sink, uint64_t allowed,
                     bint induced, int max_nodes, bint* truncated, object deadline):
    cdef int path[64]
    cdef uint64_t cand[64]
    cdef uint64_t blocked[64]
    cdef int depth = 0, d1, w, j, u
    cdef uint64_t c
    cdef long steps = 0
    out = []
    if not (allowed >> source) & 1 or not (allowed >> sink) & 1:
        return out
    if source == sink:
        out.append((source,))
        return out
    path[0] = source
    blocked[0] = 0 if induced else bit(source)
    c = adj[source] & allowed & ~blocked[0]
    if c and max_nodes and 1 >= max_nodes:
        truncated[0] = True
        c = 0
    cand[0] = c
    while depth >= 0:
        steps += 1
        if deadline is not None and (steps & 4095) == 0 and time.monotonic() > deadline:
            raise SearchTimeout
        c = cand[depth]
        if c == 0:
            depth -= 1
            continue
        w = __builtin_ctzll(c)
        cand[depth] = c & (c - 1)
        if w == sink:
            out.append(tuple([path[j] for j in range(depth + 1)] + [w]))
            continue
        d1 = depth + 1
        u = path[depth]
        path[d1] = w
        if induced:
            blocked[d1] = blocked[depth] | adj[u] | bit(u)
            if (blocked[d1] >> sink) & 1:
                continue
        else:
            blocked[d1] = blocked[depth] | bit(w)
        c = adj[w] & allowed & ~blocked[d1]
        if c and max_nodes and d1 + 1 >= max_nodes:
            truncated[0] = True
            c = 0
        cand[d1] = c
        depth = d1
    out.sort(key=_order)
    return out


def _order(p):
    return (len(p), p)


def enumerate_paths(adj, int source, int sink, allowed, bint induced=True, int max_nodes=0,
                    deadline=None):
    cdef uint64_t a[64]
    cdef bint truncated = False
    cdef int n = len(adj), v
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 nodes")
    for v in range(n):
        a[v] = adj[v]
    paths = _enumerate(a, source, sink, <uint64_t>allowed, induced, max_nodes, &truncated,
                       deadline)
    return paths, bool(truncated)


cdef class _Search:
    cdef uint64_t* adj
    cdef int n
    cdef bint induced
    cdef int max_nodes
    cdef bint truncated
    cdef object deadline
    cdef long steps
    cdef list pairs
    cdef dict cache
    cdef set failed
    cdef list chosen
    cdef list best

    def __cinit__(self, adj, pairs, bint induced, int max_nodes, deadline):
        cdef int v
        self.n = len(adj)
        self.adj = <uint64_t*>malloc(max(self.n, 1) * sizeof(uint64_t))
        for v in range(self.n):
            self.adj[v] = adj[v]
        self.pairs = [tuple(p) for p in pairs]
        self.induced = induced
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.truncated = False
        self.steps = 0
        self.cache = {}
        self.failed = set()
        self.chosen = []
        self.best = []

    def __dealloc__(self):
        free(self.adj)

    cdef list candidates(self, int i, uint64_t allowed):
        cdef uint64_t removed
        cdef int v
        key = (i, allowed)
        hit = self.cache.get(key)
        if hit is None:
            s, t = self.pairs[i]
            paths = _enumerate(self.adj, s, t, allowed, self.induced, self.max_nodes,
                               &self.truncated, self.deadline)
            hit = []
            for p in paths:
                removed = 0
                for v in p:
                    removed |= bit(v)
                    if self.induced:
                        removed |= self.adj[v]
                hit.append((p, removed))
            self.cache[key] = hit
        return hit

    cdef bint extend(self, tuple subset, int pos, uint64_t allowed) except -1:
        cdef uint64_t removed
        if pos == len(subset):
            return True
        self.steps += 1
        if self.deadline is not None and (self.steps & 255) == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeout
        key = (subset[pos:], allowed)
        if key in self.failed:
            return False
        i = subset[pos]
        for p, removed in self.candidates(i, allowed):
            self.chosen.append((i, p))
            if len(self.chosen) > len(self.best):
                self.best = list(self.chosen)
            if self.extend(subset, pos + 1, allowed & ~removed):
                return True
            self.chosen.pop()
        self.failed.add(key)
        return False

    def run(self):
        cdef int n = self.n, k = len(self.pairs), x, y, i, j
        cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else (bit(n) - 1)
        cdef uint64_t touch
        try:
            viable = [i for i in range(k) if self.candidates(i, full)]
            conflict = {i: 0 for i in viable}
            for x in range(len(viable)):
                i = viable[x]
                si, ti = self.pairs[i]
                touch = bit(si) | bit(ti)
                if self.induced:
                    touch |= self.adj[si] | self.adj[ti]
                for y in range(x + 1, len(viable)):
                    j = viable[y]
                    sj, tj = self.pairs[j]
                    if (touch >> sj) & 1 or (touch >> tj) & 1:
                        conflict[i] |= 1 << j
                        conflict[j] |= 1 << i
            for size in range(len(viable), 0, -1):
                for subset in _subsets(viable, conflict, size, 0, 0, []):
                    self.chosen = []
                    if self.extend(subset, 0, full):
                        return list(self.chosen), self._status()
        except SearchTimeout:
            return list(self.best), "timeout"
        return [], self._status()

    def _status(self):
        return "truncated" if self.truncated else "optimal"


def _subsets(list viable, dict conflict, int size, int start, forbid, list acc):
    cdef int x
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


def route_search(adj, pairs, bint induced=True, int max_nodes=0, deadline=None):
    if len(adj) > 64:
        raise ValueError("compiled kernel handles at most 64 nodes")
    return _Search(adj, pairs, induced, max_nodes, deadline).run()

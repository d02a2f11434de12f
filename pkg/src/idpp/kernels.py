"""Backend selection for the exact search kernels.

The compiled ``_csearch`` extension is used when it was built and the graph
fits in 64-bit masks; everything else runs on the pure-Python ``_search``.
"""

from __future__ import annotations

from idpp import _search as python_backend

try:
    from idpp import _csearch as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"


def pick(node_count: int):
    if compiled_backend is not None and node_count <= compiled_backend.MAX_NODES:
        return compiled_backend
    return python_backend


def enumerate_paths(adj, source, sink, allowed, induced=True, max_nodes=0):
    return pick(len(adj)).enumerate_paths(adj, source, sink, allowed, induced, max_nodes)


def route_search(adj, pairs, induced=True, max_nodes=0, deadline=None):
    return pick(len(adj)).route_search(adj, pairs, induced, max_nodes, deadline)

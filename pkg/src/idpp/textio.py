"""Line-oriented text formats for graphs, instances, solutions and maps.

Graph::

    g <node_count> <edge_count>
    e <u> <v>            # one per edge, u < v, canonical order

Instances append ``t <source> <sink>`` lines, solutions are
``r <pair_index> <v0> ... <vL>`` lines and reduction maps are a
``reduction <kind> <original_node_count>`` header followed by
``map a <v> <a_v> <b_v>`` or ``map x <u> <v> <mid>`` lines. Lines starting
with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from idpp.graph import Graph, IdppInstance
from idpp.reductions import ReductionKind, ReductionMap
from idpp.verify import IdppSolution


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        where = ":".join(str(x) for x in (source, line) if x is not None)
        super().__init__(f"{where}: {message}" if where else message)


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(fields: list[str], lineno: int, count: int | None = None) -> list[int]:
    if count is not None and len(fields) != count:
        raise ParseError(f"expected {count} integers, got {len(fields)}", lineno)
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


# -- graphs and instances -------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"g {g.node_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_instance(inst: IdppInstance) -> str:
    return format_graph(inst.graph) + "".join(f"t {s} {t}\n" for s, t in inst.pairs)


def parse_instance(text: str, cls: type[IdppInstance] = IdppInstance) -> IdppInstance:
    header = None
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    pairs: list[tuple[int, int]] = []
    pair_lines: list[int] = []
    for lineno, fields in _records(text):
        tag, rest = fields[0], fields[1:]
        if header is None:
            if tag != "g":
                raise ParseError("first record must be 'g <node_count> <edge_count>'", lineno)
            header = (lineno, *_ints(rest, lineno, 2))
            if header[1] < 0 or header[2] < 0:
                raise ParseError("negative count in header", lineno)
        elif tag == "e":
            if pairs:
                raise ParseError("edge record after terminal pairs", lineno)
            edges.append(tuple(_ints(rest, lineno, 2)))
            edge_lines.append(lineno)
        elif tag == "t":
            pairs.append(tuple(_ints(rest, lineno, 2)))
            pair_lines.append(lineno)
        else:
            raise ParseError(f"unknown record type {tag!r}", lineno)
    if header is None:
        raise ParseError("missing 'g' header")
    hline, n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", hline)
    seen: set[tuple[int, int]] = set()
    for lineno, (u, v) in zip(edge_lines, edges):
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge endpoint out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    g = Graph(n, edges)
    for lineno, (s, t) in zip(pair_lines, pairs):
        if not (0 <= s < n and 0 <= t < n):
            raise ParseError(f"terminal out of range [0, {n})", lineno)
        if s == t:
            raise ParseError("source equals sink", lineno)
    return cls(g, pairs)


def parse_graph(text: str) -> Graph:
    inst = parse_instance(text)
    if inst.pairs:
        raise ParseError("graph file must not contain terminal pairs")
    return inst.graph


# -- solutions ------------------------------------------------------------


def format_solution(sol: IdppSolution) -> str:
    return "".join(
        "r " + " ".join(str(x) for x in (i, *p)) + "\n" for i, p in sol.routed
    )


def parse_solution(text: str, cls: type[IdppSolution] = IdppSolution) -> IdppSolution:
    routed = []
    for lineno, fields in _records(text):
        if fields[0] != "r":
            raise ParseError(f"unknown record type {fields[0]!r}", lineno)
        nums = _ints(fields[1:], lineno)
        if not nums:
            raise ParseError("'r' record needs a pair index", lineno)
        routed.append((nums[0], tuple(nums[1:])))
    return cls(tuple(routed))


# -- reduction maps -------------------------------------------------------


def format_map(rmap: ReductionMap) -> str:
    lines = [f"reduction {rmap.kind.value} {rmap.original_node_count}"]
    if rmap.kind is ReductionKind.IS_TO_IDPP:
        lines += [f"map a {v} {a} {b}" for v, (a, b) in enumerate(rmap.terminals)]
    else:
        lines += [f"map x {u} {v} {x}" for (u, v), x in sorted(rmap.midpoints.items())]
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> ReductionMap:
    kind = None
    n = 0
    terminals: dict[int, tuple[int, int]] = {}
    mids: dict[tuple[int, int], int] = {}
    for lineno, fields in _records(text):
        if kind is None:
            if fields[0] != "reduction" or len(fields) != 3:
                raise ParseError("first record must be 'reduction <kind> <node_count>'", lineno)
            try:
                kind = ReductionKind(fields[1])
            except ValueError:
                raise ParseError(f"unknown reduction kind {fields[1]!r}", lineno) from None
            (n,) = _ints(fields[2:], lineno, 1)
            continue
        if fields[0] != "map" or len(fields) < 2:
            raise ParseError(f"unknown record {' '.join(fields)!r}", lineno)
        if fields[1] == "a" and kind is ReductionKind.IS_TO_IDPP:
            v, a, b = _ints(fields[2:], lineno, 3)
            terminals[v] = (a, b)
        elif fields[1] == "x" and kind is ReductionKind.DPP_TO_IDPP:
            u, v, x = _ints(fields[2:], lineno, 3)
            mids[(min(u, v), max(u, v))] = x
        else:
            raise ParseError(f"map record {fields[1]!r} does not fit a {kind.value} map", lineno)
    if kind is None:
        raise ParseError("missing 'reduction' header")
    try:
        if kind is ReductionKind.IS_TO_IDPP:
            if sorted(terminals) != list(range(n)):
                raise ParseError(f"need one 'map a' record for each of the {n} nodes")
            return ReductionMap(kind, n, terminals=tuple(terminals[v] for v in range(n)))
        return ReductionMap(kind, n, midpoints=mids)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- files ----------------------------------------------------------------


def _read(path: str | Path, parser, *args):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parser(text, *args)
    except ParseError as exc:
        raise ParseError(exc.message, exc.line, str(path)) from None


def read_instance(path: str | Path, cls: type[IdppInstance] = IdppInstance) -> IdppInstance:
    return _read(path, parse_instance, cls)


def read_graph(path: str | Path) -> Graph:
    return _read(path, parse_graph)


def read_solution(path: str | Path, cls: type[IdppSolution] = IdppSolution) -> IdppSolution:
    return _read(path, parse_solution, cls)


def read_map(path: str | Path) -> ReductionMap:
    return _read(path, parse_map)


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")

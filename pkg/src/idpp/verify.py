"""Feasibility checks for induced-disjoint and node-disjoint routings."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from idpp.graph import Graph, IdppInstance

Path = tuple[int, ...]


class ViolationKind(enum.IntEnum):
    NOT_A_PATH = 0
    CHORD = 1
    SHARED_NODE = 2
    ADJACENT_PATHS = 3
    ENDPOINT_MISMATCH = 4
    BAD_INDEX = 5


@dataclass(frozen=True, order=True)
class Violation:
    kind: ViolationKind
    # positions in ``routed`` (one for per-path problems, two for pairwise ones)
    entries: tuple[int, ...]
    detail: str = field(default="", compare=False)

    def __str__(self) -> str:
        return f"{self.kind.name} {self.detail}"


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = ()

    @property
    def feasible(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}

    def __str__(self) -> str:
        lines = [f"feasible {int(self.feasible)}"]
        lines.extend(str(v) for v in self.violations)
        return "\n".join(lines)


@dataclass(frozen=True)
class IdppSolution:
    """Routed pairs, each as ``(pair_index, path)``."""

    routed: tuple[tuple[int, Path], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "routed", tuple((int(i), tuple(int(v) for v in p)) for i, p in self.routed)
        )

    @property
    def size(self) -> int:
        return len(self.routed)

    def pair_indices(self) -> list[int]:
        return [i for i, _ in self.routed]

    def paths(self) -> list[Path]:
        return [p for _, p in self.routed]


class DppSolution(IdppSolution):
    """Routed pairs whose paths only need to be pairwise node-disjoint."""


def _check_nodes(g: Graph, nodes: Iterable[int]) -> None:
    for v in nodes:
        if not 0 <= v < g.node_count:
            raise ValueError(f"invalid node id {v} for graph with {g.node_count} nodes")


def is_simple_path(g: Graph, p: Sequence[int]) -> bool:
    _check_nodes(g, p)
    if not p or len(set(p)) != len(p):
        return False
    return all(g.adjacent(a, b) for a, b in zip(p, p[1:]))


def is_induced_path(g: Graph, p: Sequence[int]) -> bool:
    """True iff ``p`` is a simple path of ``g`` without chords.

    Single nodes and single edges count as induced paths.
    """
    if not is_simple_path(g, p):
        return False
    pos = {v: i for i, v in enumerate(p)}
    for i, v in enumerate(p):
        for w in g.neighbors(v):
            j = pos.get(w)
            if j is not None and abs(i - j) > 1:
                return False
    return True


def mutually_remote(g: Graph, p1: Sequence[int], p2: Sequence[int]) -> bool:
    """No shared node and no edge between the two node sets."""
    _check_nodes(g, p1)
    _check_nodes(g, p2)
    s2 = set(p2)
    for v in p1:
        if v in s2 or not s2.isdisjoint(g.neighbors(v)):
            return False
    return True


def _path_violations(g: Graph, e: int, p: Path, induced: bool) -> list[Violation]:
    if not p:
        return [Violation(ViolationKind.NOT_A_PATH, (e,), f"entry {e}: empty path")]
    bad = [v for v in p if not 0 <= v < g.node_count]
    if bad:
        return [Violation(ViolationKind.NOT_A_PATH, (e,), f"entry {e}: invalid node {bad[0]}")]
    out = []
    if len(set(p)) != len(p):
        out.append(Violation(ViolationKind.NOT_A_PATH, (e,), f"entry {e}: repeated node"))
    else:
        gaps = [(a, b) for a, b in zip(p, p[1:]) if not g.adjacent(a, b)]
        if gaps:
            a, b = gaps[0]
            out.append(Violation(ViolationKind.NOT_A_PATH, (e,), f"entry {e}: no edge {a}-{b}"))
        if induced:
            for i in range(len(p)):
                for j in range(i + 2, len(p)):
                    if g.adjacent(p[i], p[j]):
                        out.append(
                            Violation(ViolationKind.CHORD, (e,), f"entry {e}: chord {p[i]}-{p[j]}")
                        )
    return out


def _check_routing(inst: IdppInstance, routed, induced: bool) -> Verdict:
    g = inst.graph
    found: list[Violation] = []
    seen: set[int] = set()
    for e, (i, p) in enumerate(routed):
        if not 0 <= i < inst.k:
            found.append(Violation(ViolationKind.BAD_INDEX, (e,), f"entry {e}: pair {i} out of range"))
        elif i in seen:
            found.append(Violation(ViolationKind.BAD_INDEX, (e,), f"entry {e}: pair {i} routed twice"))
        else:
            seen.add(i)
            s, t = inst.pairs[i]
            if p and (p[0] != s or p[-1] != t):
                found.append(
                    Violation(
                        ViolationKind.ENDPOINT_MISMATCH,
                        (e,),
                        f"entry {e}: pair {i} needs {s}->{t}, path runs {p[0]}->{p[-1]}",
                    )
                )
        found.extend(_path_violations(g, e, p, induced))

    valid = [
        {v for v in p if 0 <= v < g.node_count} for _, p in routed
    ]
    for e, f in combinations(range(len(routed)), 2):
        shared = valid[e] & valid[f]
        if shared:
            found.append(
                Violation(
                    ViolationKind.SHARED_NODE, (e, f), f"entries {e},{f}: share node {min(shared)}"
                )
            )
        if induced:
            touching = sorted(
                (u, w) for u in valid[e] for w in g.neighbors(u) if w in valid[f]
            )
            if touching:
                u, w = touching[0]
                found.append(
                    Violation(
                        ViolationKind.ADJACENT_PATHS, (e, f), f"entries {e},{f}: edge {u}-{w}"
                    )
                )
    return Verdict(tuple(sorted(found)))


def verify_idpp_solution(inst: IdppInstance, sol: IdppSolution) -> Verdict:
    """Judge an induced-disjoint routing; reports every violation, sorted."""
    return _check_routing(inst, sol.routed, induced=True)


def verify_dpp_solution(inst: IdppInstance, sol: IdppSolution) -> Verdict:
    """Judge a node-disjoint routing (chords and touching paths allowed)."""
    return _check_routing(inst, sol.routed, induced=False)

"""Command-line interface: ``idpp reduce|solve|verify|bench``.

Exit codes: 0 success/feasible, 1 infeasible (or bench bound violated),
2 parse or argument error, 3 I/O error, 4 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from idpp import bench, textio
from idpp.graph import IdppInstance
from idpp.reductions import DppInstance, dpp_to_idpp, is_to_idpp
from idpp.solvers import (
    BestFound,
    BudgetError,
    SolveBudget,
    boost_threshold,
    boosted_solve,
    exact_idpp,
    greedy_idpp,
)
from idpp.verify import IdppSolution, verify_idpp_solution

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_BUDGET = 4


@dataclass
class RunReport:
    command: str
    algo: str
    n: int
    m: int
    k: int
    size: int
    optimal: bool
    wall_time: float
    status: str = "ok"
    solution: IdppSolution | None = None

    def __post_init__(self) -> None:
        if self.solution is not None and self.solution.size != self.size:
            raise ValueError("size must match the embedded solution")

    def to_json(self, include_timing: bool = False) -> str:
        record = {
            "command": self.command,
            "algo": self.algo,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "size": self.size,
            "optimal": self.optimal,
            "status": self.status,
        }
        if include_timing:
            record["wall_time"] = round(self.wall_time, 6)
        if self.solution is not None:
            record["routed"] = [[i, list(p)] for i, p in self.solution.routed]
        return json.dumps(record, separators=(",", ":"))


def _budget(args) -> SolveBudget:
    return SolveBudget(
        max_nodes_exact=args.budget_nodes,
        max_path_nodes=args.max_path_nodes,
        time_limit=args.time_limit,
    )


def _summary(inst: IdppInstance) -> str:
    g = inst.graph
    return f"n={g.node_count} m={g.edge_count} k={inst.k}"


def cmd_reduce(args) -> int:
    if args.kind == "is2idpp":
        reduced, rmap = is_to_idpp(textio.read_graph(args.input))
    else:
        reduced, rmap = dpp_to_idpp(textio.read_instance(args.input, DppInstance))
    out = Path(args.out)
    textio.write_text(out, textio.format_instance(reduced))
    textio.write_text(args.map or out.with_name(out.name + ".map"), textio.format_map(rmap))
    print(_summary(reduced))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = textio.read_instance(args.instance)
    budget = _budget(args)
    start = time.perf_counter()
    status = "ok"
    if args.algo == "exact":
        result = exact_idpp(inst, budget)
        optimal = not isinstance(result, BestFound)
    elif args.algo == "greedy":
        result = greedy_idpp(inst)
        optimal = False
    else:
        params = boost_threshold(args.epsilon)
        result = boosted_solve(inst, params, greedy_idpp, budget)
        optimal = inst.graph.node_count < params.threshold and not isinstance(result, BestFound)
    if isinstance(result, BestFound):
        status = result.reason
        result = result.solution
    elapsed = time.perf_counter() - start
    g = inst.graph
    report = RunReport(
        "solve", args.algo, g.node_count, g.edge_count, inst.k,
        result.size, optimal, elapsed, status, result,
    )
    if args.out:
        textio.write_text(args.out, textio.format_solution(result))
    print(report.to_json(include_timing=args.timing))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = textio.read_instance(args.instance)
    sol = textio.read_solution(args.solution)
    verdict = verify_idpp_solution(inst, sol)
    print(verdict)
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def _n_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if not 1 <= lo_i <= hi_i:
        raise argparse.ArgumentTypeError(f"need 1 <= LO <= HI, got {text!r}")
    return lo_i, hi_i


def cmd_bench(args) -> int:
    n_min, n_max = args.n
    try:
        rows = bench.bench_rows(
            args.family, n_min, n_max, args.trials, args.seed,
            p=args.p, alpha=args.alpha, budget=_budget(args), jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    table = bench.format_csv(rows)
    if args.out:
        textio.write_text(args.out, table)
    else:
        sys.stdout.write(table)
    bad = [r.trial for r in rows if r.within_bound is False]
    if bad:
        print(f"error: exact/greedy ratio exceeds sqrt(m) in trials {bad}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idpp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--budget-nodes", type=int, default=20, help="max nodes for exact search")
        p.add_argument("--max-path-nodes", type=int, default=None)
        p.add_argument("--time-limit", type=float, default=None, metavar="SECS")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (bench only)")

    p = sub.add_parser("reduce", help="reduce an IS graph or DPP instance to IDPP")
    p.add_argument("kind", choices=("is2idpp", "dpp2idpp"))
    p.add_argument("input")
    p.add_argument("--out", required=True, help="reduced instance path")
    p.add_argument("--map", default=None, help="map path (default: <out>.map)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="solve an IDPP instance")
    p.add_argument("algo", choices=("exact", "greedy", "boosted"))
    p.add_argument("instance")
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--out", default=None, help="write the solution here")
    p.add_argument("--timing", action="store_true", help="include wall_time in the report")
    budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="exact vs greedy on random reduced instances")
    p.add_argument("family", choices=bench.FAMILIES)
    p.add_argument("--n", type=_n_range, default=(6, 6), help="N or LO-HI nodes before reduction")
    p.add_argument("--p", type=float, default=0.3, help="edge probability (gnp)")
    p.add_argument("--alpha", type=float, default=1.2, help="edge exponent m = n^alpha (sparse)")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    budget_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except textio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # invalid flag values (epsilon range, budget) rejected by the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

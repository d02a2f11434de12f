"""Induced disjoint paths: verification, exact and greedy solving, reductions."""

from idpp.graph import (
    Graph,
    IdppInstance,
    TerminalPair,
    adjacent,
    neighbors,
    new_graph,
    remove_closed_neighborhood,
)
from idpp.kernels import BACKEND
from idpp.reductions import (
    DppInstance,
    IsInstance,
    ReductionKind,
    ReductionMap,
    dpp_to_idpp,
    is_to_idpp,
    lift_dpp_solution,
    lift_is_solution,
    project_dpp_solution,
    project_idpp_solution,
)
from idpp.solvers import (
    BestFound,
    BoostParams,
    BudgetError,
    SolveBudget,
    boost_threshold,
    boosted_solve,
    check_boost_inequality,
    exact_dpp,
    exact_idpp,
    exact_max_independent_set,
    greedy_idpp,
)
from idpp.verify import (
    DppSolution,
    IdppSolution,
    Verdict,
    Violation,
    ViolationKind,
    is_induced_path,
    mutually_remote,
    verify_dpp_solution,
    verify_idpp_solution,
)

__version__ = "0.1.0"

from src.fhs.traces import (
    Invariant4,
    FhsTraces,
    boundary_invariants,
    interior_invariants,
    bar_traces_from,
    surface_from,
    check_basic_identity,
    tracepoly_residual,
    check_consistency,
)
from src.fhs.solvers import (
    CASES,
    BoundarySolutions,
    solve_boundary_symmetric,
    boundary_polynomials,
    recover_ab,
    solve_boundary_general,
)
from src.fhs.resultants import ResultantReport, expected_leading_coefficient, resultant_check
from src.fhs.counterexample import (
    X_STAR,
    CounterexampleReport,
    x_star,
    exact_invariants,
    counterexample_pair,
    counterexample_report,
)

__all__ = [
    "Invariant4",
    "FhsTraces",
    "boundary_invariants",
    "interior_invariants",
    "bar_traces_from",
    "surface_from",
    "check_basic_identity",
    "tracepoly_residual",
    "check_consistency",
    "CASES",
    "BoundarySolutions",
    "solve_boundary_symmetric",
    "boundary_polynomials",
    "recover_ab",
    "solve_boundary_general",
    "ResultantReport",
    "expected_leading_coefficient",
    "resultant_check",
    "X_STAR",
    "CounterexampleReport",
    "x_star",
    "exact_invariants",
    "counterexample_pair",
    "counterexample_report",
]

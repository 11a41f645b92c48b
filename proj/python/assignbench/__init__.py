"""Balanced assignment solvers (brute force, Hungarian, branch and bound) and
their benchmark harness."""

from ._core import (
    CSV_HEADER,
    SOLVERS,
    AssignError,
    assignment_cost,
    emit_csv,
    emit_svg_plot,
    gen_instance,
    parse_matrix,
    run_suite,
    serialize_matrix,
    solve,
    solve_bnb_stats,
    trial_seed,
    verify_certificate,
)

__all__ = [
    "CSV_HEADER",
    "SOLVERS",
    "AssignError",
    "assignment_cost",
    "emit_csv",
    "emit_svg_plot",
    "gen_instance",
    "parse_matrix",
    "run_suite",
    "serialize_matrix",
    "solve",
    "solve_bnb_stats",
    "trial_seed",
    "verify_certificate",
]

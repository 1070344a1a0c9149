"""Boolean equation solving over propositional formulas."""

from ._boolsolve import (
    Error,
    Formula,
    NoSolution,
    NotSubstitutible,
    ParseError,
    Problem,
    TooLarge,
    canonical,
    check,
    elim_witness,
    eliminate,
    entails,
    enumerate_solutions,
    equivalent,
    exists_solution,
    is_satisfiable,
    is_valid,
    parse,
    project,
    simplify,
    solve,
    substitute,
    to_text,
    truth_table,
    weakest_precondition,
)

__all__ = [
    "Error",
    "Formula",
    "NoSolution",
    "NotSubstitutible",
    "ParseError",
    "Problem",
    "TooLarge",
    "canonical",
    "check",
    "elim_witness",
    "eliminate",
    "entails",
    "enumerate_solutions",
    "equivalent",
    "exists_solution",
    "is_satisfiable",
    "is_valid",
    "parse",
    "project",
    "simplify",
    "solve",
    "substitute",
    "to_text",
    "truth_table",
    "weakest_precondition",
]

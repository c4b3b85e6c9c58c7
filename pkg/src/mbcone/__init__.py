"""Exact generators of polyhedral cones by the Motzkin-Burger iteration."""
from .exact_arith import InequalitySystem, LinearForm, evaluate, rank
from .mb_core import ConeDescription, mb_step
from .solver import conehull, solve_direct
from .verify import check_solutions, cones_equal, oracle_enumerate

__all__ = [
    "ConeDescription",
    "InequalitySystem",
    "LinearForm",
    "check_solutions",
    "conehull",
    "cones_equal",
    "evaluate",
    "mb_step",
    "oracle_enumerate",
    "rank",
    "solve_direct",
]

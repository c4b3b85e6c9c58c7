"""Rank-reducing preprocessing and back-substitution.

Unused variables are dropped first. A maximal independent subsystem
``l_1..l_r`` then defines new variables ``y_j = -l_j(x)``; in these variables
the lineality space disappears, the base inequalities become ``y >= 0`` and
the remaining ``m - r`` forms depend on ``y`` alone. The reduced cone is
solved starting from the rays ``e_1..e_r`` and mapped back to ``x``.

Variable indices are 0-based throughout.
"""
from dataclasses import dataclass
from typing import Optional

from .exact_arith import (
    DimensionError,
    InequalitySystem,
    LinearForm,
    Substitution,
    max_independent_subset,
    solve_for_substitution,
)
from .mb_core import ConeDescription

__all__ = [
    "ReductionRecord",
    "Substitution",
    "back_substitute",
    "change_of_variables",
    "strip_unused_variables",
]


@dataclass(frozen=True)
class ReductionRecord:
    bad_indices: tuple
    original_dimension: int
    substitution: Optional[Substitution] = None


def strip_unused_variables(system: InequalitySystem):
    """Drop variables with a zero coefficient in every form.

    Returns ``(stripped_system, bad_indices)``; kept variables retain their
    relative order.
    """
    n = system.dimension
    bad = [i for i in range(n) if all(not f[i] for f in system.forms)]
    if not bad:
        return system, []
    keep = [i for i in range(n) if i not in set(bad)]
    forms = tuple(LinearForm(f[i] for i in keep) for f in system.forms)
    return InequalitySystem(len(keep), forms), bad


def change_of_variables(system: InequalitySystem):
    """Rewrite the system in the variables ``y_j = -l_j(x)`` of a base subsystem.

    Returns ``(reduced, substitution)``. ``reduced`` lives in dimension ``r``
    and holds only the non-base forms, in their original order; the base
    forms are the implicit constraints ``-y_j <= 0``.
    """
    base = max_independent_subset(system.forms)
    if not base:
        raise ValueError("system has rank 0; nothing to change")
    sub = solve_for_substitution([system.forms[j] for j in base], system.dimension)
    base_set = set(base)
    reduced = []
    for j, form in enumerate(system.forms):
        if j in base_set:
            continue
        y_part, free_part = sub.substitute(form)
        if any(free_part):
            raise AssertionError(f"form {j} still depends on a free variable after substitution")
        reduced.append(LinearForm(y_part))
    return InequalitySystem(sub.r, tuple(reduced)), sub


def _lift(x, bad, original_n):
    """Reinsert zero coordinates at the ``bad`` indices."""
    it = iter(x)
    bad = set(bad)
    return tuple(0 if i in bad else next(it) for i in range(original_n))


def back_substitute(cone_y: ConeDescription, sub: Substitution, bad_indices, original_n: int):
    """Map a cone in ``y`` coordinates back to the original variables."""
    if cone_y.dimension != sub.r:
        raise DimensionError(f"cone lives in dimension {cone_y.dimension}, substitution has r={sub.r}")
    if sub.dimension + len(bad_indices) != original_n:
        raise DimensionError("substitution and unused variables do not add up to original_n")
    if cone_y.lineality:
        raise ValueError("the reduced cone must be pointed")
    zero_y = (0,) * sub.r
    k = len(sub.free_indices)
    lineality = []
    for i in range(k):
        free = tuple(int(i == j) for j in range(k))
        lineality.append(_lift(sub.apply(zero_y, free), bad_indices, original_n))
    for b in bad_indices:
        lineality.append(tuple(int(i == b) for i in range(original_n)))
    rays = [_lift(sub.apply(v, (0,) * k), bad_indices, original_n) for v in cone_y.rays]
    return ConeDescription.build(original_n, lineality, rays)

"""Drivers: the plain Motzkin-Burger loop and the preprocessed pipeline."""
from .exact_arith import InequalitySystem, LinearForm
from .mb_core import ConeDescription, EvalTableau, mb_step
from .reduce import back_substitute, change_of_variables, strip_unused_variables


class InternalInvariantError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


def iterate(cone, processed, forms, adjacency="combinatorial", pointed=False):
    """Fold :func:`mb_step` over ``forms``; returns the final cone.

    With ``pointed=True`` the lineality space must stay empty throughout.
    """
    processed = list(processed)
    tableau = EvalTableau(processed, cone.rays)
    for form in forms:
        cone, tableau = mb_step(cone, processed, form, tableau, adjacency=adjacency)
        processed.append(form)
        if pointed and cone.lineality:
            raise InternalInvariantError("lineality appeared in the reduced iteration")
    return cone


def solve_direct(system: InequalitySystem, adjacency="combinatorial") -> ConeDescription:
    """Start from the whole space and add the inequalities in input order."""
    start = ConeDescription.full_space(system.dimension)
    return iterate(start, [], system.forms, adjacency)


def solve_reduced(system: InequalitySystem, adjacency="combinatorial") -> ConeDescription:
    n = system.dimension
    stripped, bad = strip_unused_variables(system)
    if stripped.rank() == 0:
        return ConeDescription.full_space(n)
    reduced, sub = change_of_variables(stripped)
    r = sub.r
    basis = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    positivity = [LinearForm([-x for x in e]) for e in basis]
    start = ConeDescription(r, (), tuple(sorted(basis)))
    cone_y = iterate(start, positivity, reduced.forms, adjacency, pointed=True)
    return back_substitute(cone_y, sub, bad, n)


def conehull(system: InequalitySystem, as_is=False, adjacency="combinatorial") -> ConeDescription:
    """Lineality basis and extreme rays of ``{x : l_j(x) <= 0 for all j}``.

    ``as_is=True`` skips the change of variables and runs the plain loop.
    """
    if as_is:
        return solve_direct(system, adjacency)
    return solve_reduced(system, adjacency)

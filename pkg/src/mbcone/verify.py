"""Checking candidate solutions and comparing cones against a brute-force oracle."""
from dataclasses import dataclass, field
from itertools import combinations

from .exact_arith import (
    DimensionError,
    InequalitySystem,
    canonicalize_ray,
    evaluate,
    null_space,
    rank,
    rref,
)
from .mb_core import ConeDescription

ORACLE_MAX_N = 6
ORACLE_MAX_M = 10


@dataclass
class CheckReport:
    valid: list = field(default_factory=list)
    invalid: list = field(default_factory=list)  # (vector, index of first violated form)

    @property
    def all_valid(self) -> bool:
        return not self.invalid


def check_solutions(system: InequalitySystem, candidates) -> CheckReport:
    report = CheckReport()
    for x in candidates:
        x = tuple(x)
        if len(x) != system.dimension:
            raise DimensionError(f"candidate {x} does not live in dimension {system.dimension}")
        witness = next((j for j, f in enumerate(system.forms) if evaluate(f, x) > 0), None)
        if witness is None:
            report.valid.append(x)
        else:
            report.invalid.append((x, witness))
    return report


def _reducer(lineality, n):
    """Return a function mapping a vector to the canonical representative of v + span(lineality)."""
    basis, pivots = rref(lineality, n) if lineality else ([], [])

    def reduce(v):
        w = list(v)
        for row, p in zip(basis, pivots):
            f = w[p]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    return reduce


def oracle_enumerate(system: InequalitySystem, max_n=ORACLE_MAX_N, max_m=ORACLE_MAX_M):
    """Generators by enumeration of equality subsystems.

    An extreme ray modulo the lineality space ``L`` spans, together with
    ``L``, the solution space of some subsystem ``{l_j = 0, j in J}`` of
    dimension ``dim L + 1``. Every subset ``J`` is tried, the direction
    transverse to ``L`` is oriented to satisfy the whole system if possible,
    and non-extreme survivors are filtered by tight-set inclusion.
    """
    n, m = system.dimension, system.m
    if n > max_n or m > max_m:
        raise ValueError(f"oracle limited to n <= {max_n}, m <= {max_m}; got n={n}, m={m}")
    rows = system.rows
    lineality = null_space(rows, n)
    target = len(lineality) + 1
    reduce = _reducer(lineality, n)
    found = {}
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            space = null_space([rows[j] for j in subset], n)
            if len(space) != target:
                continue
            direction = next((w for w in map(reduce, space) if any(w)), None)
            if direction is None:
                continue
            for sign in (1, -1):
                w = [sign * x for x in direction]
                if all(evaluate(f, w) <= 0 for f in system.forms):
                    ray = canonicalize_ray(w)
                    if ray not in found:
                        found[ray] = frozenset(
                            j for j, f in enumerate(system.forms) if not evaluate(f, ray))
    extreme = [v for v, tight in found.items()
               if not any(tight < other for u, other in found.items() if u != v)]
    return ConeDescription(n, tuple(lineality), tuple(sorted(extreme)))


def cones_equal(a: ConeDescription, b: ConeDescription, system=None) -> bool:
    """Same lineality space and the same rays modulo it.

    ``system`` is accepted for call-site symmetry with the other checks and
    only used to validate the dimension.
    """
    if a.dimension != b.dimension:
        raise DimensionError("cones live in different dimensions")
    if system is not None and system.dimension != a.dimension:
        raise DimensionError("system and cones live in different dimensions")
    ra = rank(a.lineality)
    if ra != rank(b.lineality) or ra != rank(a.lineality + b.lineality):
        return False
    reduce = _reducer(list(a.lineality), a.dimension)

    def normal(rays):
        out = set()
        for v in rays:
            w = reduce(v)
            if not any(w):
                return None
            out.add(canonicalize_ray(w))
        return out

    na, nb = normal(a.rays), normal(b.rays)
    return na is not None and na == nb

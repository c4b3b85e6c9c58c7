"""Exact rational vectors, linear forms and Gaussian elimination.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples. Canonical
generators (see :func:`canonicalize_ray`) are tuples of Python ``int``, which
compare and hash equal to the corresponding fractions.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
QVector = tuple  # tuple of Scalar


class DimensionError(ValueError):
    """Raised when vector or form lengths disagree."""


def as_rational(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they carry binary rounding that has no place in an
    exact computation.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "__index__"):  # numpy integers
        return Fraction(int(value))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def qvector(entries: Iterable) -> QVector:
    return tuple(as_rational(e) for e in entries)


class LinearForm:
    """Left-hand side ``a_1 x_1 + ... + a_n x_n`` of one inequality ``<= 0``.

    Besides the exact coefficients the form keeps an integral copy scaled by
    the common denominator, so evaluating it on integral vectors stays in
    integer arithmetic.
    """

    __slots__ = ("coefficients", "_scaled", "_denominator")

    def __init__(self, coefficients: Iterable):
        self.coefficients = qvector(coefficients)
        den = lcm(1, *(c.denominator for c in self.coefficients))
        self._denominator = den
        self._scaled = tuple(c.numerator * (den // c.denominator) for c in self.coefficients)

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self._scaled)

    def __call__(self, x: Sequence) -> Fraction:
        return evaluate(self, x)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __neg__(self):
        return LinearForm(-c for c in self.coefficients)

    def __eq__(self, other):
        if isinstance(other, LinearForm):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({[str(c) for c in self.coefficients]})"


def as_form(form) -> LinearForm:
    return form if isinstance(form, LinearForm) else LinearForm(form)


@dataclass(frozen=True)
class InequalitySystem:
    """The system ``l_j(x) <= 0, j = 1..m`` in dimension ``n``.

    Form order is significant: it is the order in which the solver adds
    inequalities.
    """

    dimension: int
    forms: tuple = ()

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")
        forms = tuple(as_form(f) for f in self.forms)
        for j, f in enumerate(forms):
            if f.dimension != self.dimension:
                raise DimensionError(
                    f"form {j} has length {f.dimension}, expected {self.dimension}")
        object.__setattr__(self, "forms", forms)

    @classmethod
    def from_rows(cls, rows, dimension=None):
        rows = [list(r) for r in rows]
        if dimension is None:
            if not rows:
                raise ValueError("dimension is required for an empty system")
            dimension = len(rows[0])
        return cls(dimension, tuple(LinearForm(r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.forms)

    @property
    def rows(self) -> list:
        return [f.coefficients for f in self.forms]

    def rank(self) -> int:
        return rank(self.rows) if self.forms else 0

    def __len__(self):
        return len(self.forms)


def evaluate(form, x: Sequence) -> Fraction:
    """Exact value of ``form`` at ``x``."""
    form = as_form(form)
    if len(x) != form.dimension:
        raise DimensionError(f"form has length {form.dimension}, vector has {len(x)}")
    if all(type(xi) is int for xi in x):
        return Fraction(sum(a * xi for a, xi in zip(form._scaled, x)), form._denominator)
    return sum((a * as_rational(xi) for a, xi in zip(form.coefficients, x)), Fraction(0))


def _check_rows(rows, ncols=None):
    rows = [tuple(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise DimensionError(f"row {i} has length {len(r)}, expected {ncols}")
    return rows, ncols


def rref(rows, ncols=None, track=False):
    """Reduced row echelon form over the rationals.

    Columns are scanned left to right and the first remaining row with a
    nonzero entry becomes the pivot row. Returns ``(R, pivots)`` where ``R``
    holds only the nonzero rows; with ``track=True`` also returns ``E`` with
    ``E @ rows == R``.
    """
    rows, ncols = _check_rows(rows, ncols)
    a = [[as_rational(v) for v in r] for r in rows]
    nrows = len(a)
    e = [[Fraction(int(i == j)) for j in range(nrows)] for i in range(nrows)] if track else None
    pivots = []
    top = 0
    for col in range(ncols):
        if top == nrows:
            break
        piv = next((i for i in range(top, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[top], a[piv] = a[piv], a[top]
        if track:
            e[top], e[piv] = e[piv], e[top]
        p = a[top][col]
        a[top] = [v / p for v in a[top]]
        if track:
            e[top] = [v / p for v in e[top]]
        for i in range(nrows):
            f = a[i][col]
            if i != top and f:
                a[i] = [vi - f * vt for vi, vt in zip(a[i], a[top])]
                if track:
                    e[i] = [vi - f * vt for vi, vt in zip(e[i], e[top])]
        pivots.append(col)
        top += 1
    if track:
        return a[:top], pivots, e[:top]
    return a[:top], pivots


def rank(rows) -> int:
    """Rank of a list of equal-length rows; the empty list has rank 0."""
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def max_independent_subset(forms) -> list:
    """Indices of a maximal independent subsystem, picked greedily in order."""
    basis = {}  # pivot column -> row with a 1 in that column
    chosen = []
    for idx, form in enumerate(forms):
        v = list(as_form(form).coefficients)
        for col, row in basis.items():
            f = v[col]
            if f:
                v = [vi - f * ri for vi, ri in zip(v, row)]
        col = next((c for c, vi in enumerate(v) if vi), None)
        if col is None:
            continue
        p = v[col]
        v = [vi / p for vi in v]
        for c, row in basis.items():
            f = row[col]
            if f:
                basis[c] = [ri - f * vi for ri, vi in zip(row, v)]
        basis[col] = v
        chosen.append(idx)
    return chosen


def null_space(rows, dimension: int) -> list:
    """Basis of ``{x : r . x = 0 for all rows}``, canonical and sorted."""
    rows = [tuple(as_form(r).coefficients) if isinstance(r, LinearForm) else r for r in rows]
    r, pivots = rref(rows, dimension) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(dimension):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * dimension
        x[free] = Fraction(1)
        for row, p in zip(r, pivots):
            x[p] = -row[free]
        basis.append(canonicalize_line(x))
    return sorted(basis)


def canonicalize_ray(v: Sequence) -> tuple:
    """Primitive integral positive multiple of ``v``."""
    v = [as_rational(x) for x in v]
    den = lcm(1, *(x.denominator for x in v))
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("cannot canonicalize the zero vector")
    return tuple(x // g for x in ints)


def canonicalize_line(u: Sequence) -> tuple:
    """Like :func:`canonicalize_ray` but with the first nonzero entry positive."""
    w = canonicalize_ray(u)
    if next(x for x in w if x) < 0:
        w = tuple(-x for x in w)
    return w


@dataclass(frozen=True)
class Substitution:
    """Change of variables ``l_j(x) = -y_j`` solved for ``r`` pivot variables.

    ``y_coefficients[k]`` and ``free_coefficients[k]`` give the pivot variable
    ``x[pivot_indices[k]]`` as a linear expression in ``y_1..y_r`` and in the
    free variables ``x[free_indices]`` respectively.
    """

    dimension: int
    pivot_indices: tuple
    free_indices: tuple
    y_coefficients: tuple
    free_coefficients: tuple

    @property
    def r(self) -> int:
        return len(self.pivot_indices)

    def apply(self, y: Sequence, free: Sequence) -> tuple:
        """The point ``x`` for given ``y`` and free-variable values."""
        if len(y) != self.r or len(free) != len(self.free_indices):
            raise DimensionError("wrong number of y or free values")
        x = [Fraction(0)] * self.dimension
        for i, val in zip(self.free_indices, free):
            x[i] = as_rational(val)
        for i, yc, fc in zip(self.pivot_indices, self.y_coefficients, self.free_coefficients):
            x[i] = (sum((c * yi for c, yi in zip(yc, y)), Fraction(0))
                    + sum((c * fi for c, fi in zip(fc, free)), Fraction(0)))
        return tuple(x)

    def substitute(self, form) -> tuple:
        """Rewrite ``form`` in the new variables.

        Returns ``(y_part, free_part)``; for a form in the span of the base
        forms ``free_part`` is all zeros.
        """
        form = as_form(form)
        if form.dimension != self.dimension:
            raise DimensionError("form and substitution dimensions differ")
        a = form.coefficients
        y_part = [Fraction(0)] * self.r
        free_part = [a[i] for i in self.free_indices]
        for p, yc, fc in zip(self.pivot_indices, self.y_coefficients, self.free_coefficients):
            if a[p]:
                y_part = [s + a[p] * c for s, c in zip(y_part, yc)]
                free_part = [s + a[p] * c for s, c in zip(free_part, fc)]
        return tuple(y_part), tuple(free_part)


def solve_for_substitution(base_forms, n: int) -> Substitution:
    """Solve ``l_j(x) = -y_j`` (``j = 1..r``) for ``r`` of the ``x`` variables."""
    rows = [as_form(f).coefficients for f in base_forms]
    r = len(rows)
    if r > n:
        raise ValueError("more base forms than variables")
    if r == 0:
        return Substitution(n, (), tuple(range(n)), (), ())
    red, pivots, e = rref(rows, n, track=True)
    if len(pivots) < r:
        raise ValueError("base forms are linearly dependent")
    free = tuple(i for i in range(n) if i not in set(pivots))
    # R x = -E y  =>  x_p = -(E y)_k - sum_f R[k][f] x_f
    y_coef = tuple(tuple(-v for v in e[k]) for k in range(r))
    free_coef = tuple(tuple(-red[k][f] for f in free) for k in range(r))
    return Substitution(n, tuple(pivots), free, y_coef, free_coef)

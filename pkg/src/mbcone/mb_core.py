"""One Motzkin-Burger iteration: add a single inequality to a cone description.

A cone ``C = L + P`` is stored as a basis ``lineality`` of its lineality space
``L`` and the extreme rays ``rays`` of the strongly convex part ``P``. Adding
``l(x) <= 0`` either rotates a lineality vector into the new hyperplane (when
``l`` is not identically zero on ``L``) or keeps the feasible rays and
combines every adjacent pair of rays lying on opposite sides of ``l = 0``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import (
    DimensionError,
    as_form,
    canonicalize_line,
    canonicalize_ray,
    evaluate,
    rank,
)

ADJACENCY_TESTS = ("combinatorial", "rank")


@dataclass(frozen=True)
class ConeDescription:
    """Lineality basis and extreme rays, both canonical and sorted."""

    dimension: int
    lineality: tuple = ()
    rays: tuple = ()

    @classmethod
    def build(cls, dimension, lineality=(), rays=()):
        """Canonicalize, deduplicate and sort the given generators."""
        for w in (*lineality, *rays):
            if len(w) != dimension:
                raise DimensionError(f"generator of length {len(w)} in dimension {dimension}")
        lin = tuple(sorted({canonicalize_line(u) for u in lineality}))
        if len(lin) != len(lineality):
            raise ValueError("lineality vectors are not independent")
        return cls(dimension, lin, tuple(sorted({canonicalize_ray(v) for v in rays})))

    @classmethod
    def full_space(cls, dimension):
        basis = (tuple(int(i == j) for j in range(dimension)) for i in range(dimension))
        return cls(dimension, tuple(sorted(basis)), ())

    @property
    def U(self):
        return self.lineality

    @property
    def V(self):
        return self.rays


class EvalTableau:
    """Values of every processed form on every current ray.

    ``values[v][j]`` is ``l_j(v)`` for the ``j``-th processed form. Rays that
    survive a step keep their row; only newly created rays are evaluated.
    """

    def __init__(self, forms=(), rays=(), _values=None):
        self.forms = tuple(as_form(f) for f in forms)
        if _values is None:
            _values = {v: tuple(evaluate(f, v) for f in self.forms) for v in rays}
        self.values = _values
        self._masks = {}

    def row(self, v):
        try:
            return self.values[v]
        except KeyError:
            vals = tuple(evaluate(f, v) for f in self.forms)
            self.values[v] = vals
            return vals

    def tight_mask(self, v) -> int:
        """Bit ``j`` is set iff processed form ``j`` vanishes on ``v``."""
        m = self._masks.get(v)
        if m is None:
            m = 0
            for j, val in enumerate(self.row(v)):
                if not val:
                    m |= 1 << j
            self._masks[v] = m
        return m

    def extend(self, form, rays, new_values=None):
        """Tableau over ``forms + (form,)`` restricted to ``rays``."""
        form = as_form(form)
        new_values = new_values or {}
        values = {}
        for v in rays:
            old = self.row(v)
            val = new_values.get(v)
            if val is None:
                val = evaluate(form, v)
            values[v] = old + (val,)
        return EvalTableau(self.forms + (form,), _values=values)

    def consistent_with(self, forms, rays) -> bool:
        forms = tuple(as_form(f) for f in forms)
        if forms != self.forms:
            return False
        return all(self.row(v) == tuple(evaluate(f, v) for f in forms) for v in rays)


def transform_lineality(U, l):
    """Rotate the lineality basis into the hyperplane ``l = 0``.

    Returns ``(U_star, n_ray)``; ``n_ray`` is the chosen basis vector oriented
    so that ``l(n_ray) < 0``.
    """
    l = as_form(l)
    values = [evaluate(l, u) for u in U]
    k = next((i for i, val in enumerate(values) if val), None)
    if k is None:
        raise ValueError("l vanishes on the whole lineality space")
    u, lu = U[k], values[k]
    u_star = []
    for i, (ui, li) in enumerate(zip(U, values)):
        if i == k:
            continue
        if li:
            w = [lu * a - li * b for a, b in zip(ui, u)]
        else:
            w = ui
        u_star.append(canonicalize_line(w))
    n_ray = canonicalize_ray(u if lu < 0 else [-x for x in u])
    return sorted(u_star), n_ray


def transform_rays(V, n_ray, l, _ln=None):
    """Map every ray into ``l = 0`` along ``n_ray`` and add ``n_ray`` itself."""
    l = as_form(l)
    ln = evaluate(l, n_ray) if _ln is None else _ln
    if ln >= 0:
        raise ValueError("n_ray must satisfy l(n_ray) < 0")
    out = {canonicalize_ray(n_ray)}
    for v in V:
        lv = evaluate(l, v)
        if lv:
            w = [-ln * a + lv * b for a, b in zip(v, n_ray)]
            out.add(canonicalize_ray(w))
        else:
            out.add(canonicalize_ray(v))
    return sorted(out)


def combine(v_minus, v_plus, l, _values=None):
    """The ray where segment ``[v_minus, v_plus]`` crosses ``l = 0``."""
    if _values is None:
        l = as_form(l)
        lm, lp = evaluate(l, v_minus), evaluate(l, v_plus)
    else:
        lm, lp = _values
    if not (lm < 0 < lp):
        raise ValueError("combine needs l(v_minus) < 0 < l(v_plus)")
    return canonicalize_ray([-lm * p + lp * m for m, p in zip(v_minus, v_plus)])


def _common_tight(v_minus, v_plus, processed):
    return [f for f in processed if not evaluate(f, v_minus) and not evaluate(f, v_plus)]


def adjacent_combinatorial(v_minus, v_plus, V, processed) -> bool:
    """True iff no third ray of ``V`` is tight on every form both rays are tight on."""
    processed = [as_form(f) for f in processed]
    common = _common_tight(v_minus, v_plus, processed)
    pair = {tuple(v_minus), tuple(v_plus)}
    for v in V:
        if tuple(v) in pair:
            continue
        if all(not evaluate(f, v) for f in common):
            return False
    return True


def adjacent_rank(v_minus, v_plus, processed, r) -> bool:
    """True iff the forms tight on both rays have rank at least ``r - 2``."""
    if r < 2:
        return True
    common = _common_tight(v_minus, v_plus, [as_form(f) for f in processed])
    if len(common) < r - 2:
        return False
    return rank([f.coefficients for f in common]) >= r - 2


def _popcount(x):
    return bin(x).count("1")


def _adjacent_pairs(neg, pos, tableau, all_rays, adjacency, r):
    """Yield the adjacent ``(v_minus, v_plus)`` pairs.

    ``r`` is the rank of the processed forms. Two distinct extreme rays can
    only be adjacent when they share at least ``r - 2`` tight forms, so pairs
    below that count are skipped before the chosen test runs.
    """
    masks = [tableau.tight_mask(v) for v in all_rays]
    threshold = r - 2
    for vm in neg:
        mm = tableau.tight_mask(vm)
        for vp in pos:
            z = mm & tableau.tight_mask(vp)
            if threshold > 0 and _popcount(z) < threshold:
                continue
            if adjacency == "rank":
                if threshold <= 0:
                    yield vm, vp
                    continue
                common = [tableau.forms[j].coefficients
                          for j in range(len(tableau.forms)) if z >> j & 1]
                if rank(common) >= threshold:
                    yield vm, vp
            else:
                # the pair itself always contains z; a third superset kills adjacency
                hits = 0
                for mk in masks:
                    if z & mk == z:
                        hits += 1
                        if hits > 2:
                            break
                if hits <= 2:
                    yield vm, vp


def mb_step(cone, processed, l, tableau=None, adjacency="combinatorial"):
    """Add ``l(x) <= 0`` to a cone valid for the ``processed`` forms.

    Returns the new ``(ConeDescription, EvalTableau)``. The caller owns the
    processed list and appends ``l`` to it afterwards.
    """
    if adjacency not in ADJACENCY_TESTS:
        raise ValueError(f"unknown adjacency test {adjacency!r}")
    l = as_form(l)
    n = cone.dimension
    if l.dimension != n:
        raise DimensionError(f"form has length {l.dimension}, cone lives in dimension {n}")
    processed = tuple(as_form(f) for f in processed)
    if tableau is None:
        tableau = EvalTableau(processed, cone.rays)
    elif len(tableau.forms) != len(processed):
        raise ValueError("tableau does not match the processed forms")

    if any(evaluate(l, u) for u in cone.lineality):
        u_star, n_ray = transform_lineality(cone.lineality, l)
        rays = transform_rays(cone.rays, n_ray, l)
        new_cone = ConeDescription(n, tuple(u_star), tuple(rays))
        return new_cone, EvalTableau(processed + (l,), rays)

    lvals = {v: evaluate(l, v) for v in cone.rays}
    keep = [v for v in cone.rays if lvals[v] <= 0]
    neg = [v for v in cone.rays if lvals[v] < 0]
    pos = [v for v in cone.rays if lvals[v] > 0]
    new = set(keep)
    made = {}
    if neg and pos:
        # the lineality space is the null space of the processed forms
        r = n - len(cone.lineality)
        for vm, vp in _adjacent_pairs(neg, pos, tableau, cone.rays, adjacency, r):
            w = combine(vm, vp, l, _values=(lvals[vm], lvals[vp]))
            new.add(w)
            made[w] = Fraction(0)
    rays = tuple(sorted(new))
    lvals.update(made)
    new_cone = ConeDescription(n, cone.lineality, rays)
    return new_cone, tableau.extend(l, rays, lvals)

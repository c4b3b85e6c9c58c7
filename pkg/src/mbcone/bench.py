"""Random systems of prescribed rank and the two-path timing harness.

A random ``(n, m, r)`` system is built from ``r`` integer rows with entries
uniform in ``[-c, c]`` (redrawn until they have rank ``r``), followed by
``m - r`` random integer combinations of those rows with coefficients in
``[-c, c]``; the row order is then shuffled. Every step draws from one seeded
numpy generator, so a seed fixes the system exactly.
"""
import multiprocessing
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exact_arith import InequalitySystem, LinearForm, rank
from .solver import conehull
from .verify import cones_equal

DEFAULT_COEFF_BOUND = 9
DEFAULT_TIMEOUT = 300.0

# (n, m, r) rows of the published timing table
TABLE_ROWS = (
    (5, 5, 5), (5, 7, 3), (10, 10, 10), (10, 15, 5), (20, 20, 20), (20, 30, 10),
    (30, 30, 15), (40, 40, 20), (40, 40, 30), (50, 50, 40), (50, 50, 45),
)
DESK_ROWS = TABLE_ROWS[:6]


@dataclass(frozen=True)
class BenchSpec:
    rows: tuple
    coeff_bound: int = DEFAULT_COEFF_BOUND
    seed: int = 0

    def __post_init__(self):
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be at least 1")
        for n, m, r in self.rows:
            if not 1 <= r <= min(n, m):
                raise ValueError(f"need 1 <= r <= min(n, m), got (n, m, r) = {(n, m, r)}")


@dataclass
class BenchRow:
    n: int
    m: int
    r: int
    t1: Optional[float] = None  # as-is path, seconds
    t2: Optional[float] = None  # preprocessed path, seconds
    rays: Optional[int] = None
    status: str = "ok"  # "ok" | "timeout" | "mismatch"


def random_system(n, m, r, c=DEFAULT_COEFF_BOUND, seed=0) -> InequalitySystem:
    if not 1 <= r <= min(n, m):
        raise ValueError(f"need 1 <= r <= min(n, m), got n={n}, m={m}, r={r}")
    if c < 1:
        raise ValueError("coefficient bound must be at least 1")
    rng = np.random.default_rng(seed)
    while True:
        base = rng.integers(-c, c, size=(r, n), endpoint=True)
        if rank(base.tolist()) == r:
            break
    mix = rng.integers(-c, c, size=(m - r, r), endpoint=True)
    rows = np.vstack([base, mix @ base]) if m > r else base
    rows = rows[rng.permutation(m)]
    return InequalitySystem(n, tuple(LinearForm(int(x) for x in row) for row in rows))


def row_seed(seed, index):
    """Seed material for the ``index``-th benchmark row."""
    return [seed, index]


def _time_both(system):
    start = time.perf_counter()
    direct = conehull(system, as_is=True)
    t1 = time.perf_counter() - start
    start = time.perf_counter()
    reduced = conehull(system, as_is=False)
    t2 = time.perf_counter() - start
    return t1, t2, len(reduced.rays), cones_equal(direct, reduced, system)


def run_row(n, m, r, system, timeout=DEFAULT_TIMEOUT) -> BenchRow:
    row = BenchRow(n, m, r)
    if timeout is None:
        result = _time_both(system)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(1) as pool:
            pending = pool.apply_async(_time_both, (system,))
            try:
                result = pending.get(timeout)
            except multiprocessing.TimeoutError:
                pool.terminate()
                row.status = "timeout"
                return row
    row.t1, row.t2, row.rays, equal = result
    if not equal:
        row.status = "mismatch"
    return row


def generate_systems(spec: BenchSpec):
    return [random_system(n, m, r, spec.coeff_bound, row_seed(spec.seed, i))
            for i, (n, m, r) in enumerate(spec.rows)]


def bench(spec: BenchSpec, timeout=DEFAULT_TIMEOUT, on_row=None) -> list:
    """Time both solver paths on one seeded system per ``(n, m, r)`` row.

    Rows run sequentially. A row that exceeds ``timeout`` seconds is marked
    and the run continues.
    """
    report = []
    for (n, m, r), system in zip(spec.rows, generate_systems(spec)):
        row = run_row(n, m, r, system, timeout)
        report.append(row)
        if on_row is not None:
            on_row(row)
    return report


def _fmt_time(t):
    return "-" if t is None else f"{t:.3f}"


def format_table(report) -> str:
    header = ("n", "m", "r", "t1 (as is), s", "t2, s", "|V|", "status")
    body = [(str(x.n), str(x.m), str(x.r), _fmt_time(x.t1), _fmt_time(x.t2),
             "-" if x.rays is None else str(x.rays), x.status) for x in report]
    widths = [max(len(row[i]) for row in (header, *body)) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
             for row in (header, *body)]
    return "\n".join(lines) + "\n"


def format_csv(report) -> str:
    lines = ["n,m,r,t1,t2,rays,status"]
    for x in report:
        cells = [x.n, x.m, x.r, _fmt_time(x.t1), _fmt_time(x.t2),
                 "-" if x.rays is None else x.rays, x.status]
        lines.append(",".join("" if c == "-" else str(c) for c in cells))
    return "\n".join(lines) + "\n"

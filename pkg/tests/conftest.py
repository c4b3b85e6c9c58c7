import numpy as np
import pytest

from mbcone.bench import random_system
from mbcone.exact_arith import InequalitySystem, LinearForm

ACCEPTANCE_LINES = []


def uniform_suite(count=100, seed=20240):
    """Systems with n in 2..5, m in 1..8 and entries uniform in [-3, 3]."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(1, 9))
        rows = rng.integers(-3, 3, size=(m, n), endpoint=True).tolist()
        out.append(InequalitySystem.from_rows(rows))
    return out


def deficient_suite(count=50, seed=20241):
    """Systems of rank strictly below min(n, m)."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(2, 9))
        r = int(rng.integers(1, min(n, m)))
        out.append(random_system(n, m, r, 3, [seed, i]))
    return out


def unused_variable_suite(count=20, seed=20242):
    """Random systems with one or two all-zero columns inserted."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, 5))
        m = int(rng.integers(1, 8))
        rows = rng.integers(-3, 3, size=(m, n), endpoint=True)
        for _ in range(int(rng.integers(1, 3))):
            at = int(rng.integers(0, rows.shape[1] + 1))
            rows = np.insert(rows, at, 0, axis=1)
        out.append(InequalitySystem(rows.shape[1], tuple(LinearForm(int(x) for x in r) for r in rows)))
    return out


@pytest.fixture(scope="session")
def uniform_systems():
    return uniform_suite()


@pytest.fixture(scope="session")
def all_systems():
    return uniform_suite() + deficient_suite() + unused_variable_suite()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

from mbcone.bench import (
    BenchRow,
    BenchSpec,
    bench,
    format_csv,
    format_table,
    random_system,
    run_row,
)
from mbcone.exact_arith import InequalitySystem


@pytest.mark.parametrize("seed", range(10))
def test_random_system_has_requested_rank(seed):
    s = random_system(5, 7, 3, 9, seed)
    assert s.m == 7 and s.dimension == 5 and s.rank() == 3


def test_random_system_is_deterministic():
    assert random_system(6, 8, 4, 9, 123) == random_system(6, 8, 4, 9, 123)
    assert random_system(6, 8, 4, 9, 123) != random_system(6, 8, 4, 9, 124)


def test_random_system_full_rank_square():
    s = random_system(5, 5, 5, 9, 0)
    assert s.rank() == 5
    assert all(abs(x) <= 9 for f in s.forms for x in f)


@pytest.mark.parametrize("args", [(3, 3, 4), (3, 5, 0), (2, 1, 2)])
def test_random_system_rejects_impossible_parameters(args):
    with pytest.raises(ValueError):
        random_system(*args)


def test_bench_spec_validation():
    with pytest.raises(ValueError):
        BenchSpec(((5, 5, 6),))
    with pytest.raises(ValueError):
        BenchSpec(((5, 5, 5),), coeff_bound=0)


def test_empty_bench():
    assert bench(BenchSpec(())) == []


@pytest.mark.parametrize("row", [(5, 5, 5), (5, 7, 3)])
def test_bench_small_rows(row):
    (result,) = bench(BenchSpec((row,), seed=1))
    assert (result.n, result.m, result.r) == row
    assert result.status == "ok"
    assert result.t1 > 0 and result.t2 > 0


def test_timeout_marks_row_and_continues():
    heavy = random_system(30, 30, 15, 9, 0)
    row = run_row(30, 30, 15, heavy, timeout=0.05)
    assert row.status == "timeout" and row.t1 is None


def test_in_process_row():
    row = run_row(2, 1, 1, InequalitySystem.from_rows([(1, 1)]), timeout=None)
    assert row.status == "ok" and row.rays == 1


def test_report_formats():
    report = [BenchRow(5, 5, 5, 0.0123, 0.5, 5), BenchRow(40, 40, 30, status="timeout")]
    table = format_table(report).splitlines()
    assert table[0].split()[:3] == ["n", "m", "r"]
    assert table[1].split() == ["5", "5", "5", "0.012", "0.500", "5", "ok"]
    assert table[2].split() == ["40", "40", "30", "-", "-", "-", "timeout"]
    assert format_csv(report) == "n,m,r,t1,t2,rays,status\n5,5,5,0.012,0.500,5,ok\n40,40,30,,,,timeout\n"

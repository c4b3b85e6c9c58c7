import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbcone.exact_arith import DimensionError, InequalitySystem, null_space, rank
from mbcone.mb_core import ConeDescription
from mbcone.solver import conehull
from mbcone.verify import check_solutions, cones_equal, oracle_enumerate

SQUARE = [(1, 0, -1), (-1, 0, -1), (0, 1, -1), (0, -1, -1)]


def system(rows, n=None):
    return InequalitySystem.from_rows(rows, n)


def test_check_solutions_splits_candidates():
    report = check_solutions(system([(-1, 0), (0, -1)]), [(1, 2), (-1, 3)])
    assert report.valid == [(1, 2)]
    assert report.invalid == [((-1, 3), 0)]
    assert not report.all_valid


def test_check_solutions_origin_is_valid():
    assert check_solutions(system([(1, 2), (-3, 1)]), [(0, 0)]).valid == [(0, 0)]


def test_check_solutions_empty():
    report = check_solutions(system([(1, 2)]), [])
    assert report.valid == [] and report.invalid == []


def test_check_solutions_dimension():
    with pytest.raises(DimensionError):
        check_solutions(system([(1, 2)]), [(1, 2, 3)])


@pytest.mark.parametrize("rows, expected", [
    ([(-1, 0), (0, -1)], ConeDescription(2, (), ((0, 1), (1, 0)))),
    ([(1, 0), (-1, 0)], ConeDescription(2, ((0, 1),), ())),
    (SQUARE, ConeDescription(3, (), ((-1, -1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, 1)))),
])
def test_oracle_fixed_cases(rows, expected):
    assert oracle_enumerate(system(rows)) == expected


def test_oracle_size_guard():
    with pytest.raises(ValueError):
        oracle_enumerate(InequalitySystem(7, ()))
    with pytest.raises(ValueError):
        oracle_enumerate(system([(1, 0)] * 11))
    oracle_enumerate(InequalitySystem(7, ()), max_n=7)


def test_cones_equal_basics():
    s = system([(-1, 0), (0, -1)])
    orthant = ConeDescription(2, (), ((0, 1), (1, 0)))
    halfspace = ConeDescription(2, ((0, 1),), ((-1, 0),))
    assert cones_equal(orthant, orthant, s)
    assert cones_equal(orthant, ConeDescription(2, (), ((0, 3), (2, 0))), s)
    assert not cones_equal(orthant, halfspace, s)


def test_cones_equal_modulo_lineality():
    a = ConeDescription(2, ((1, -1),), ((-1, 0),))
    b = ConeDescription(2, ((1, -1),), ((0, -1),))
    assert cones_equal(a, b)
    assert not cones_equal(a, ConeDescription(2, ((1, -1),), ((1, 0),)))


def test_cones_equal_dimension():
    with pytest.raises(DimensionError):
        cones_equal(ConeDescription(2), ConeDescription(3))


small_systems = st.integers(2, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=6))


@settings(max_examples=100, deadline=None)
@given(small_systems)
def test_oracle_validates_itself(rows):
    s = system(rows)
    cone = oracle_enumerate(s)
    assert check_solutions(s, cone.rays).all_valid
    assert list(cone.lineality) == null_space(s.rows, s.dimension)
    both = list(cone.lineality) + null_space(s.rows, s.dimension)
    assert rank(both) == len(cone.lineality)


@settings(max_examples=100, deadline=None)
@given(small_systems)
def test_conehull_output_checks_out(rows):
    s = system(rows)
    cone = conehull(s)
    assert check_solutions(s, cone.lineality + cone.rays).all_valid
    assert check_solutions(s, [tuple(-x for x in u) for u in cone.lineality]).all_valid


@settings(max_examples=60, deadline=None)
@given(small_systems)
def test_cones_equal_is_reflexive_and_symmetric(rows):
    s = system(rows)
    outputs = [conehull(s, as_is=True), conehull(s), oracle_enumerate(s)]
    for a in outputs:
        assert cones_equal(a, a, s)
        for b in outputs:
            assert cones_equal(a, b, s) == cones_equal(b, a, s)

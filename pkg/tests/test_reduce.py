import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbcone.exact_arith import DimensionError, InequalitySystem, LinearForm, evaluate
from mbcone.mb_core import ConeDescription
from mbcone.reduce import back_substitute, change_of_variables, strip_unused_variables
from mbcone.solver import conehull, solve_direct
from mbcone.verify import cones_equal

from conftest import deficient_suite, uniform_suite, unused_variable_suite


def system(rows, n=None):
    return InequalitySystem.from_rows(rows, n)


def test_strip_drops_absent_variable():
    stripped, bad = strip_unused_variables(system([(-1, 0, 0), (0, -1, 0)]))
    assert bad == [2]
    assert stripped == system([(-1, 0), (0, -1)])


def test_strip_keeps_used_variables():
    s = system([(-1,)])
    assert strip_unused_variables(s) == (s, [])


def test_strip_zero_form():
    stripped, bad = strip_unused_variables(system([(0,)]))
    assert bad == [0]
    assert stripped.dimension == 0
    assert stripped.m == 1


def test_change_of_variables_keeps_non_base_forms():
    reduced, sub = change_of_variables(system([(-1, 0), (0, -1), (1, -1)]))
    assert reduced == system([(1, -1)])
    assert sub.apply((3, 4), ()) == (3, 4)


def test_change_of_variables_full_rank_square():
    reduced, sub = change_of_variables(system([(-1, 0), (0, -1)]))
    assert reduced.m == 0 and reduced.dimension == 2


def test_change_of_variables_single_form():
    reduced, sub = change_of_variables(system([(1, 1)]))
    assert reduced.m == 0 and reduced.dimension == 1
    assert sub.free_indices == (1,)
    assert sub.apply((1,), (0,)) == (-1, 0)
    assert sub.apply((0,), (1,)) == (-1, 1)


def test_change_of_variables_rank_zero():
    with pytest.raises(ValueError):
        change_of_variables(system([(0, 0)]))


def test_back_substitute_identity():
    _, sub = change_of_variables(system([(-1, 0), (0, -1)]))
    cone = back_substitute(ConeDescription(2, (), ((0, 1), (1, 0))), sub, [], 2)
    assert cone == ConeDescription(2, (), ((0, 1), (1, 0)))


def test_back_substitute_free_variable():
    _, sub = change_of_variables(system([(1, 1)]))
    cone = back_substitute(ConeDescription(1, (), ((1,),)), sub, [], 2)
    assert cone.lineality == ((1, -1),)
    assert cone.rays == ((-1, 0),)


def test_back_substitute_unused_variable_becomes_line():
    s = system([(-1, 0, 0), (0, -1, 0)])
    stripped, bad = strip_unused_variables(s)
    _, sub = change_of_variables(stripped)
    cone = back_substitute(ConeDescription(2, (), ((0, 1), (1, 0))), sub, bad, 3)
    assert (0, 0, 1) in cone.lineality
    assert cone.rays == ((0, 1, 0), (1, 0, 0))


def test_back_substitute_dimension_check():
    _, sub = change_of_variables(system([(1, 1)]))
    with pytest.raises(DimensionError):
        back_substitute(ConeDescription(2, (), ()), sub, [], 2)


@pytest.mark.parametrize("s", uniform_suite(40, seed=7) + deficient_suite(30, seed=8)
                         + unused_variable_suite(30, seed=9))
def test_preprocessed_round_trip(s):
    cone = conehull(s)
    for u in cone.lineality:
        assert all(evaluate(f, u) == 0 for f in s.forms)
    for v in cone.rays:
        assert all(evaluate(f, v) <= 0 for f in s.forms)
    assert len(cone.lineality) == s.dimension - s.rank()
    assert cones_equal(cone, solve_direct(s), s)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=1, max_size=8)))
def test_substituted_forms_leave_free_variables(rows):
    s = system(rows)
    stripped, _ = strip_unused_variables(s)
    if stripped.rank() == 0:
        return
    reduced, sub = change_of_variables(stripped)
    assert reduced.m == s.m - sub.r
    assert reduced.dimension == sub.r
    assert all(f.dimension == sub.r for f in reduced.forms)

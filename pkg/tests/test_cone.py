import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from apery import (
    apery_table,
    cone_decomposition,
    cone_hilbert_series,
    hilbert_series,
    is_tangent_cone_cm,
    ladder_profile,
    landings,
    new_semigroup,
    nondecreasing_check,
)
from test_semigroup import semigroups


@pytest.mark.parametrize(
    "values, expected",
    [
        ((), []),
        ((1, 2, 3), []),
        ((5, 5, 6, 7, 7, 7), [(0, 1), (3, 5)]),
        ((4, 4, 4), [(0, 2)]),
        ((1, 2, 2, 3, 3), [(1, 2), (3, 4)]),
    ],
)
def test_landings(values, expected):
    assert landings(values) == expected


def test_example_ladders():
    t = apery_table(new_semigroup([9, 11, 35, 37]))
    # column of residue 2 (11, 11, 20, 29, ...) lands once at the top
    prof = ladder_profile(t, 2)
    assert prof.values[:3] == (11, 11, 20)
    assert prof.p == 0 and prof.d == 1 and prof.torsion == ()
    # residue 1 holds 37, 37, 46, 55, 55, 55, 64, ...
    prof = ladder_profile(t, 1)
    assert prof.landings == ((0, 1), (3, 5))
    assert prof.p == 1 and prof.d == 5 and prof.torsion == ((1, 2),)
    with pytest.raises(IndexError):
        ladder_profile(t, 0)
    with pytest.raises(IndexError):
        ladder_profile(t, 9)


def test_example_decomposition():
    dec = cone_decomposition(new_semigroup([9, 11, 35, 37]))
    assert dec.free_shifts == tuple(range(9))
    assert dec.torsion == ((1, 1), (1, 2), (2, 2), (3, 2), (4, 2))
    assert not dec.is_free and dec.rank == 9


def test_cm_examples():
    assert is_tangent_cone_cm(new_semigroup([2, 3]))
    assert is_tangent_cone_cm(new_semigroup([35, 36, 41, 42]))
    assert not is_tangent_cone_cm(new_semigroup([9, 11, 35, 37]))
    assert nondecreasing_check(new_semigroup([9, 11, 35, 37]))


def test_hilbert_function_can_decrease():
    # a standard example with a drop in the Hilbert function
    s = new_semigroup([13, 19, 24, 44, 49, 54, 55, 59, 60, 66])
    assert not nondecreasing_check(s)
    assert not is_tangent_cone_cm(s)


@settings(max_examples=80, deadline=None)
@given(semigroups())
def test_ladders_rebuild(s):
    t = apery_table(s)
    for i in range(1, s.multiplicity):
        prof = ladder_profile(t, i)
        assert prof.rebuild() == prof.values


@settings(max_examples=40, deadline=None)
@given(semigroups(max_gen=30, max_e=4))
def test_decomposition_matches_oracle(s):
    free, torsion = oracles.decomposition(s.generators)
    dec = cone_decomposition(s)
    assert list(dec.free_shifts) == free
    assert list(dec.torsion) == torsion


@settings(max_examples=80, deadline=None)
@given(semigroups())
def test_series_routes_agree(s):
    dec = cone_decomposition(s)
    assert dec.rank == s.multiplicity
    assert cone_hilbert_series(dec) == hilbert_series(s)


@settings(max_examples=80, deadline=None)
@given(semigroups())
def test_cm_implies_nondecreasing(s):
    if is_tangent_cone_cm(s):
        assert nondecreasing_check(s)


@given(st.lists(st.integers(0, 3), max_size=12))
def test_landing_runs_are_maximal(values):
    runs = landings(values)
    for a, b in runs:
        assert b > a
        assert len(set(values[a : b + 1])) == 1
        assert a == 0 or values[a - 1] != values[a]
        assert b == len(values) - 1 or values[b + 1] != values[b]

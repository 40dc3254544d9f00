import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from chebkit.envelope import (
    as_envelopes,
    check_half_diam,
    diameter,
    envelopes_of_bounds,
    envelopes_of_family,
)
from chebkit.exceptions import (
    DimensionMismatchError,
    EmptyFamilyError,
    InconsistentBoundsError,
)
from chebkit.space import make_discrete, make_interval_grid

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


def families(max_members=6, max_points=10):
    return st.integers(1, max_points).flatmap(
        lambda n: arrays(float, st.tuples(st.integers(1, max_members), st.just(n)), elements=finite)
    )


def test_two_point_family_envelopes():
    env = envelopes_of_family(make_discrete(2), [[2.0, 0.0], [3.0, 1.0]])
    np.testing.assert_array_equal(env.m, [2.0, 0.0])
    np.testing.assert_array_equal(env.M, [3.0, 1.0])
    np.testing.assert_array_equal(env.n, env.m)
    np.testing.assert_array_equal(env.N, env.M)
    assert env.r == 0.5


def test_singleton_family_has_zero_radius():
    env = envelopes_of_family(make_discrete(3), [[1.0, -2.0, 5.0]])
    assert env.r == 0.0


def test_grid_envelopes_look_at_neighbors():
    space = make_interval_grid(5)
    upper = np.array([0.0, 0.0, 1.0, 0.0, 0.0])
    env = envelopes_of_bounds(space, upper, np.zeros(5))
    np.testing.assert_array_equal(env.N, [0.0, 1.0, 1.0, 1.0, 0.0])
    np.testing.assert_array_equal(env.n, np.zeros(5))
    assert env.r == 0.5


def test_interval_bounds_give_half_radius():
    n = 101
    x = np.linspace(0, 1, n)
    upper = ((x < 0.3 - 1e-12) | (x > 0.7 + 1e-12)).astype(float)
    env = envelopes_of_bounds(make_interval_grid(n), upper, np.zeros(n))
    assert env.r == 0.5


def test_inconsistent_bounds_report_index():
    with pytest.raises(InconsistentBoundsError) as info:
        envelopes_of_bounds(make_discrete(3), [1.0, 0.0, 1.0], [0.0, 0.5, 0.0])
    assert info.value.index == 1


def test_family_validation():
    with pytest.raises(EmptyFamilyError):
        envelopes_of_family(make_discrete(2), np.empty((0, 2)))
    with pytest.raises(DimensionMismatchError):
        envelopes_of_family(make_discrete(3), [[1.0, 2.0]])
    with pytest.raises(ValueError):
        envelopes_of_family(make_discrete(1), [[np.nan]])


def test_as_envelopes_passes_envelope_sets_through():
    env = envelopes_of_family(make_discrete(2), [[0.0, 1.0]])
    assert as_envelopes(make_discrete(2), env) is env


def test_diameter():
    assert diameter([[0.0, 0.0], [1.0, -2.0], [0.5, 0.5]]) == 2.5
    assert diameter([[4.0]]) == 0.0


@settings(max_examples=200, deadline=None)
@given(families(), st.booleans())
def test_envelope_chain(F, grid):
    n = F.shape[1]
    space = make_interval_grid(n) if grid and n >= 2 else make_discrete(n)
    env = envelopes_of_family(space, F)
    assert env.chain_holds()
    assert np.all(env.n <= env.m) and np.all(env.m <= env.M) and np.all(env.M <= env.N)
    assert env.r >= 0.0


@settings(max_examples=200, deadline=None)
@given(families())
def test_half_diameter_equals_radius_on_discrete_spaces(F):
    rep = check_half_diam(make_discrete(F.shape[1]), F, tol=1e-12)
    assert rep.equal
    assert abs(rep.half_diam - rep.r) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(families(), st.floats(-10, 10), st.floats(0.1, 10))
def test_radius_is_translation_invariant_and_scales(F, shift, scale):
    space = make_discrete(F.shape[1])
    r = envelopes_of_family(space, F).r
    assert envelopes_of_family(space, F + shift).r == pytest.approx(r, rel=1e-9, abs=1e-9)
    assert envelopes_of_family(space, F * scale).r == pytest.approx(r * scale, rel=1e-9, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(families(max_points=12).filter(lambda F: F.shape[1] >= 2))
def test_half_diameter_is_a_lower_bound_on_grids(F):
    rep = check_half_diam(make_interval_grid(F.shape[1]), F)
    assert rep.half_diam <= rep.r + 1e-9

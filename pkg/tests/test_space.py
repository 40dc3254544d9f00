import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebkit.exceptions import DimensionMismatchError, InvalidDimensionError
from chebkit.generators import random_block_space
from chebkit.space import (
    FiniteSpace,
    boundary_points,
    interval_subset,
    is_clopen,
    make_discrete,
    make_interval_grid,
    space_from_json,
    space_to_json,
    subset_mask,
)


def test_discrete_space_has_singleton_neighborhoods():
    space = make_discrete(4)
    assert space.point_count == 4
    assert space.is_discrete
    assert all(nb == frozenset({t}) or nb == {t} for t, nb in enumerate(space.neighborhoods))


def test_grid_neighborhoods_are_adjacent_points():
    space = make_interval_grid(5)
    assert not space.is_discrete
    assert set(space.neighborhoods[0]) == {0, 1}
    assert set(space.neighborhoods[2]) == {1, 2, 3}
    assert set(space.neighborhoods[4]) == {3, 4}


@pytest.mark.parametrize("n", [0, -3])
def test_discrete_rejects_empty(n):
    with pytest.raises(InvalidDimensionError):
        make_discrete(n)


def test_grid_needs_two_points():
    with pytest.raises(InvalidDimensionError):
        make_interval_grid(1)


def test_neighborhoods_must_be_symmetric_and_self_inclusive():
    with pytest.raises(ValueError):
        FiniteSpace(({0, 1}, {1}))
    with pytest.raises(ValueError):
        FiniteSpace(({1}, {0, 1}))
    with pytest.raises(ValueError):
        FiniteSpace(({0, 5}, {1}))


def test_upper_and_lower_limits_over_neighborhoods():
    space = make_interval_grid(4)
    values = np.array([0.0, 3.0, -1.0, 2.0])
    np.testing.assert_array_equal(space.upper_limit(values), [3.0, 3.0, 3.0, 2.0])
    np.testing.assert_array_equal(space.lower_limit(values), [0.0, -1.0, -1.0, -1.0])


def test_interior_interval_is_closed_but_not_clopen():
    space = make_interval_grid(101)
    D = interval_subset(101, 0.3, 0.7)
    assert np.flatnonzero(D)[[0, -1]].tolist() == [30, 70]
    assert not is_clopen(space, D)
    assert boundary_points(space, D) == [30, 70]


def test_empty_and_full_sets_are_clopen():
    space = make_interval_grid(7)
    assert is_clopen(space, [])
    assert is_clopen(space, np.ones(7, dtype=bool))


def test_every_subset_of_a_discrete_space_is_clopen():
    space = make_discrete(5)
    assert is_clopen(space, [0, 3])
    assert boundary_points(space, [1, 2, 4]) == []


def test_subset_mask_validates():
    np.testing.assert_array_equal(subset_mask(3, [2]), [False, False, True])
    with pytest.raises(DimensionMismatchError):
        subset_mask(3, np.array([True, False]))
    with pytest.raises(DimensionMismatchError):
        subset_mask(3, [3])


@pytest.mark.parametrize(
    "space",
    [make_discrete(3), make_interval_grid(6), FiniteSpace(({0, 1}, {0, 1}, {2}))],
)
def test_json_round_trip(space):
    assert space_from_json(space_to_json(space)) == space


def test_json_neighbor_lists_get_self_loops():
    space = space_from_json({"points": 3, "neighbors": [[1], [0], []]})
    assert space == FiniteSpace(({0, 1}, {0, 1}, {2}))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_clopen_sets_have_clopen_complements(n, seed):
    rng = np.random.default_rng(seed)
    space, blocks = random_block_space(rng, n)
    D = np.zeros(n, dtype=bool)
    for b in blocks:
        if rng.random() < 0.5:
            D[b] = True
    assert is_clopen(space, D)
    assert is_clopen(space, ~D)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_complement_of_non_clopen_is_non_clopen(n, seed):
    rng = np.random.default_rng(seed)
    space = make_interval_grid(n)
    D = rng.random(n) < 0.5
    assert is_clopen(space, D) == is_clopen(space, ~D)

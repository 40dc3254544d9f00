import numpy as np
import pytest

from chebkit.body import Box, HPolytope, Singleton, ZeroSlice, body_from_json, whole_space
from chebkit.exceptions import DimensionMismatchError, EmptyBodyError


@pytest.mark.parametrize(
    "body",
    [
        Box([0.0, -1.0], [1.0, 1.0]),
        whole_space(3),
        Box([-np.inf, 0.0], [1.0, np.inf]),
        HPolytope([[1.0, 1.0], [-1.0, 0.0]], [1.0, 0.0]),
        Singleton([1.5, -2.0]),
        ZeroSlice.from_indices(3, [1]),
        ZeroSlice.from_indices(2, [0], Box([-1.0, -2.0], [1.0, 2.0])),
    ],
)
def test_json_round_trip(body):
    assert body_from_json(body.to_json(), body.dim) == body


def test_box_membership():
    box = Box([0.0, 0.0], [1.0, 2.0])
    assert box.contains([1.0, 2.0]) and not box.contains([1.1, 0.0])
    assert box.is_bounded and not whole_space(2).is_bounded


def test_empty_bodies_are_rejected():
    with pytest.raises(EmptyBodyError):
        Box([1.0], [0.0])
    with pytest.raises(EmptyBodyError):
        HPolytope([[1.0], [-1.0]], [0.0, -1.0])
    with pytest.raises(EmptyBodyError):
        ZeroSlice.from_indices(2, [0], Box([1.0, 0.0], [2.0, 1.0]))


def test_polytope_interior_hint_is_feasible():
    P = HPolytope([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]], [1.0, 1.0, 0.5])
    assert P.contains(P.interior_hint)


def test_zero_slice_membership():
    J = ZeroSlice.from_indices(3, [0, 2])
    assert J.contains([0.0, 7.0, 0.0]) and not J.contains([0.1, 0.0, 0.0])
    box = J.as_box()
    np.testing.assert_array_equal(box.lo, [0.0, -np.inf, 0.0])


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        Box([0.0], [1.0, 2.0])
    with pytest.raises(DimensionMismatchError):
        body_from_json({"kind": "singleton", "point": [1.0]}, 2)
    with pytest.raises(ValueError):
        body_from_json({"kind": "sphere"})

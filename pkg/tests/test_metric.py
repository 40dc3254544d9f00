import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebkit.body import Box
from chebkit.center import OrderInterval, center_full_space
from chebkit.exceptions import DimensionMismatchError, EmptySetError
from chebkit.generators import random_instance
from chebkit.metric import (
    center_lipschitz_batch,
    hausdorff_boxes,
    hausdorff_families,
    tightness_pair,
    verify_center_lipschitz,
    verify_radius_lipschitz,
)
from chebkit.oracle import hausdorff_boxes_bisect
from chebkit.space import make_discrete


def test_hausdorff_families_is_symmetric_and_directed_max():
    A = [[0.0, 0.0]]
    B = [[0.0, 0.0], [3.0, 0.0]]
    assert hausdorff_families(A, B) == 3.0
    assert hausdorff_families(B, A) == 3.0
    assert hausdorff_families(A, A) == 0.0
    with pytest.raises(DimensionMismatchError):
        hausdorff_families(A, [[1.0]])


def test_hausdorff_boxes():
    P = OrderInterval([0.0, 0.0], [1.0, 1.0])
    Q = OrderInterval([0.5, -1.0], [1.0, 3.0])
    assert hausdorff_boxes(P, Q) == 2.0
    with pytest.raises(EmptySetError):
        hausdorff_boxes(P, OrderInterval([1.0, 0.0], [0.0, 0.0]))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_box_hausdorff_matches_bisection(n, seed):
    rng = np.random.default_rng(seed)
    lo1, lo2 = rng.uniform(-2, 0, size=(2, n))
    hi1, hi2 = rng.uniform(0, 2, size=(2, n))
    got = hausdorff_boxes(OrderInterval(lo1, hi1), OrderInterval(lo2, hi2))
    assert got == pytest.approx(hausdorff_boxes_bisect(lo1, hi1, lo2, hi2), abs=1e-9)


def test_tightness_pair_is_exact():
    F, G = tightness_pair()
    rep = verify_center_lipschitz(make_discrete(2), F, G, tol=0.0)
    assert rep.d_families == 1.0
    assert rep.d_centers == 2.0
    assert rep.ratio == 2.0
    assert rep.lipschitz_ok


def test_identical_families_give_zero_ratio():
    F = [[1.0, 2.0]]
    assert verify_center_lipschitz(None, F, F).ratio == 0.0


def test_batch_ratios_bounded_by_two():
    reports, worst = center_lipschitz_batch(200, seed=4)
    assert len(reports) == 201
    assert worst == 2.0
    assert all(r.ratio <= 2.0 + 1e-9 for r in reports)


def test_radius_is_one_lipschitz():
    rng = np.random.default_rng(6)
    for i in range(60):
        V, F1 = random_instance(rng, int(rng.integers(2, 6)), "box" if i % 2 else "polytope")
        F2 = F1 + rng.uniform(-0.5, 0.5, size=F1.shape)
        rep = verify_radius_lipschitz(None, V, F1, F2, rng=rng)
        assert rep.ok
        assert rep.rad_difference <= rep.d_H + 1e-9


def test_center_boxes_of_shifted_family_move_by_the_shift():
    F = np.array([[0.0, 1.0], [2.0, -1.0]])
    c1 = center_full_space(make_discrete(2), F).center_set
    c2 = center_full_space(make_discrete(2), F + 0.25).center_set
    assert hausdorff_boxes(c1, c2) == pytest.approx(0.25)


def test_sample_body_stays_inside():
    from chebkit.metric import sample_body

    rng = np.random.default_rng(0)
    box = Box([0.0, -np.inf], [1.0, 0.0])
    for v in sample_body(box, rng, 20):
        assert box.contains(v)

"""Acceptance checks, each at its stated tolerance and time budget.

Timings follow :mod:`timeit` conventions (garbage collection paused while
timing) and report the median per-call time over several repeats, so a single
scheduler hiccup does not decide the outcome.
"""
import math
import statistics
import time
import timeit
from fractions import Fraction

import numpy as np
import pytest

from chebkit.center import center_full_space, insertion, r_of
from chebkit.counterexamples import interval_counterexample, two_point_counterexample
from chebkit.envelope import check_half_diam, envelopes_of_bounds, envelopes_of_family
from chebkit.generators import random_block_space, random_instance
from chebkit.metric import (
    center_lipschitz_batch,
    tightness_pair,
    verify_center_lipschitz,
    verify_radius_lipschitz,
)
from chebkit.oracle import brute_radius
from chebkit.restricted import (
    characterization_harness,
    delta_center_distance,
    distance_to_center_set,
    equilateral_triangle,
    l1_coverage_certificate,
    l1_four_point_family,
    l1_radius,
    norm_diameter,
    norm_radius,
    verify_radius_identity,
)
from chebkit.space import make_discrete, make_interval_grid

criterion = pytest.mark.criterion


def median_seconds(fn, repeats=15, number=20):
    fn()
    runs = timeit.Timer(fn).repeat(repeat=repeats, number=number)
    return statistics.median(runs) / number


@criterion("two-point zero-slice example: center (5/2, 1/2) outside J, rad_J = 3 = 0.5 + 2.5, < 1 ms")
def test_two_point_zero_slice_example():
    v = two_point_counterexample()
    assert v.r_B == 0.5
    assert v.candidate.tolist() == [2.5, 0.5]
    assert v.candidate_in_J is False
    assert abs(v.rad_J - 3.0) <= 1e-12
    assert abs(v.distance - 2.5) <= 1e-12
    assert v.identity_residual <= 1e-12
    elapsed = median_seconds(two_point_counterexample)
    print(f"two-point example median runtime {elapsed * 1e3:.3f} ms")
    assert elapsed < 1e-3


@criterion("interval zero-set example (n=101, D=[0.3,0.7]): r_B = 1/2, described set in J_D empty, < 10 ms")
def test_interval_zero_set_example():
    v = interval_counterexample(101, 0.3, 0.7)
    assert v.r_B == 0.5
    assert v.description_set_empty_in_J
    assert v.blocking_points == [30, 70] == v.boundary_of_D
    elapsed = median_seconds(lambda: interval_counterexample(101, 0.3, 0.7))
    print(f"interval example median runtime {elapsed * 1e3:.3f} ms")
    assert elapsed < 1e-2


def _exact_center_box(F):
    cols = list(zip(*F))
    M = [max(c) for c in cols]
    m = [min(c) for c in cols]
    r = max(a - b for a, b in zip(M, m)) / 2
    return [a - r for a in M], [b + r for b in m]


def _exact_hausdorff(A, B):
    def d(x, y):
        return max(abs(a - b) for a, b in zip(x, y))

    directed = lambda P, Q: max(min(d(p, q) for q in Q) for p in P)  # noqa: E731
    return max(directed(A, B), directed(B, A))


@criterion("center-map tightness pair: d_H(F,G) = 1, d_H(cent F, cent G) = 2, ratio exactly 2")
def test_center_map_tightness_pair():
    F, G = tightness_pair()
    rep = verify_center_lipschitz(make_discrete(2), F, G, tol=0.0)
    assert rep.d_families == 1.0
    assert rep.d_centers == 2.0
    assert rep.ratio == 2.0
    # independent exact-rational recomputation
    Fq = [[Fraction(int(x)) for x in row] for row in F]
    Gq = [[Fraction(int(x)) for x in row] for row in G]
    (flo, fhi), (glo, ghi) = _exact_center_box(Fq), _exact_center_box(Gq)
    d_cent = max(max(abs(a - b) for a, b in zip(flo, glo)), max(abs(a - b) for a, b in zip(fhi, ghi)))
    assert _exact_hausdorff(Fq, Gq) == 1 and d_cent == 2


@criterion("center-map bound: 500 random pairs (|F| <= 6, n <= 8), ratio <= 2 + 1e-9, < 5 s")
def test_center_map_bound():
    t = time.perf_counter()
    reports, worst = center_lipschitz_batch(500, seed=2024, max_dim=8, max_size=6)
    elapsed = time.perf_counter() - t
    print(f"500 pairs: max ratio {worst!r}, {elapsed:.2f} s")
    assert len(reports) == 501  # the tightness pair is included
    assert all(r.ratio <= 2.0 + 1e-9 for r in reports)
    assert elapsed < 5.0


@criterion("restricted radius identity: 100 instances per n in 2..8 for box and H-polytope V, residual <= 1e-8, oracle within 1e-5, < 30 s")
def test_restricted_radius_identity():
    rng = np.random.default_rng(7)
    t = time.perf_counter()
    worst_identity = worst_oracle = 0.0
    count = 0
    for n in range(2, 9):
        for kind in ("box", "polytope"):
            for _ in range(100):
                V, F = random_instance(rng, n, kind)
                rep = verify_radius_identity(None, V, F)
                gap = abs(rep.rad_V - brute_radius(V, F))
                assert rep.identity_residual <= 1e-8, (n, kind, rep)
                assert gap <= 1e-5, (n, kind, gap)
                worst_identity = max(worst_identity, rep.identity_residual)
                worst_oracle = max(worst_oracle, gap)
                count += 1
    elapsed = time.perf_counter() - t
    print(f"{count} instances: identity residual {worst_identity:.2e}, oracle gap {worst_oracle:.2e}, {elapsed:.2f} s")
    assert elapsed < 30.0


@criterion("half-diameter radius: 200 families with r_F = diam/2 within 1e-12; radius 1-Lipschitz on 200 pairs")
def test_half_diameter_and_radius_lipschitz():
    rng = np.random.default_rng(11)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        F = rng.uniform(-1, 1, size=(int(rng.integers(1, 7)), n))
        rep = check_half_diam(make_discrete(n), F, tol=1e-12)
        assert abs(rep.r - rep.half_diam) <= 1e-12
    for i in range(200):
        n = int(rng.integers(2, 9))
        V, F1 = random_instance(rng, n, "box" if i % 2 else "polytope")
        F2 = rng.uniform(-1, 1, size=(int(rng.integers(1, 7)), n))
        rep = verify_radius_lipschitz(None, V, F1, F2, samples=8, rng=rng)
        assert rep.ok, rep


@criterion("non-sup norms: l2 triangle ratio 2/sqrt(3); l1 four-point rad > 1 with certificate; sup harness 0 violations in 200 trials")
def test_half_diameter_fails_off_sup_norm():
    tri = equilateral_triangle()
    ratio = norm_radius(tri, "l2") / (0.5 * norm_diameter(tri, "l2"))
    assert abs(ratio - 2 / math.sqrt(3)) <= 1e-6 and ratio > 1

    F = l1_four_point_family()
    assert norm_diameter(F, "l1") == 2.0
    rad, center = l1_radius(F)
    assert rad > 1.0
    assert max(np.abs(F - center).sum(axis=1)) <= rad + 1e-9
    cert = l1_coverage_certificate(F, 1.0)
    assert cert.infeasible and cert.lower_bound == 6.0 and cert.capacity == 4.0
    print(f"l1 four-point radius {rad:.12g}; summed constraints {cert.lower_bound} > {cert.capacity}")

    summary = characterization_harness("sup", 6, trials=200, seed=0)
    assert summary.violations == 0
    assert summary.verdict == "consistent with L1-predual"


@criterion("near-center limit: on 50 instances d(V, cent(F, 2^-k)) nondecreasing in k, within 1e-6 of d(V, cent F) at k = 24")
def test_near_center_distance_limit():
    rng = np.random.default_rng(13)
    for i in range(50):
        n = int(rng.integers(2, 9))
        V, F = random_instance(rng, n, "box" if i % 2 else "polytope")
        R, _, _ = distance_to_center_set(None, V, F)
        seq = [delta_center_distance(None, V, F, 2.0**-k) for k in range(25)]
        assert all(a <= b + 1e-12 for a, b in zip(seq, seq[1:]))
        assert all(x <= R + 1e-12 for x in seq)
        assert abs(seq[-1] - R) <= 1e-6


def _random_space(rng, n):
    kind = rng.integers(3)
    if kind == 0:
        return make_discrete(n)
    if kind == 1 and n >= 2:
        return make_interval_grid(n)
    return random_block_space(rng, n)[0]


@criterion("property suites: envelope chain, insertion on 1000 inputs, center-set corners in dims <= 10")
def test_envelope_chain_everywhere():
    rng = np.random.default_rng(17)
    for _ in range(1000):
        n = int(rng.integers(1, 13))
        space = _random_space(rng, n)
        F = rng.uniform(-1, 1, size=(int(rng.integers(1, 7)), n))
        assert envelopes_of_family(space, F).chain_holds()
        upper = rng.uniform(-1, 1, size=n)
        lower = upper - rng.uniform(0, 1, size=n)
        assert envelopes_of_bounds(space, upper, lower).chain_holds()


@criterion("property suites: envelope chain, insertion on 1000 inputs, center-set corners in dims <= 10")
def test_insertion_postconditions():
    rng = np.random.default_rng(19)
    for _ in range(1000):
        n = int(rng.integers(1, 16))
        space, blocks = random_block_space(rng, n)
        D = np.zeros(n, dtype=bool)
        for b in blocks:
            D[b] = rng.random() < 0.5
        f = rng.uniform(-1, 1, size=n)
        g = f - rng.uniform(0, 1, size=n)
        alpha = float(rng.uniform(-1, 1))
        f[D] = np.maximum(f[D], alpha)
        g[D] = np.minimum(g[D], alpha)
        h = insertion(space, g, f, D, alpha)
        assert np.all(g <= h) and np.all(h <= f) and np.all(h[D] == alpha)


@criterion("property suites: envelope chain, insertion on 1000 inputs, center-set corners in dims <= 10")
def test_center_set_corner_enumeration():
    rng = np.random.default_rng(23)
    eps = 1e-6
    for n in range(1, 11):
        for _ in range(5):
            F = rng.uniform(-1, 1, size=(int(rng.integers(1, 7)), n))
            rep = center_full_space(make_discrete(n), F)
            box, r = rep.center_set, rep.radius
            corners = np.array(list(box.corners()))
            assert len(corners) == 2**n
            # every corner of the box is a center ...
            assert np.all(np.abs(corners[:, None, :] - F[None]).max(axis=(1, 2)) <= r + 1e-12)
            # ... and pushing any corner out through any face loses optimality
            for j in range(n):
                out = corners.copy()
                out[:, j] = np.where(out[:, j] == box.hi[j], box.hi[j] + eps, box.lo[j] - eps)
                assert np.all(np.abs(out[:, None, :] - F[None]).max(axis=(1, 2)) > r + eps / 2)
            # random points: membership in the box matches being a center
            pts = rng.uniform(box.lo - 0.2, box.hi + 0.2, size=(200, n))
            inside = np.all((pts >= box.lo - 1e-12) & (pts <= box.hi + 1e-12), axis=1)
            centers = np.array([r_of(p, F) <= r + 1e-12 for p in pts])
            assert np.array_equal(inside, centers)

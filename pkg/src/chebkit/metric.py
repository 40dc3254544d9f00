"""Hausdorff distances between finite families and between center boxes.

Used to check that the radius map is 1-Lipschitz and the center map is
2-Lipschitz in the Hausdorff metric, with ``F = {(-1, 0), (1, 0)}``,
``G = {(0, 1)}`` attaining the constant 2.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import check_family
from .body import Box, HPolytope, Singleton, ZeroSlice
from .center import center_full_space, r_of
from .envelope import DEFAULT_TOL
from .exceptions import DimensionMismatchError, EmptySetError
from .restricted import restricted_radius
from .space import make_discrete


def hausdorff_families(A, B):
    """Sup-norm Hausdorff distance between two finite families."""
    A = check_family(A)
    B = check_family(B)
    if A.shape[1] != B.shape[1]:
        raise DimensionMismatchError(f"families live in R^{A.shape[1]} and R^{B.shape[1]}")
    pair = np.abs(A[:, None, :] - B[None, :, :]).max(axis=2)
    return float(max(pair.min(axis=1).max(), pair.min(axis=0).max()))


def hausdorff_boxes(P, Q):
    """Sup-norm Hausdorff distance between nonempty order intervals.

    Equals ``max_j max(|lo_P - lo_Q|, |hi_P - hi_Q|)``.
    """
    if P.is_empty or Q.is_empty:
        raise EmptySetError("Hausdorff distance needs nonempty intervals")
    if len(P) != len(Q):
        raise DimensionMismatchError("intervals differ in dimension")
    return float(max(np.max(np.abs(P.lo - Q.lo)), np.max(np.abs(P.hi - Q.hi))))


@dataclass(frozen=True)
class HausdorffReport:
    d_families: float
    d_centers: float
    ratio: float
    lipschitz_ok: bool

    def to_dict(self):
        return {
            "d_families": self.d_families,
            "d_centers": self.d_centers,
            "ratio": self.ratio,
            "lipschitz_ok": self.lipschitz_ok,
        }


def verify_center_lipschitz(space, F1, F2, tol=DEFAULT_TOL):
    F1 = check_family(F1)
    F2 = check_family(F2)
    if space is None:
        space = make_discrete(F1.shape[1])
    c1 = center_full_space(space, F1).center_set
    c2 = center_full_space(space, F2).center_set
    d_fam = hausdorff_families(F1, F2)
    d_cen = hausdorff_boxes(c1, c2)
    ratio = d_cen / d_fam if d_fam > 0 else 0.0
    return HausdorffReport(d_fam, d_cen, ratio, bool(d_cen <= 2.0 * d_fam + tol))


def tightness_pair():
    return np.array([[-1.0, 0.0], [1.0, 0.0]]), np.array([[0.0, 1.0]])


@dataclass(frozen=True)
class RadiusLipschitzReport:
    d_H: float
    rad_difference: float
    pointwise_max_difference: float
    ok: bool


def _hit_and_run(P, rng, count, reach=2.0):
    """Hit-and-run walk in the polytope, started from its LP feasible point.

    Each step moves to a uniform point of the chord through the current point
    in a random direction; unbounded chords are cut at ``reach``.
    """
    v = P.interior_hint.copy()
    out = []
    for _ in range(count):
        d = rng.normal(size=P.dim)
        d /= np.linalg.norm(d)
        Ad = P.A @ d
        slack = np.maximum(P.b - P.A @ v, 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            steps = slack / Ad
        t_hi = min(reach, float(np.min(steps[Ad > 1e-12], initial=np.inf)))
        t_lo = max(-reach, float(np.max(steps[Ad < -1e-12], initial=-np.inf)))
        if t_hi > t_lo:
            v = v + rng.uniform(t_lo, t_hi) * d
        out.append(v.copy())
    return np.array(out)


def sample_body(V, rng, count):
    """Random points of ``V``: uniform on bounded boxes, a hit-and-run walk in polytopes."""
    if isinstance(V, Singleton):
        return np.repeat(V.point[None, :], count, axis=0)
    if isinstance(V, (Box, ZeroSlice)):
        box = V if isinstance(V, Box) else V.as_box()
        lo = np.where(np.isfinite(box.lo), box.lo, np.minimum(box.hi, 0.0) - 2.0)
        hi = np.where(np.isfinite(box.hi), box.hi, np.maximum(box.lo, 0.0) + 2.0)
        return rng.uniform(lo, hi, size=(count, box.dim))
    if isinstance(V, HPolytope):
        return _hit_and_run(V, rng, count)
    raise TypeError(f"unsupported body {type(V).__name__}")


def verify_radius_lipschitz(space, V, B1, B2, samples=16, rng=None, tol=DEFAULT_TOL):
    """Check ``|rad_V(B1) - rad_V(B2)| <= d_H(B1, B2)`` and its pointwise form at sampled ``v``."""
    rng = rng if rng is not None else np.random.default_rng(0)
    d_h = hausdorff_families(B1, B2)
    rad1, _ = restricted_radius(space, V, B1)
    rad2, _ = restricted_radius(space, V, B2)
    worst = 0.0
    for v in sample_body(V, rng, samples):
        worst = max(worst, abs(r_of(v, B1) - r_of(v, B2)))
    diff = abs(rad1 - rad2)
    ok = diff <= d_h + tol and worst <= d_h + tol
    return RadiusLipschitzReport(d_h, diff, worst, bool(ok))


def center_lipschitz_batch(trials, seed=0, max_dim=8, max_size=6, tol=DEFAULT_TOL, min_dim=1):
    """Random family pairs plus the tightness pair; returns ``(reports, max_ratio)``."""
    rng = np.random.default_rng(seed)
    F, G = tightness_pair()
    reports = [verify_center_lipschitz(None, F, G, tol)]
    for _ in range(trials):
        n = int(rng.integers(min_dim, max_dim + 1))
        F1 = rng.uniform(-1.0, 1.0, size=(int(rng.integers(1, max_size + 1)), n))
        if rng.random() < 0.5:
            F2 = F1 + rng.uniform(-0.3, 0.3, size=F1.shape)
        else:
            F2 = rng.uniform(-1.0, 1.0, size=(int(rng.integers(1, max_size + 1)), n))
        reports.append(verify_center_lipschitz(None, F1, F2, tol))
    return reports, max(r.ratio for r in reports)


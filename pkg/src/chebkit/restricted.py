"""Restricted Chebyshev radii and centers over convex bodies in ``l_inf^n``.

All radii, distances and centers here come from small LPs (see :mod:`chebkit.lp`).
For box-like bodies the radius is also computed in closed form, because the
sup-norm min-max problem decouples coordinatewise over a box, and the two
answers must agree.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_family
from .body import Box, ZeroSlice
from .center import center_full_space, r_of
from .envelope import DEFAULT_TOL, diameter
from .exceptions import DimensionMismatchError, EmptyBodyError, SolverError
from .lp import INFEASIBLE, LinearProgram, solve
from .oracle import OracleConfig, smallest_ball_l2
from .space import make_discrete

IDENTITY_TOL = 1e-8


def _setup(space, V, F):
    F = check_family(F)
    n = F.shape[1]
    if space is None:
        space = make_discrete(n)
    if space.point_count != n:
        raise DimensionMismatchError(f"family has {n} values, space has {space.point_count} points")
    if V is not None:
        V._check_dim(n)
    return space, F, n


def _minimize_last(n_free):
    """Objective picking out the last of ``n_free + 1`` variables."""
    c = np.zeros(n_free + 1)
    c[-1] = 1.0
    return c


def _solve_or_raise(lp):
    sol = solve(lp)
    if sol.status == INFEASIBLE:
        raise EmptyBodyError("constraint body is empty")
    if not sol.optimal:
        raise SolverError(f"LP solver returned status {sol.status!r}")
    return sol


def _box_radius(lo, hi, M, m):
    v = np.clip(0.5 * (M + m), lo, hi)
    return float(np.max(np.maximum(M - v, v - m))), v


def restricted_radius(space, V, F, tol=DEFAULT_TOL):
    """``rad_V(F) = min_{v in V} max_{f in F} ||v - f||`` and a minimizer ``v``.

    Solved as ``min t`` subject to ``-t <= v_j - f_j <= t``; only the
    coordinatewise extremes of ``F`` can bind, so those are the rows used.
    """
    space, F, n = _setup(space, V, F)
    M, m = F.max(axis=0), F.min(axis=0)
    lp = LinearProgram(_minimize_last(n))
    for j in range(n):
        row = np.zeros(n + 1)
        row[j], row[n] = 1.0, -1.0
        lp.add(row, "<=", m[j])
        row = np.zeros(n + 1)
        row[j], row[n] = -1.0, -1.0
        lp.add(row, "<=", -M[j])
    V.add_to(lp)
    sol = _solve_or_raise(lp)
    rad, v = sol.objective_value, sol.z[:n]

    if isinstance(V, (Box, ZeroSlice)):
        box = V if isinstance(V, Box) else V.as_box()
        closed, _ = _box_radius(box.lo, box.hi, M, m)
        scale = max(1.0, abs(closed))
        if abs(closed - rad) > 1e3 * tol * scale:
            raise SolverError(f"LP radius {rad} disagrees with box closed form {closed}")
    return rad, v


def _distance_to_box(V, lo, hi):
    n = lo.size
    # variables: v (n), c (n), t
    lp = LinearProgram(_minimize_last(2 * n))
    lp.lower[n : 2 * n] = lo
    lp.upper[n : 2 * n] = hi
    for j in range(n):
        row = np.zeros(2 * n + 1)
        row[j], row[n + j], row[2 * n] = 1.0, -1.0, -1.0
        lp.add(row, "<=", 0.0)
        row = np.zeros(2 * n + 1)
        row[j], row[n + j], row[2 * n] = -1.0, 1.0, -1.0
        lp.add(row, "<=", 0.0)
    V.add_to(lp)
    sol = _solve_or_raise(lp)
    return max(sol.objective_value, 0.0), sol.z[:n], sol.z[n : 2 * n]


def distance_to_center_set(space, V, F):
    """``d(V, cent_X(F))`` with an attaining pair ``(v0, c0)``."""
    space, F, n = _setup(space, V, F)
    box = center_full_space(space, F).center_set
    return _distance_to_box(V, box.lo, box.hi)


def delta_center_distance(space, V, F, delta):
    """Distance from ``V`` to the near-centers ``{x : r(x, F) <= rad_X(F) + delta}``."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    space, F, n = _setup(space, V, F)
    box = center_full_space(space, F).center_set
    R, _, _ = _distance_to_box(V, box.lo - delta, box.hi + delta)
    return R


@dataclass(frozen=True, eq=False)
class RestrictedReport:
    rad_V: float
    v_star: np.ndarray
    R: float
    c_star: np.ndarray
    r_F: float
    identity_residual: float
    attainment_residual: float
    sandwich_ok: bool
    ok: bool

    def to_dict(self):
        return {
            "rad_V": self.rad_V,
            "v_star": self.v_star.tolist(),
            "R": self.R,
            "c_star": self.c_star.tolist(),
            "r_F": self.r_F,
            "identity_residual": self.identity_residual,
            "attainment_residual": self.attainment_residual,
            "sandwich_ok": self.sandwich_ok,
            "ok": self.ok,
        }


def verify_radius_identity(space, V, F, tol=IDENTITY_TOL):
    """Check ``rad_V(F) = rad_X(F) + d(V, cent_X(F))`` and that the nearest pair attains it.

    ``attainment_residual`` is ``|r(v0, F) - rad_V(F)|`` for the point ``v0``
    of ``V`` nearest to the center set.
    """
    space, F, n = _setup(space, V, F)
    if not space.is_discrete:
        raise ValueError("the radius identity is verified on discrete spaces only")
    rad_v, v_star = restricted_radius(space, V, F)
    r_f = center_full_space(space, F).radius
    R, v0, c0 = distance_to_center_set(space, V, F)
    residual = abs(rad_v - (r_f + R))
    attain = abs(r_of(v0, F) - rad_v)
    sandwich = r_f <= rad_v + tol and rad_v <= r_f + R + tol
    ok = residual <= tol and attain <= tol and sandwich and V.contains(v_star, tol=1e-9)
    return RestrictedReport(
        rad_V=rad_v,
        v_star=v_star,
        R=R,
        c_star=c0,
        r_F=r_f,
        identity_residual=residual,
        attainment_residual=attain,
        sandwich_ok=bool(sandwich),
        ok=bool(ok),
    )


def norm_distance(x, y, norm="sup"):
    d = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    if norm == "sup":
        return float(np.max(np.abs(d)))
    if norm == "l1":
        return float(np.sum(np.abs(d)))
    if norm == "l2":
        return float(np.sqrt(np.sum(d * d)))
    raise ValueError(f"unknown norm {norm!r}")


def norm_diameter(F, norm="sup"):
    F = check_family(F)
    if norm == "sup":
        return diameter(F)
    return max(
        (norm_distance(F[i], F[k], norm) for i in range(len(F)) for k in range(i + 1, len(F))),
        default=0.0,
    )


def l1_radius(F):
    """Chebyshev radius and a center under the l1 norm, via an LP with ``|x_j - f_j| <= u_fj``."""
    F = check_family(F)
    k, n = F.shape
    nv = n + k * n + 1
    lp = LinearProgram(_minimize_last(n + k * n))
    lp.lower[n : n + k * n] = 0.0
    for i in range(k):
        row = np.zeros(nv)
        row[n + i * n : n + (i + 1) * n] = 1.0
        row[-1] = -1.0
        lp.add(row, "<=", 0.0)
        for j in range(n):
            u = n + i * n + j
            row = np.zeros(nv)
            row[j], row[u] = 1.0, -1.0
            lp.add(row, "<=", F[i, j])
            row = np.zeros(nv)
            row[j], row[u] = -1.0, -1.0
            lp.add(row, "<=", -F[i, j])
    sol = _solve_or_raise(lp)
    return sol.objective_value, sol.z[:n]


@dataclass(frozen=True)
class CoverageCertificate:
    """Summed l1 ball constraints: ``sum_f ||x - f||_1 >= lower_bound`` for every ``x``."""

    radius: float
    lower_bound: float
    capacity: float
    infeasible: bool


def l1_coverage_certificate(F, radius):
    """Certify that no l1 ball of ``radius`` covers ``F`` by summing its ball constraints.

    Summing ``||x - f||_1 <= radius`` over ``f`` gives
    ``sum_j sum_f |x_j - f_j| <= |F| radius``; the left side is at least
    ``sum_j min_y sum_f |y - f_j|``, attained at a coordinate median.
    """
    F = check_family(F)
    lower = 0.0
    for j in range(F.shape[1]):
        med = float(np.median(F[:, j]))
        lower += float(np.sum(np.abs(F[:, j] - med)))
    capacity = len(F) * float(radius)
    return CoverageCertificate(float(radius), lower, capacity, lower > capacity)


def norm_radius(F, norm="sup", cfg=None):
    F = check_family(F)
    if norm == "sup":
        return center_full_space(make_discrete(F.shape[1]), F).radius
    if norm == "l1":
        return l1_radius(F)[0]
    if norm == "l2":
        return smallest_ball_l2(F, cfg or OracleConfig(norm="l2"))
    raise ValueError(f"unknown norm {norm!r}")


@dataclass(frozen=True)
class PropagationReport:
    order: list
    radii: list
    half_diam: float
    holds: bool
    first_failure: int = None


def radius_propagation(space, F, norm="sup", tol=DEFAULT_TOL):
    """Radii of the prefixes ``{x_1..x_k}``, ``k = 2..|F|``, after putting a diameter pair first.

    In a sup-norm space every prefix radius equals ``diam(F) / 2``; a prefix
    where the radius grows marks the point where the propagation breaks.
    """
    F = check_family(F)
    if space is not None and norm == "sup" and not space.is_discrete:
        raise ValueError("radius propagation runs on discrete spaces")
    k = len(F)
    if k == 1:
        return PropagationReport([0], [0.0], 0.0, True)
    best, pair = -1.0, (0, 1)
    for i in range(k):
        for j in range(i + 1, k):
            d = norm_distance(F[i], F[j], norm)
            if d > best:
                best, pair = d, (i, j)
    order = list(pair) + [i for i in range(k) if i not in pair]
    half = 0.5 * best
    radii = [norm_radius(F[order[:p]], norm) for p in range(2, k + 1)]
    failure = next(
        (p + 2 for p, r in enumerate(radii) if abs(r - half) > tol * max(1.0, half)), None
    )
    report = PropagationReport(order, radii, half, failure is None, failure)
    if norm == "sup" and not report.holds:
        raise AssertionError(f"sup-norm radius propagation failed at prefix {failure}")
    return report


def equilateral_triangle(dim=2, side=1.0):
    F = np.zeros((3, dim))
    F[1, 0] = side
    F[2, 0] = 0.5 * side
    F[2, 1] = side * math.sqrt(3.0) / 2.0
    return F


def l1_four_point_family(dim=3):
    F = np.zeros((4, dim))
    F[:3, :3] = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    return F


@dataclass
class CharacterizationSummary:
    norm: str
    dim: int
    trials: int
    seed: int
    violations: int = 0
    max_ratio: float = 0.0
    violating_family: list = None
    certificate: dict = None
    verdict: str = ""
    ratios: list = field(default_factory=list, repr=False)

    def to_dict(self):
        return {
            "norm": self.norm,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "violations": self.violations,
            "max_ratio": self.max_ratio,
            "violating_family": self.violating_family,
            "certificate": self.certificate,
            "verdict": self.verdict,
        }


def characterization_harness(norm, dim, trials, seed=0, tol=DEFAULT_TOL, max_size=6):
    """Test ``rad(F) = diam(F) / 2`` on random finite families in ``(R^dim, norm)``.

    Sup-norm spaces satisfy the identity for every finite family.  For l2
    (dim >= 2) and l1 (dim >= 3) a known violating family is tried first, then
    random ones.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if norm not in ("sup", "l1", "l2"):
        raise ValueError(f"unknown norm {norm!r}")
    rng = np.random.default_rng(seed)
    summary = CharacterizationSummary(norm, dim, trials, seed)

    families = []
    if norm == "l2" and dim >= 2:
        families.append(equilateral_triangle(dim))
    if norm == "l1" and dim >= 3:
        families.append(l1_four_point_family(dim))
    for _ in range(trials):
        size = int(rng.integers(2, max_size + 1))
        families.append(rng.uniform(-1.0, 1.0, size=(size, dim)))

    for F in families:
        half = 0.5 * norm_diameter(F, norm)
        rad = norm_radius(F, norm)
        ratio = rad / half if half > 0 else 1.0
        summary.ratios.append(ratio)
        summary.max_ratio = max(summary.max_ratio, ratio)
        if rad > half + tol * max(1.0, half):
            summary.violations += 1
            if summary.violating_family is None:
                summary.violating_family = F.tolist()
                if norm == "l1":
                    cert = l1_coverage_certificate(F, half)
                    summary.certificate = {
                        "radius": cert.radius,
                        "summed_lower_bound": cert.lower_bound,
                        "capacity": cert.capacity,
                        "infeasible": cert.infeasible,
                    }

    if summary.violations:
        summary.verdict = "violation exhibited: not an L1-predual"
    elif norm == "sup":
        summary.verdict = "consistent with L1-predual"
    else:
        summary.verdict = "no counterexample found"
    return summary

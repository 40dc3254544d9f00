"""Chebyshev center sets as order intervals.

Under the sup norm the set of Chebyshev centers of a family is an order
interval ``{x : lo <= x <= hi}``.  On a discrete space the interval is
``[M - r, m + r]``; inside the subspace ``J_D = {h : h = 0 on D}`` for a
clopen ``D`` it is ``[N - r, n + r]`` intersected with ``J_D``.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from ._validation import check_family, check_vector
from .envelope import DEFAULT_TOL, as_envelopes
from .exceptions import (
    ClopenRequiredError,
    DimensionMismatchError,
    InsertionInfeasibleError,
    NotDiscreteError,
    NotInSubspaceError,
)
from .space import boundary_points, is_clopen, subset_mask


@dataclass(frozen=True, eq=False)
class OrderInterval:
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float).ravel()
        hi = np.asarray(self.hi, dtype=float).ravel()
        if lo.shape != hi.shape:
            raise DimensionMismatchError("interval bounds differ in length")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __len__(self):
        return self.lo.size

    def __eq__(self, other):
        return (
            isinstance(other, OrderInterval)
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )

    @property
    def is_empty(self):
        return bool(np.any(self.lo > self.hi))

    def contains(self, x, tol=0.0):
        x = np.asarray(x, dtype=float)
        return bool(np.all(self.lo - tol <= x) and np.all(x <= self.hi + tol))

    def midpoint(self):
        return 0.5 * (self.lo + self.hi)

    def clamp(self, x):
        return np.minimum(np.maximum(x, self.lo), self.hi)

    def corners(self):
        """All ``2^n`` corners as an array of shape ``(2^n, n)``; collapsed coordinates repeat."""
        bits = np.array(list(itertools.product((0, 1), repeat=len(self))), dtype=bool)
        return np.where(bits, self.hi, self.lo)

    def shift(self, c):
        return OrderInterval(self.lo + c, self.hi + c)

    def scale(self, lam):
        if lam >= 0:
            return OrderInterval(lam * self.lo, lam * self.hi)
        return OrderInterval(lam * self.hi, lam * self.lo)


@dataclass(frozen=True, eq=False)
class CenterReport:
    radius: float
    center_set: OrderInterval
    witness: np.ndarray = None
    nonempty: bool = True
    zero_set: np.ndarray = None

    def to_dict(self):
        out = {
            "radius": self.radius,
            "lo": self.center_set.lo.tolist(),
            "hi": self.center_set.hi.tolist(),
            "witness": None if self.witness is None else self.witness.tolist(),
            "nonempty": self.nonempty,
        }
        if self.zero_set is not None:
            out["zero_set"] = np.flatnonzero(self.zero_set).tolist()
        return out


def _center_box(lo, hi):
    """Order interval from bounds that satisfy ``lo <= hi`` in exact arithmetic.

    Where the diameter is attained the two bounds coincide mathematically and
    can cross by an ulp after rounding; those coordinates snap to the midpoint.
    """
    crossed = lo > hi
    if crossed.any():
        mid = 0.5 * (lo + hi)
        lo = np.where(crossed, mid, lo)
        hi = np.where(crossed, mid, hi)
    return OrderInterval(lo, hi)


def r_of(x, B):
    """Farthest sup-norm distance from ``x`` to a member of ``B``."""
    B = check_family(B)
    x = check_vector(x, B.shape[1], "point")
    return float(np.max(np.abs(B - x)))


def center_full_space(space, B):
    """Radius and center set of ``B`` in the whole space ``C(K)`` for discrete ``K``.

    The radius is ``r_B`` and the centers form ``[M - r_B, m + r_B]``; the
    witness is the midpoint ``(M + m) / 2`` clamped into that box.
    """
    if not space.is_discrete:
        raise NotDiscreteError(
            "full-space center sets are only described on discrete spaces; "
            "use center_msummand with an empty zero set"
        )
    env = as_envelopes(space, B)
    box = _center_box(env.M - env.r, env.m + env.r)
    witness = box.clamp(0.5 * (env.M + env.m))
    return CenterReport(radius=env.r, center_set=box, witness=witness, nonempty=True)


def center_msummand(space, D, B, tol=DEFAULT_TOL):
    """Centers of ``B`` inside ``J_D = {h : h = 0 on D}`` for clopen ``D``.

    Refuses non-clopen ``D``: there the order-interval description can fail.
    """
    mask = subset_mask(space.point_count, D)
    if not is_clopen(space, mask):
        raise ClopenRequiredError(
            f"zero set is not clopen (boundary points {boundary_points(space, mask)}); "
            "use the restricted-center machinery instead"
        )
    env = as_envelopes(space, B)
    nonzero = np.flatnonzero(mask & (np.maximum(np.abs(env.M), np.abs(env.m)) > tol))
    if nonzero.size:
        raise NotInSubspaceError(
            f"family does not vanish on the zero set (point {int(nonzero[0])})"
        )
    lo, hi = env.N - env.r, env.n + env.r
    lo[mask] = 0.0
    hi[mask] = 0.0
    box = _center_box(lo, hi)
    witness = insertion(space, box.lo, box.hi, mask, 0.0, tol=tol)
    return CenterReport(
        radius=env.r, center_set=box, witness=witness, nonempty=True, zero_set=mask
    )


def insertion(space, g, f, D, alpha, tol=DEFAULT_TOL):
    """A function ``h`` with ``g <= h <= f`` everywhere and ``h = alpha`` on clopen ``D``.

    Uses the closed form ``h = min(f, max(g, alpha))``, which is continuous on
    any finite model.
    """
    n = space.point_count
    g = check_vector(g, n, "lower function")
    f = check_vector(f, n, "upper function")
    mask = subset_mask(n, D)
    bad = np.flatnonzero(g > f + tol)
    if bad.size:
        t = int(bad[0])
        raise InsertionInfeasibleError(f"g({t}) = {g[t]} exceeds f({t}) = {f[t]}", index=t)
    on_d = np.flatnonzero(mask & ((g > alpha + tol) | (f < alpha - tol)))
    if on_d.size:
        t = int(on_d[0])
        raise InsertionInfeasibleError(
            f"alpha = {alpha} not within [g, f] = [{g[t]}, {f[t]}] at point {t}", index=t
        )
    boundary = boundary_points(space, mask)
    if boundary:
        raise InsertionInfeasibleError(
            f"set D is not clopen; point {boundary[0]} has a neighbor outside D",
            index=boundary[0],
        )
    h = np.minimum(f, np.maximum(g, alpha))
    h[mask] = alpha
    assert np.all(g <= h + tol) and np.all(h <= f + tol)
    return h


def is_center(x, B, radius, tol=DEFAULT_TOL):
    return r_of(x, B) <= radius + tol

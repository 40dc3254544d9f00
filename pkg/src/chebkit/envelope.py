"""Envelope functions of a bounded function family and the radius they induce.

For a family ``B`` of functions on a finite space:

* ``m`` / ``M`` are the pointwise min / max over the members,
* ``n`` / ``N`` are the lower / upper limits of ``m`` / ``M`` (min / max over
  each neighborhood),
* ``r = max_t (N(t) - n(t)) / 2``.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import check_family, check_vector
from .exceptions import DimensionMismatchError, InconsistentBoundsError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class EnvelopeSet:
    m: np.ndarray
    M: np.ndarray
    n: np.ndarray
    N: np.ndarray
    r: float

    def __len__(self):
        return len(self.m)

    def chain_holds(self, tol=0.0):
        """Pointwise ``n <= m <= M <= N``."""
        return bool(
            np.all(self.n <= self.m + tol)
            and np.all(self.m <= self.M + tol)
            and np.all(self.M <= self.N + tol)
        )


def _from_bounds(space, M, m):
    n_env = space.lower_limit(m)
    N_env = space.upper_limit(M)
    r = 0.5 * float(np.max(N_env - n_env))
    return EnvelopeSet(m=m, M=M, n=n_env, N=N_env, r=max(r, 0.0))


def envelopes_of_family(space, B):
    """Envelopes of a finite family given as rows of ``B``."""
    B = check_family(B, space.point_count)
    return _from_bounds(space, B.max(axis=0), B.min(axis=0))


def envelopes_of_bounds(space, M, m):
    """Envelopes of a (possibly infinite) family known only through its pointwise sup ``M`` and inf ``m``."""
    M = check_vector(M, space.point_count, "upper bound")
    m = check_vector(m, space.point_count, "lower bound")
    bad = np.flatnonzero(m > M)
    if bad.size:
        t = int(bad[0])
        raise InconsistentBoundsError(
            f"lower bound {m[t]} exceeds upper bound {M[t]} at point {t}", index=t
        )
    return _from_bounds(space, M, m)


def as_envelopes(space, B):
    """Accept either an :class:`EnvelopeSet` or a family array."""
    if isinstance(B, EnvelopeSet):
        if len(B) != space.point_count:
            raise DimensionMismatchError(
                f"envelopes have {len(B)} points, space has {space.point_count}"
            )
        return B
    return envelopes_of_family(space, B)


def diameter(B):
    """Largest sup-norm distance between two members of ``B``."""
    B = check_family(B)
    diffs = np.abs(B[:, np.newaxis, :] - B[np.newaxis, :, :])
    return float(diffs.max())


@dataclass(frozen=True)
class HalfDiameterReport:
    half_diam: float
    r: float
    equal: bool


def check_half_diam(space, F, tol=DEFAULT_TOL):
    """Compare ``diam(F) / 2`` with ``r_F``.

    ``diam(F) / 2 <= r_F`` always holds; on discrete spaces the two agree for
    every finite family.
    """
    env = envelopes_of_family(space, F)
    half = 0.5 * diameter(F)
    if half > env.r + tol:
        raise AssertionError(f"half diameter {half} exceeds r_F = {env.r}")
    equal = abs(half - env.r) <= tol
    if space.is_discrete and not equal:
        raise AssertionError(f"half diameter {half} != r_F = {env.r} on a discrete space")
    return HalfDiameterReport(half_diam=half, r=env.r, equal=equal)

"""Two families for which the order-interval description of centers in ``J_D`` fails.

* :func:`two_point_counterexample` — ``K = {0, 1}``, ``J = {h : h(0) = 0}`` and a
  family outside ``J``: the only function sandwiched by the envelopes is
  ``(5/2, 1/2)``, which is not in ``J``.  The restricted radius is still
  ``r_B + d(J, cent(B)) = 1/2 + 5/2 = 3``.
* :func:`interval_counterexample` — ``K = [0, 1]`` on a grid, ``D = [a, b]``
  (closed but not clopen) and the family of all ``0 <= f <= 1`` vanishing on
  ``D``: the sandwich forces ``h = 1/2`` at the ends of ``D``.
"""
from dataclasses import dataclass

import numpy as np

from .body import ZeroSlice
from .center import center_full_space
from .envelope import DEFAULT_TOL, envelopes_of_bounds, envelopes_of_family
from .exceptions import ResolutionError
from .restricted import distance_to_center_set, restricted_radius
from .space import boundary_points, interval_subset, make_discrete, make_interval_grid


@dataclass(frozen=True, eq=False)
class TwoPointVerdict:
    r_B: float
    candidate: np.ndarray
    candidate_in_J: bool
    rad_J: float
    distance: float
    identity_residual: float
    identity_holds: bool

    def to_dict(self):
        return {
            "r_B": self.r_B,
            "candidate": self.candidate.tolist(),
            "candidate_in_J": self.candidate_in_J,
            "rad_J": self.rad_J,
            "distance": self.distance,
            "identity_residual": self.identity_residual,
            "identity_holds": self.identity_holds,
        }


def two_point_counterexample(tol=1e-12):
    space = make_discrete(2)
    B = np.array([[2.0, 0.0], [3.0, 1.0]])
    env = envelopes_of_family(space, B)
    box = center_full_space(space, env).center_set
    if not np.array_equal(box.lo, box.hi):
        raise AssertionError(f"center set is not a single point: {box}")
    candidate = box.lo.copy()
    J = ZeroSlice.from_indices(2, [0])
    rad_j, _ = restricted_radius(space, J, B)
    R, _, _ = distance_to_center_set(space, J, B)
    residual = abs(rad_j - (env.r + R))
    return TwoPointVerdict(
        r_B=env.r,
        candidate=candidate,
        candidate_in_J=bool(J.contains(candidate, tol=0.0)),
        rad_J=rad_j,
        distance=R,
        identity_residual=residual,
        identity_holds=bool(residual <= tol),
    )


@dataclass(frozen=True)
class IntervalVerdict:
    n: int
    a: float
    b: float
    r_B: float
    description_set_empty_in_J: bool
    blocking_points: list
    boundary_of_D: list

    def to_dict(self):
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "r_B": self.r_B,
            "description_set_empty_in_J": self.description_set_empty_in_J,
            "blocking_points": self.blocking_points,
            "boundary_of_D": self.boundary_of_D,
        }


def interval_counterexample(n=101, a=0.3, b=0.7, tol=DEFAULT_TOL):
    if not 0.0 < a < b < 1.0:
        raise ResolutionError(f"need 0 < a < b < 1, got a={a}, b={b}")
    space = make_interval_grid(n)
    D = interval_subset(n, a, b)
    interior = [t for t in np.flatnonzero(D) if all(D[s] for s in space.neighborhoods[t])]
    if not interior or D[0] or D[-1]:
        raise ResolutionError(
            f"grid of {n} points too coarse for [{a}, {b}]: need an interior point of D "
            "and a point of the complement on each side"
        )
    upper = (~D).astype(float)
    env = envelopes_of_bounds(space, upper, np.zeros(n))
    lo = env.N - env.r
    hi = env.n + env.r
    blocked = (lo > hi + tol) | (D & ((lo > tol) | (hi < -tol)))
    return IntervalVerdict(
        n=n,
        a=a,
        b=b,
        r_B=env.r,
        description_set_empty_in_J=bool(blocked.any()),
        blocking_points=[int(t) for t in np.flatnonzero(blocked)],
        boundary_of_D=boundary_points(space, D),
    )

"""Finite models of compact Hausdorff spaces.

A :class:`FiniteSpace` is a set of points ``0..n-1`` together with a
symmetric, self-inclusive neighborhood relation.  Upper and lower limits
``limsup_{s -> t}`` / ``liminf_{s -> t}`` are modelled as max / min over
``neighborhoods[t]``.  A discrete space (every neighborhood is the point
itself) models ``C(K)`` for finite discrete ``K``, i.e. ``l_inf^n``.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import DimensionMismatchError, InvalidDimensionError


@dataclass(frozen=True)
class FiniteSpace:
    neighborhoods: tuple

    def __post_init__(self):
        nbhd = tuple(frozenset(int(s) for s in nb) for nb in self.neighborhoods)
        n = len(nbhd)
        if n < 1:
            raise InvalidDimensionError("a finite space needs at least one point")
        for t, nb in enumerate(nbhd):
            if t not in nb:
                raise ValueError(f"neighborhood of point {t} does not contain {t}")
            for s in nb:
                if not 0 <= s < n:
                    raise InvalidDimensionError(f"neighbor {s} of point {t} out of range")
                if t not in nbhd[s]:
                    raise ValueError(f"neighborhood relation not symmetric at ({t}, {s})")
        object.__setattr__(self, "neighborhoods", nbhd)

    @property
    def point_count(self):
        return len(self.neighborhoods)

    def __len__(self):
        return self.point_count

    @property
    def is_discrete(self):
        return all(len(nb) == 1 for nb in self.neighborhoods)

    @cached_property
    def _padded_index(self):
        # Rows padded by repeating the point itself, so max/min are unaffected.
        width = max(len(nb) for nb in self.neighborhoods)
        idx = np.empty((self.point_count, width), dtype=np.intp)
        for t, nb in enumerate(self.neighborhoods):
            row = sorted(nb)
            idx[t] = row + [t] * (width - len(row))
        return idx

    def upper_limit(self, values):
        """Max of ``values`` over each neighborhood (the limsup proxy)."""
        values = np.asarray(values, dtype=float)
        return values[self._padded_index].max(axis=1)

    def lower_limit(self, values):
        """Min of ``values`` over each neighborhood (the liminf proxy)."""
        values = np.asarray(values, dtype=float)
        return values[self._padded_index].min(axis=1)


def make_discrete(n):
    """Discrete space on ``n`` points: every point is its own neighborhood."""
    n = int(n)
    if n < 1:
        raise InvalidDimensionError(f"discrete space needs n >= 1, got {n}")
    return FiniteSpace(tuple(frozenset((t,)) for t in range(n)))


def make_interval_grid(n):
    """Uniform grid of ``[0, 1]`` with path-graph neighborhoods ``{t-1, t, t+1}``."""
    n = int(n)
    if n < 2:
        raise InvalidDimensionError(f"interval grid needs n >= 2, got {n}")
    return FiniteSpace(
        tuple(frozenset(s for s in (t - 1, t, t + 1) if 0 <= s < n) for t in range(n))
    )


def grid_coordinates(n):
    return np.linspace(0.0, 1.0, int(n))


def interval_subset(n, a, b, atol=1e-12):
    """Mask of the grid points of ``make_interval_grid(n)`` lying in ``[a, b]``."""
    x = grid_coordinates(n)
    return (x >= a - atol) & (x <= b + atol)


def subset_mask(n, D):
    """Normalize a subset given as a boolean mask or as point indices."""
    if D is None:
        return np.zeros(n, dtype=bool)
    arr = np.asarray(D)
    if arr.dtype == bool:
        if arr.shape != (n,):
            raise DimensionMismatchError(
                f"subset mask has shape {arr.shape}, space has {n} points"
            )
        return arr.copy()
    mask = np.zeros(n, dtype=bool)
    if arr.size:
        idx = arr.astype(int).ravel()
        if idx.min() < 0 or idx.max() >= n:
            raise DimensionMismatchError(f"subset index out of range for {n} points")
        mask[idx] = True
    return mask


def is_clopen(space, D):
    """True iff no point of ``D`` has a neighbor outside ``D``."""
    mask = subset_mask(space.point_count, D)
    for t in np.flatnonzero(mask):
        if not all(mask[s] for s in space.neighborhoods[t]):
            return False
    return True


def boundary_points(space, D):
    """Points of ``D`` with at least one neighbor outside ``D``."""
    mask = subset_mask(space.point_count, D)
    return [
        int(t)
        for t in np.flatnonzero(mask)
        if not all(mask[s] for s in space.neighborhoods[t])
    ]


def space_from_json(obj):
    """Read ``{"points", "neighbors"}`` or the ``{"kind": "discrete"|"grid", "n"}`` shorthand."""
    kind = obj.get("kind")
    if kind == "discrete":
        return make_discrete(obj["n"])
    if kind == "grid":
        return make_interval_grid(obj["n"])
    if kind is not None:
        raise ValueError(f"unknown space kind {kind!r}")
    n = int(obj["points"])
    neighbors = obj.get("neighbors")
    if neighbors is None:
        return make_discrete(n)
    if len(neighbors) != n:
        raise DimensionMismatchError(f"{len(neighbors)} neighbor lists for {n} points")
    # Self-loops are implied by the format.
    return FiniteSpace(tuple(set(nb) | {t} for t, nb in enumerate(neighbors)))


def space_to_json(space):
    n = space.point_count
    if space.is_discrete:
        return {"kind": "discrete", "n": n}
    if n >= 2 and space == make_interval_grid(n):
        return {"kind": "grid", "n": n}
    return {"points": n, "neighbors": [sorted(nb) for nb in space.neighborhoods]}

"""Closed convex constraint sets in ``R^n`` (equivalently ``C(K)`` for ``|K| = n``)."""
from dataclasses import dataclass

import numpy as np

from ._validation import check_vector
from .exceptions import DimensionMismatchError, EmptyBodyError, SolverError
from .lp import INFEASIBLE, LinearProgram, solve
from .space import subset_mask


class ConvexBody:
    """Base class.  Subclasses add their constraints to an LP over a block of variables."""

    dim: int

    def add_to(self, lp, offset=0):
        raise NotImplementedError

    def contains(self, v, tol=1e-9):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def _check_dim(self, n):
        if n != self.dim:
            raise DimensionMismatchError(f"body lives in R^{self.dim}, data in R^{n}")


def _finite_or_none(a):
    return [None if not np.isfinite(x) else float(x) for x in a]


def _from_json_bounds(values, default):
    return np.array([default if x is None else x for x in values], dtype=float)


@dataclass(frozen=True, eq=False)
class Box(ConvexBody):
    """``{v : lo <= v <= hi}``; infinite entries are allowed."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float).ravel()
        hi = np.asarray(self.hi, dtype=float).ravel()
        if lo.shape != hi.shape:
            raise DimensionMismatchError("box bounds differ in length")
        if np.any(np.isnan(lo)) or np.any(np.isnan(hi)):
            raise ValueError("box bounds must not be NaN")
        bad = np.flatnonzero(lo > hi)
        if bad.size:
            raise EmptyBodyError(f"box is empty at coordinate {int(bad[0])}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dim(self):
        return self.lo.size

    @property
    def is_bounded(self):
        return bool(np.all(np.isfinite(self.lo)) and np.all(np.isfinite(self.hi)))

    def add_to(self, lp, offset=0):
        sl = slice(offset, offset + self.dim)
        lp.lower[sl] = np.maximum(lp.lower[sl], self.lo)
        lp.upper[sl] = np.minimum(lp.upper[sl], self.hi)

    def contains(self, v, tol=1e-9):
        v = np.asarray(v, dtype=float)
        return bool(np.all(v >= self.lo - tol) and np.all(v <= self.hi + tol))

    def to_json(self):
        return {"kind": "box", "lo": _finite_or_none(self.lo), "hi": _finite_or_none(self.hi)}

    def __eq__(self, other):
        return (
            isinstance(other, Box)
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )


def whole_space(n):
    return Box(np.full(n, -np.inf), np.full(n, np.inf))


@dataclass(frozen=True, eq=False)
class HPolytope(ConvexBody):
    """``{v : A v <= b}``, checked nonempty at construction."""

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        if A.shape[0] != b.size:
            raise DimensionMismatchError(f"A has {A.shape[0]} rows but b has {b.size} entries")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("polytope data must be finite")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        lp = LinearProgram(np.zeros(self.dim))
        self.add_to(lp)
        sol = solve(lp)
        if sol.status == INFEASIBLE:
            raise EmptyBodyError("polytope A v <= b is empty")
        if not sol.optimal:
            raise SolverError(f"feasibility check failed with status {sol.status}")
        object.__setattr__(self, "interior_hint", sol.z)

    @property
    def dim(self):
        return self.A.shape[1]

    def add_to(self, lp, offset=0):
        for row, rhs in zip(self.A, self.b):
            full = np.zeros(lp.n_vars)
            full[offset : offset + self.dim] = row
            lp.add(full, "<=", rhs)

    def contains(self, v, tol=1e-9):
        return bool(np.all(self.A @ np.asarray(v, dtype=float) <= self.b + tol))

    def to_json(self):
        return {"kind": "polytope", "A": self.A.tolist(), "b": self.b.tolist()}

    def __eq__(self, other):
        return (
            isinstance(other, HPolytope)
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.b, other.b)
        )


@dataclass(frozen=True, eq=False)
class Singleton(ConvexBody):
    point: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "point", check_vector(self.point, name="singleton point"))

    @property
    def dim(self):
        return self.point.size

    def add_to(self, lp, offset=0):
        sl = slice(offset, offset + self.dim)
        lp.lower[sl] = self.point
        lp.upper[sl] = self.point

    def contains(self, v, tol=1e-9):
        return bool(np.all(np.abs(np.asarray(v, dtype=float) - self.point) <= tol))

    def to_json(self):
        return {"kind": "singleton", "point": self.point.tolist()}

    def __eq__(self, other):
        return isinstance(other, Singleton) and np.array_equal(self.point, other.point)


@dataclass(frozen=True, eq=False)
class ZeroSlice(ConvexBody):
    """``{h : h = 0 on D}``, optionally intersected with a bounding box."""

    zero_set: np.ndarray
    bound: Box = None

    def __post_init__(self):
        mask = np.asarray(self.zero_set)
        if mask.dtype != bool:
            raise TypeError("zero_set must be a boolean mask; use ZeroSlice.from_indices")
        object.__setattr__(self, "zero_set", mask.copy())
        if self.bound is not None:
            if self.bound.dim != mask.size:
                raise DimensionMismatchError("bounding box and zero set differ in dimension")
            if np.any(self.bound.lo[mask] > 0) or np.any(self.bound.hi[mask] < 0):
                raise EmptyBodyError("bounding box excludes 0 on the zero set")
        lo = np.full(mask.size, -np.inf) if self.bound is None else self.bound.lo.copy()
        hi = np.full(mask.size, np.inf) if self.bound is None else self.bound.hi.copy()
        lo[mask] = 0.0
        hi[mask] = 0.0
        object.__setattr__(self, "_box", Box(lo, hi))

    @classmethod
    def from_indices(cls, n, indices, bound=None):
        return cls(subset_mask(n, indices), bound)

    @property
    def dim(self):
        return self.zero_set.size

    def as_box(self):
        return self._box

    def add_to(self, lp, offset=0):
        self.as_box().add_to(lp, offset)

    def contains(self, v, tol=1e-9):
        return self.as_box().contains(v, tol)

    def to_json(self):
        out = {"kind": "zero_slice", "indices": np.flatnonzero(self.zero_set).tolist(), "n": self.dim}
        if self.bound is not None:
            out["bound"] = self.bound.to_json()
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ZeroSlice)
            and np.array_equal(self.zero_set, other.zero_set)
            and self.bound == other.bound
        )


def body_from_json(obj, n=None):
    kind = obj.get("kind")
    if kind == "box":
        body = Box(_from_json_bounds(obj["lo"], -np.inf), _from_json_bounds(obj["hi"], np.inf))
    elif kind == "whole":
        if n is None:
            n = int(obj["n"])
        body = whole_space(n)
    elif kind == "polytope":
        body = HPolytope(obj["A"], obj["b"])
    elif kind == "singleton":
        body = Singleton(obj["point"])
    elif kind == "zero_slice":
        dim = int(obj.get("n", n if n is not None else -1))
        if dim < 0:
            raise ValueError("zero_slice needs the ambient dimension 'n'")
        bound = body_from_json(obj["bound"]) if obj.get("bound") else None
        body = ZeroSlice.from_indices(dim, obj["indices"], bound)
    else:
        raise ValueError(f"unknown body kind {kind!r}")
    if n is not None:
        body._check_dim(n)
    return body

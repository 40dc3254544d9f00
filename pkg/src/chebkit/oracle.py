"""Independent brute-force checks for radii and distances.

Nothing here calls the LP solver or the envelope/center code: these routines
exist to catch bugs in those paths, so they recompute everything from raw
coordinates.

* :func:`brute_radius` is exact.  Box-like bodies decouple per coordinate and
  are solved by enumerating 1-D breakpoints; polytopes are handled by a
  separating-axis test between the shrinking search box and the polytope's
  slabs, enumerating zonotope facet normals.
* :func:`grid_radius` is the plain grid search plus coordinate-descent
  refinement; an upper bound within the mesh size, for low dimensions.
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .body import Box, HPolytope, Singleton, ZeroSlice
from .exceptions import NeedsBoundsError

_MAX_NORMALS = 200_000


@dataclass(frozen=True)
class OracleConfig:
    grid_resolution: int = 64
    norm: str = "sup"
    multistart_count: int = 32
    seed: int = 0

    def __post_init__(self):
        if self.grid_resolution < 2:
            raise ValueError("grid_resolution must be >= 2")
        if self.multistart_count < 1:
            raise ValueError("multistart_count must be >= 1")
        if self.norm not in ("sup", "l1", "l2"):
            raise ValueError(f"unknown norm {self.norm!r}")


def _points(F):
    P = np.atleast_2d(np.array(F, dtype=float))
    if P.size == 0:
        raise ValueError("empty family")
    return P


def _farthest_sup(v, P):
    worst = 0.0
    for p in P:
        for a, b in zip(v, p):
            d = abs(a - b)
            if d > worst:
                worst = d
    return worst


def _column_extremes(P):
    k, n = P.shape
    lo = [min(P[i, j] for i in range(k)) for j in range(n)]
    hi = [max(P[i, j] for i in range(k)) for j in range(n)]
    return np.array(lo), np.array(hi)


def _box_of(V):
    if isinstance(V, Box):
        return V.lo, V.hi
    if isinstance(V, ZeroSlice):
        n = V.zero_set.size
        lo = np.full(n, -np.inf) if V.bound is None else np.array(V.bound.lo, dtype=float)
        hi = np.full(n, np.inf) if V.bound is None else np.array(V.bound.hi, dtype=float)
        lo[V.zero_set] = 0.0
        hi[V.zero_set] = 0.0
        return lo, hi
    return None


def _coordinate_minimax(values, lo, hi):
    """min over v in [lo, hi] of max_i |v - values[i]|, by enumerating breakpoints."""
    candidates = []
    for a in values:
        for b in values:
            candidates.append(0.5 * (a + b))
    candidates += [lo, hi]
    best = math.inf
    for v in candidates:
        if not math.isfinite(v):
            continue
        v = min(max(v, lo), hi)
        worst = max(abs(v - a) for a in values)
        best = min(best, worst)
    return best


def _slabs(A, b, rtol=1e-12):
    """Group rows of ``A v <= b`` into slabs ``l <= a.v <= u`` (``l = -inf`` if unpaired)."""
    rows = [np.array(r, dtype=float) for r in A]
    norms = [float(np.linalg.norm(r)) for r in rows]
    used = [False] * len(rows)
    dirs, lower, upper = [], [], []
    for i, r in enumerate(rows):
        if used[i] or norms[i] == 0.0:
            used[i] = True
            continue
        used[i] = True
        a = r / norms[i]
        u = b[i] / norms[i]
        lo_val = -math.inf
        for k in range(i + 1, len(rows)):
            if used[k] or norms[k] == 0.0:
                continue
            if np.allclose(rows[k] / norms[k], -a, rtol=0.0, atol=rtol):
                lo_val = max(lo_val, -b[k] / norms[k])
                used[k] = True
            elif np.allclose(rows[k] / norms[k], a, rtol=0.0, atol=rtol):
                u = min(u, b[k] / norms[k])
                used[k] = True
        dirs.append(a)
        lower.append(lo_val)
        upper.append(u)
    return np.array(dirs), np.array(lower), np.array(upper)


def _facet_normals(generators):
    """Normals of hyperplanes spanned by (q-1)-subsets of the generator directions in R^q."""
    q = generators.shape[1]
    if q == 1:
        return np.ones((1, 1))
    count = math.comb(generators.shape[0], q - 1)
    if count > _MAX_NORMALS:
        return None
    normals = []
    for subset in itertools.combinations(range(generators.shape[0]), q - 1):
        G = generators[list(subset)]
        _, s, vt = np.linalg.svd(G)
        if s.size < q - 1 or s[-1] <= 1e-12 * max(1.0, s[0]):
            continue
        normals.append(vt[-1])
    return np.array(normals)


def box_polytope_threshold(center, base_halfwidth, t_min, A, b):
    """Smallest ``t >= t_min`` such that the box ``center +- (base_halfwidth + t)`` meets ``{A v <= b}``.

    Assumes ``base_halfwidth + t_min >= 0``.  The box meets the polytope iff
    the zonotope ``A_slab @ box`` meets the slab rectangle, which is checked on
    every facet normal of their Minkowski difference; each check is linear
    in ``t``.
    """
    center = np.asarray(center, dtype=float)
    base_halfwidth = np.asarray(base_halfwidth, dtype=float)
    dirs, lower, upper = _slabs(np.atleast_2d(A), np.asarray(b, dtype=float))
    if dirs.size == 0:
        return float(t_min)
    q = dirs.shape[0]
    generators = np.vstack([dirs.T, np.eye(q)])
    normals = _facet_normals(generators)
    if normals is None:
        raise NeedsBoundsError(f"too many slab directions ({q}) for the exact oracle")
    proj = normals @ dirs  # (normals, n)
    alpha = np.abs(proj).sum(axis=1)
    center_proj = dirs @ center

    # Unpaired half-spaces get a far lower face; push it out until it is inactive.
    far = 1.0 + float(np.max(np.abs(center_proj))) + float(np.max(np.abs(upper)))
    far += float(np.abs(dirs).sum(axis=1).max()) * (float(np.max(np.abs(base_halfwidth))) + abs(t_min) + 1.0)
    open_side = ~np.isfinite(lower)
    for _ in range(200):
        low = np.where(open_side, center_proj - far, lower)
        mid = 0.5 * (low + upper)
        half = 0.5 * (upper - low)
        if np.any(half < 0):
            return math.inf
        offset = np.abs(normals @ (center_proj - mid))
        beta = np.abs(normals) @ half + np.abs(proj) @ base_halfwidth
        t = float(t_min)
        for a, bt, g in zip(alpha, beta, offset):
            if a > 1e-14:
                t = max(t, (g - bt) / a)
            elif g > bt * (1 + 1e-12) + 1e-12:
                return math.inf
        if not open_side.any():
            return t
        reach = np.abs(dirs) @ (base_halfwidth + t)
        if np.all((center_proj - reach)[open_side] > low[open_side]):
            return t
        far *= 2.0
    raise NeedsBoundsError("could not bound the unpaired half-spaces")


def brute_radius(V, F, cfg=None, bounds=None):
    """Restricted Chebyshev radius ``min_{v in V} max_{f in F} ||v - f||_inf``."""
    cfg = cfg or OracleConfig()
    P = _points(F)
    if isinstance(V, Singleton):
        return _farthest_sup(np.asarray(V.point, dtype=float), P)
    box = _box_of(V)
    if box is not None:
        lo, hi = box
        return max(
            _coordinate_minimax(list(P[:, j]), float(lo[j]), float(hi[j]))
            for j in range(P.shape[1])
        )
    if isinstance(V, HPolytope):
        cmin, cmax = _column_extremes(P)
        spread = 0.5 * (cmax - cmin)
        try:
            return box_polytope_threshold(
                0.5 * (cmax + cmin), -spread, float(spread.max()), V.A, V.b
            )
        except NeedsBoundsError:
            if bounds is None:
                raise
            return grid_radius(V, F, cfg, bounds)
    return grid_radius(V, F, cfg, bounds)


def brute_distance_to_box(V, lo, hi):
    """Sup-norm distance from the body ``V`` to the box ``[lo, hi]``."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if isinstance(V, Singleton):
        p = np.asarray(V.point, dtype=float)
        return float(max(0.0, np.max(lo - p), np.max(p - hi)))
    box = _box_of(V)
    if box is not None:
        vlo, vhi = box
        gaps = [max(0.0, lo[j] - vhi[j], vlo[j] - hi[j]) for j in range(lo.size)]
        return float(max(gaps))
    if isinstance(V, HPolytope):
        return box_polytope_threshold(0.5 * (lo + hi), 0.5 * (hi - lo), 0.0, V.A, V.b)
    raise TypeError(f"unsupported body {type(V).__name__}")


def grid_radius(V, F, cfg=None, bounds=None):
    """Grid search over ``V`` followed by coordinate descent; an upper bound on the radius.

    ``bounds = (lo, hi)`` limits the search region.  It is derived from ``V``
    when ``V`` is a bounded box, and from the bounding box of ``F`` when ``V``
    is the whole space (a center can always be clamped into it).
    """
    cfg = cfg or OracleConfig()
    P = _points(F)
    n = P.shape[1]
    if bounds is None:
        box = _box_of(V)
        if box is not None and np.all(np.isfinite(box[0])) and np.all(np.isfinite(box[1])):
            bounds = box
        elif box is not None and np.all(np.isinf(box[0])) and np.all(np.isinf(box[1])):
            bounds = _column_extremes(P)
        elif isinstance(V, Singleton):
            return _farthest_sup(np.asarray(V.point, dtype=float), P)
        else:
            raise NeedsBoundsError("unbounded body needs an explicit search box")
    lo, hi = (np.asarray(x, dtype=float) for x in bounds)
    box = _box_of(V)
    if box is not None:
        lo, hi = np.maximum(lo, box[0]), np.minimum(hi, box[1])
    res = cfg.grid_resolution
    while res > 2 and res**n > 2_000_000:
        res -= 1
    axes = [np.linspace(lo[j], hi[j], res) if hi[j] > lo[j] else np.array([lo[j]]) for j in range(n)]
    mesh = max(((hi[j] - lo[j]) / (res - 1) for j in range(n)), default=0.0)

    best_v, best_val = None, math.inf
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    for start in range(0, grid.shape[0], 65536):
        chunk = grid[start : start + 65536]
        inside = np.array([V.contains(v) for v in chunk]) if not isinstance(V, Box) else np.ones(len(chunk), bool)
        if not inside.any():
            continue
        chunk = chunk[inside]
        vals = np.abs(chunk[:, None, :] - P[None, :, :]).max(axis=(1, 2))
        i = int(np.argmin(vals))
        if vals[i] < best_val:
            best_val, best_v = float(vals[i]), chunk[i].copy()
    if best_v is None:
        raise NeedsBoundsError("no grid point of the search box lies in the body")

    step = mesh if mesh > 0 else 1.0
    while step > 1e-13:
        improved = False
        for j in range(n):
            for sign in (1.0, -1.0):
                trial = best_v.copy()
                trial[j] += sign * step
                if not V.contains(trial, tol=0.0):
                    continue
                val = _farthest_sup(trial, P)
                if val < best_val - 1e-15:
                    best_v, best_val, improved = trial, val, True
        if not improved:
            step *= 0.5
    return best_val


def _circumcenter(S):
    """Point in the affine hull of the rows of ``S`` equidistant from all of them, or None."""
    p0 = S[0]
    if S.shape[0] == 1:
        return p0.copy()
    D = S[1:] - p0
    G = D @ D.T
    rhs = 0.5 * np.einsum("ij,ij->i", D, D)
    try:
        lam = np.linalg.solve(G, rhs)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(lam)):
        return None
    return p0 + lam @ D


def _enclosing_from_supports(P, candidates, top, best=math.inf):
    """Smallest ball spanned by ``<= top`` points of ``candidates`` that covers all of ``P``."""
    for s in range(1, top + 1):
        for subset in itertools.combinations(candidates, s):
            c = _circumcenter(P[list(subset)])
            if c is None:
                continue
            rad = math.sqrt(max(float(np.sum((P[subset[0]] - c) ** 2)), 0.0))
            if rad >= best:
                continue
            far = math.sqrt(float(np.max(np.sum((P - c) ** 2, axis=1))))
            if far <= rad * (1 + 1e-12) + 1e-12:
                best = rad
    return best


def smallest_ball_l2(F, cfg=None, max_subsets=20_000):
    """Euclidean radius of the smallest ball containing ``F``.

    Exact via enumeration of support sets of size ``<= dim + 1`` when that is
    affordable.  Otherwise a multistart subgradient descent locates the ball
    approximately, and the support sets among the points nearly farthest from
    its center are enumerated to pin the radius down exactly.
    """
    cfg = cfg or OracleConfig(norm="l2")
    P = _points(F)
    k, d = P.shape
    if k == 1:
        return 0.0
    top = min(k, d + 1)
    total = sum(math.comb(k, s) for s in range(1, top + 1))
    if total <= max_subsets:
        return _enclosing_from_supports(P, range(k), top)

    rng = np.random.default_rng(cfg.seed)
    best, best_c = math.inf, None
    for _ in range(cfg.multistart_count):
        c = P[rng.integers(k)] + rng.normal(scale=1e-3, size=d)
        for it in range(1, 2001):
            dist = np.sqrt(np.sum((P - c) ** 2, axis=1))
            i = int(np.argmax(dist))
            if dist[i] < best:
                best, best_c = float(dist[i]), c.copy()
            c = c + (P[i] - c) / (it + 1)
    dist = np.sqrt(np.sum((P - best_c) ** 2, axis=1))
    order = np.argsort(-dist)
    near = [int(i) for i in order[: max(top, 12)] if dist[i] >= 0.8 * best]
    return _enclosing_from_supports(P, near, min(top, len(near)), best)


def hausdorff_boxes_bisect(P_lo, P_hi, Q_lo, Q_hi, iters=200):
    """Hausdorff distance between boxes from the containment definition, by bisection on epsilon."""
    P_lo, P_hi, Q_lo, Q_hi = (np.asarray(x, dtype=float) for x in (P_lo, P_hi, Q_lo, Q_hi))

    def contained(eps):
        return (
            np.all(P_lo >= Q_lo - eps) and np.all(P_hi <= Q_hi + eps)
            and np.all(Q_lo >= P_lo - eps) and np.all(Q_hi <= P_hi + eps)
        )

    if contained(0.0):
        return 0.0
    hi = 1.0
    while not contained(hi):
        hi *= 2.0
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return hi

"""Seeded random instances for the verification suites."""
import numpy as np

from .body import Box, HPolytope
from .space import FiniteSpace


def random_family(rng, size, dim, low=-1.0, high=1.0):
    return rng.uniform(low, high, size=(size, dim))


def random_box(rng, dim, spread=3.0):
    center = rng.uniform(-spread, spread, size=dim)
    half = rng.uniform(0.05, 1.0, size=dim)
    return Box(center - half, center + half)


def random_polytope(rng, dim, slabs=2, spread=3.0):
    """Intersection of random slabs ``l <= a.v <= u`` through a random anchor point."""
    anchor = rng.uniform(-spread, spread, size=dim)
    rows, rhs = [], []
    for _ in range(slabs):
        a = rng.normal(size=dim)
        a /= np.linalg.norm(a)
        below, above = rng.uniform(0.05, 1.0, size=2)
        rows += [a, -a]
        rhs += [a @ anchor + above, -(a @ anchor) + below]
    return HPolytope(np.array(rows), np.array(rhs))


def random_body(rng, dim, kind):
    if kind == "box":
        return random_box(rng, dim)
    if kind == "polytope":
        return random_polytope(rng, dim, slabs=int(rng.integers(1, min(dim, 3) + 1)))
    raise ValueError(f"unknown body kind {kind!r}")


def random_instance(rng, dim, kind, max_size=6):
    """A ``(V, F)`` pair with ``|F|`` uniform in ``1..max_size``."""
    F = random_family(rng, int(rng.integers(1, max_size + 1)), dim)
    return random_body(rng, dim, kind), F


def random_block_space(rng, n, max_block=4):
    """A space of ``n`` points split into consecutive path-shaped blocks.

    Each block is its own connected component, so any union of blocks is
    clopen.  Returns ``(space, blocks)``.
    """
    neighborhoods = []
    blocks = []
    start = 0
    while start < n:
        size = int(min(rng.integers(1, max_block + 1), n - start))
        block = list(range(start, start + size))
        blocks.append(block)
        for t in block:
            neighborhoods.append({s for s in (t - 1, t, t + 1) if start <= s < start + size})
        start += size
    return FiniteSpace(tuple(neighborhoods)), blocks

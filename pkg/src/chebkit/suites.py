"""Randomized verification suites run by ``chebkit verify``.

Every trial draws from its own generator seeded by ``(seed, dim, index)``, so
results do not depend on how trials are scheduled, and the same seed always
produces the same report.
"""
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .center import insertion
from .counterexamples import interval_counterexample, two_point_counterexample
from .envelope import check_half_diam
from .generators import random_block_space, random_family, random_instance
from .metric import (
    center_lipschitz_batch,
    tightness_pair,
    verify_center_lipschitz,
    verify_radius_lipschitz,
)
from .oracle import brute_radius
from .restricted import IDENTITY_TOL, radius_propagation, verify_radius_identity
from .space import make_discrete

SUITES = ("identity", "lipschitz", "halfdiam", "examples", "insertion")
ORACLE_TOL = 1e-5


def _rng(seed, dim, index):
    return np.random.default_rng([seed, dim, index])


def _map(fn, arg_list, jobs):
    """``[fn(*args) for args in arg_list]``, optionally across processes, in input order."""
    if jobs > 1 and len(arg_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*arg_list)))
    return [fn(*a) for a in arg_list]


def identity_trial(seed, dim, index, tol=IDENTITY_TOL):
    kind = "box" if index % 2 == 0 else "polytope"
    V, F = random_instance(_rng(seed, dim, index), dim, kind)
    rep = verify_radius_identity(None, V, F, tol=tol)
    gap = abs(rep.rad_V - brute_radius(V, F))
    return {
        "dim": dim,
        "index": index,
        "body": kind,
        "rad_V": rep.rad_V,
        "r_F": rep.r_F,
        "R": rep.R,
        "identity_residual": rep.identity_residual,
        "attainment_residual": rep.attainment_residual,
        "oracle_gap": gap,
        "ok": bool(rep.ok and gap <= ORACLE_TOL),
    }


def halfdiam_trial(seed, dim, index, tol=1e-12):
    rng = _rng(seed, dim, index)
    F = random_family(rng, int(rng.integers(1, 7)), dim)
    space = make_discrete(dim)
    try:
        rep = check_half_diam(space, F, tol=tol)
        prop = radius_propagation(space, F, tol=tol)
        ok = rep.equal and prop.holds
        half, r = rep.half_diam, rep.r
    except AssertionError:
        ok, half, r = False, None, None
    return {"dim": dim, "index": index, "half_diam": half, "r_F": r, "ok": bool(ok)}


def insertion_trial(seed, dim, index, tol=1e-12):
    rng = _rng(seed, dim, index)
    space, blocks = random_block_space(rng, dim)
    chosen = [b for b in blocks if rng.random() < 0.5]
    D = np.zeros(dim, dtype=bool)
    for b in chosen:
        D[b] = True
    f = rng.uniform(-1.0, 1.0, size=dim)
    g = f - rng.uniform(0.0, 1.0, size=dim)
    alpha = float(rng.uniform(-1.0, 1.0))
    f[D] = np.maximum(f[D], alpha)
    g[D] = np.minimum(g[D], alpha)
    h = insertion(space, g, f, D, alpha)
    ok = bool(np.all(g <= h + tol) and np.all(h <= f + tol) and np.all(h[D] == alpha))
    return {"dim": dim, "index": index, "zero_set_size": int(D.sum()), "ok": ok}


def _summarize(name, checks, **extra):
    failures = sum(not c["ok"] for c in checks)
    return {"suite": name, "checks": checks, "count": len(checks), "failures": failures, **extra}


def identity_suite(trials, seed, dims, jobs=1):
    args = [(seed, n, i) for n in dims for i in range(trials)]
    checks = _map(identity_trial, args, jobs)
    worst = max((c["identity_residual"] for c in checks), default=0.0)
    gap = max((c["oracle_gap"] for c in checks), default=0.0)
    return _summarize("identity", checks, max_identity_residual=worst, max_oracle_gap=gap)


def halfdiam_suite(trials, seed, dims, jobs=1):
    args = [(seed, n, i) for n in dims for i in range(trials)]
    return _summarize("halfdiam", _map(halfdiam_trial, args, jobs))


def insertion_suite(trials, seed, dims, jobs=1):
    args = [(seed, n, i) for n in dims for i in range(trials)]
    return _summarize("insertion", _map(insertion_trial, args, jobs))


def lipschitz_suite(trials, seed, dims, jobs=1):
    """Center map (constant 2, tight) and restricted radius map (constant 1)."""
    reports, max_ratio = center_lipschitz_batch(trials, seed=seed, max_dim=max(dims), min_dim=min(dims))
    F, G = tightness_pair()
    tight = verify_center_lipschitz(None, F, G, tol=0.0)
    checks = [
        {"kind": "center", "index": i, **r.to_dict(), "ok": r.lipschitz_ok}
        for i, r in enumerate(reports)
    ]
    for i in range(trials):
        rng = _rng(seed, 0, i)
        n = int(rng.choice(dims))
        V, F1 = random_instance(rng, n, "box" if i % 2 == 0 else "polytope")
        F2 = F1 + rng.uniform(-0.3, 0.3, size=F1.shape)
        rep = verify_radius_lipschitz(None, V, F1, F2, samples=8, rng=rng)
        checks.append(
            {
                "kind": "radius",
                "index": i,
                "d_H": rep.d_H,
                "rad_difference": rep.rad_difference,
                "pointwise_max_difference": rep.pointwise_max_difference,
                "ok": rep.ok,
            }
        )
    return _summarize(
        "lipschitz",
        checks,
        max_center_ratio=max_ratio,
        tightness_ratio=tight.ratio,
        tightness_attained=bool(tight.ratio == 2.0),
    )


def examples_suite(trials=None, seed=None, dims=None, jobs=1):
    two = two_point_counterexample()
    two_ok = (
        two.r_B == 0.5
        and two.candidate.tolist() == [2.5, 0.5]
        and not two.candidate_in_J
        and abs(two.rad_J - 3.0) <= 1e-12
        and two.identity_holds
    )
    interval = interval_counterexample(101, 0.3, 0.7)
    interval_ok = interval.r_B == 0.5 and interval.description_set_empty_in_J
    checks = [
        {"name": "two_point_zero_slice", **two.to_dict(), "ok": bool(two_ok)},
        {"name": "interval_zero_set_not_clopen", **interval.to_dict(), "ok": bool(interval_ok)},
    ]
    return _summarize("examples", checks)


RUNNERS = {
    "identity": identity_suite,
    "lipschitz": lipschitz_suite,
    "halfdiam": halfdiam_suite,
    "examples": examples_suite,
    "insertion": insertion_suite,
}


def run_suite(name, trials, seed, dims, jobs=1):
    names = SUITES if name == "all" else (name,)
    return [RUNNERS[s](trials, seed, dims, jobs=jobs) for s in names]

"""``chebkit`` command line.

Subcommands: ``center``, ``restricted``, ``verify``, ``characterize`` and
``lipschitz``.  Every command prints a JSON report (schema ``chebkit/1``) on
stdout and, with ``--out FILE``, also writes it to ``FILE``.

Exit codes:

* 0 — success
* 1 — a verification check failed
* 2 — bad arguments, unreadable or malformed instance, unknown suite
* 3 — the zero set ``D`` is not clopen, so the order-interval description
  of centers in ``J_D`` does not apply
"""
import argparse
import json
import sys

import numpy as np

from .body import ZeroSlice, whole_space
from .center import center_full_space, center_msummand, r_of
from .exceptions import ChebkitError, ClopenRequiredError
from .io import load_instance
from .metric import center_lipschitz_batch, tightness_pair, verify_center_lipschitz
from .oracle import brute_radius
from .restricted import characterization_harness, norm_diameter, norm_radius, verify_radius_identity
from .suites import SUITES, run_suite

SCHEMA = "chebkit/1"
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOT_CLOPEN = 0, 1, 2, 3
ORACLE_TOL = 1e-6


def parse_dims(text):
    """``"A..B"`` or ``"N"`` to a list of dimensions."""
    try:
        if ".." in text:
            a, b = (int(x) for x in text.split("..", 1))
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or N, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return list(range(a, b + 1))


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(report, out):
    text = json.dumps(report, indent=2, sort_keys=True, default=_json_default)
    print(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _header(command, **fields):
    return {"schema": SCHEMA, "command": command, **fields}


def cmd_center(args):
    inst = load_instance(args.input)
    report = _header("center", input=args.input, norm=inst.norm)
    if inst.norm != "sup":
        if inst.family is None:
            raise ChebkitError("non-sup norms need an explicit family")
        report["radius"] = norm_radius(inst.family, inst.norm)
        report["half_diameter"] = 0.5 * norm_diameter(inst.family, inst.norm)
        return report, EXIT_OK

    env = inst.envelopes()
    if inst.subset_d is None and inst.space.is_discrete:
        result = center_full_space(inst.space, env)
    else:
        result = center_msummand(inst.space, inst.subset_d, env, tol=args.tol)
    report.update(result.to_dict())

    status = EXIT_OK
    if args.oracle:
        report["oracle"] = _center_oracle(inst, result)
        if not report["oracle"].get("ok", True):
            status = EXIT_FAILED
    return report, status


def _center_oracle(inst, result):
    if inst.family is None or not inst.space.is_discrete:
        return {"skipped": "brute-force oracle needs an explicit family on a discrete space"}
    n = inst.dim
    V = whole_space(n) if inst.subset_d is None else ZeroSlice(inst.subset_d)
    residual = abs(result.radius - brute_radius(V, inst.family))
    witness_residual = abs(r_of(result.witness, inst.family) - result.radius)
    return {
        "radius_residual": residual,
        "witness_residual": witness_residual,
        "ok": bool(residual <= ORACLE_TOL and witness_residual <= ORACLE_TOL),
    }


def cmd_restricted(args):
    inst = load_instance(args.input)
    if inst.family is None:
        raise ChebkitError("restricted centers need an explicit family")
    if not inst.space.is_discrete:
        raise ChebkitError("restricted centers are computed on discrete spaces")
    V = inst.body if inst.body is not None else whole_space(inst.dim)
    rep = verify_radius_identity(inst.space, V, inst.family, tol=args.tol)
    report = _header("restricted", input=args.input, body=V.to_json(), **rep.to_dict())
    status = EXIT_OK if rep.ok else EXIT_FAILED
    if args.oracle:
        residual = abs(rep.rad_V - brute_radius(V, inst.family))
        report["oracle"] = {"radius_residual": residual, "ok": bool(residual <= ORACLE_TOL)}
        if residual > ORACLE_TOL:
            status = EXIT_FAILED
    return report, status


def cmd_verify(args):
    results = run_suite(args.suite, args.trials, args.seed, args.dims, jobs=args.jobs)
    failures = sum(r["failures"] for r in results)
    report = _header(
        "verify",
        suite=args.suite,
        seed=args.seed,
        trials=args.trials,
        dims=[args.dims[0], args.dims[-1]],
        failures=failures,
        suites=results,
    )
    for r in results:
        print(f"{r['suite']}: {r['count'] - r['failures']}/{r['count']} passed", file=sys.stderr)
    return report, EXIT_OK if failures == 0 else EXIT_FAILED


def cmd_characterize(args):
    summary = characterization_harness(args.norm, args.dim, args.trials, seed=args.seed, tol=args.tol)
    report = _header("characterize", **summary.to_dict())
    print(summary.verdict, file=sys.stderr)
    failed = args.norm == "sup" and summary.violations > 0
    return report, EXIT_FAILED if failed else EXIT_OK


def cmd_lipschitz(args):
    reports, max_ratio = center_lipschitz_batch(
        args.trials, seed=args.seed, max_dim=args.dims[-1], tol=args.tol, min_dim=args.dims[0]
    )
    F, G = tightness_pair()
    tight = verify_center_lipschitz(None, F, G, tol=0.0)
    failures = sum(not r.lipschitz_ok for r in reports)
    report = _header(
        "lipschitz",
        seed=args.seed,
        trials=args.trials,
        max_ratio=max_ratio,
        tightness=tight.to_dict(),
        failures=failures,
        pairs=[r.to_dict() for r in reports],
    )
    print(f"max ratio {max_ratio:.12g} over {len(reports)} pairs", file=sys.stderr)
    return report, EXIT_OK if failures == 0 else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chebkit", description="Chebyshev radii and centers in sup-norm spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, randomized=False):
        p.add_argument("--tol", type=float, default=1e-9, help="comparison tolerance")
        p.add_argument("--out", metavar="FILE", help="also write the JSON report here")
        if randomized:
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("center", help="radius and center set of an instance")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    common(p)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("restricted", help="restricted center over the instance body")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    common(p)
    p.set_defaults(func=cmd_restricted, tol=1e-8)

    p = sub.add_parser("verify", help="run randomized verification suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.add_argument("--dims", type=parse_dims, default=parse_dims("2..8"), metavar="A..B")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p, randomized=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("characterize", help="test rad = diam/2 under a norm")
    p.add_argument("--norm", choices=("sup", "l1", "l2"), default="sup")
    p.add_argument("--dim", type=int, default=2)
    common(p, randomized=True)
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("lipschitz", help="center-map Lipschitz ratios on random pairs")
    p.add_argument("--dims", type=parse_dims, default=parse_dims("1..8"), metavar="A..B")
    common(p, randomized=True)
    p.set_defaults(func=cmd_lipschitz)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    try:
        report, status = args.func(args)
    except ClopenRequiredError as exc:
        print(f"chebkit: {exc}", file=sys.stderr)
        return EXIT_NOT_CLOPEN
    except (ChebkitError, OSError, ValueError) as exc:
        print(f"chebkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad state, unsupported
dimension, ...), 2 on a usage error. Data goes to stdout or the named output
file; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import dynamics, entangle, infomeasure, malus, mub, qstate, stochastics
from .errors import DomainError, InvalidState

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2
MUB_EXIT_TOL = 1e-9


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def _positive(text: str) -> float:
    v = _finite(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _nonnegative(text: str) -> float:
    v = _finite(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _count(minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}: {text!r}")
        return v

    return parse


def _float_list(length: int | None = None):
    def parse(text: str) -> list[float]:
        try:
            vals = [_finite(x) for x in text.split(",")]
        except argparse.ArgumentTypeError:
            raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from None
        if length is not None and len(vals) != length:
            raise argparse.ArgumentTypeError(f"expected {length} numbers, got {len(vals)}")
        return vals

    return parse


def _sweep(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep must be lo:hi:points")
    lo, hi = _finite(parts[0]), _finite(parts[1])
    points = _count(2)(parts[2])
    if hi < lo:
        raise argparse.ArgumentTypeError("sweep upper end below lower end")
    return lo, hi, points


def _emit_json(obj, out=None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit_csv(header: list[str], rows, out=None) -> None:
    def write(fh):
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(v)) for v in row])

    if out:
        with open(out, "w", newline="") as fh:
            write(fh)
    else:
        write(sys.stdout)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidState(f"{path}: not valid JSON ({exc})") from None


# subcommands ---------------------------------------------------------------


def cmd_info(args) -> int:
    p = args.p
    scheme = infomeasure.NormalizationScheme(args.mode)
    report = {
        "H": infomeasure.shannon_entropy(p),
        "U": infomeasure.uncertainty(p),
        "I": infomeasure.info_measure(p, scheme),
    }
    if len(p) == 2:
        report["i"] = infomeasure.binary_info(p)[0]
    _emit_json(report)
    return EXIT_OK


def cmd_state(args) -> int:
    if args.i is not None:
        rho = qstate.density_from_info(args.i)
    else:
        rho = qstate.load_state(args.state)
    report = {"dim": rho.dim, "purity": rho.purity, "rho": rho.to_json()}
    if rho.dim == 2:
        report["i"] = list(qstate.info_from_density(rho).as_array())
    if rho.dim in mub.SUPPORTED_DIMS:
        bases = mub.mub_construct(rho.dim)
        scheme = infomeasure.NormalizationScheme(args.mode)
        report["total_info"] = qstate.total_info_general(rho, bases, scheme)
        report["mub_probabilities"] = [p.tolist() for p in qstate.mub_probabilities(rho, bases)]
    _emit_json(report)
    return EXIT_OK


def cmd_mub(args) -> int:
    bases = mub.mub_construct(args.dim)
    ortho, unbiased = mub.verify_mub(bases)
    summary = {
        "dim": bases.dim,
        "count": len(bases),
        "max_orthonormality_error": ortho,
        "max_unbiasedness_error": unbiased,
    }
    if args.json:
        full = dict(summary)
        full["bases"] = [
            {"dim": bases.dim, "re": b.real.tolist(), "im": b.imag.tolist()} for b in bases
        ]
        _emit_json(full, args.json)
    _emit_json(summary)
    ok = ortho < MUB_EXIT_TOL and unbiased < MUB_EXIT_TOL
    if not ok:
        print("mub: verification failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_malus(args) -> int:
    n = malus.PRESETS[args.preset] if args.preset else args.n
    lo, hi, points = args.sweep
    rows = malus.sweep(n, lo, hi, points)
    cols = ["theta", "f_ode", "f_closed", "p_malus", "p_oracle", "abs_err"]
    _emit_csv(cols, ([r[c] for c in cols] for r in rows), args.csv)
    if args.csv:
        _emit_json(
            {
                "n": n,
                "points": points,
                "max_abs_err": max(r["abs_err"] for r in rows),
                "max_f_dev": max(abs(r["f_ode"] - r["f_closed"]) for r in rows),
            }
        )
    return EXIT_OK


def _planes_json(planes: entangle.PlanePair) -> dict:
    return {k: getattr(planes, k).tolist() for k in ("a1", "a2", "b1", "b2")}


def cmd_entangle(args) -> int:
    rho = qstate.load_state(args.state)
    t = entangle.correlation_tensor(rho)
    verdict = entangle.chsh_and_verdict(rho)
    report = {
        "T": t.tolist(),
        "M": verdict.M,
        "chsh_max": verdict.chsh_max,
        "singular_values": list(verdict.singular_values),
        "verdicts": {
            "violates_bell": verdict.violates_bell,
            "entangled_by_criterion": verdict.entangled_by_criterion,
        },
    }
    if args.planes == "canonical":
        report["i_corr"] = entangle.info_corr(rho)
        report["planes"] = _planes_json(entangle.PlanePair.canonical())
    else:
        best = entangle.max_info_corr(rho, "numeric")
        report["i_corr"] = best.value
        report["planes"] = _planes_json(best.argmax_planes)
    _emit_json(report)
    return EXIT_OK


def _load_hamiltonian(path) -> np.ndarray:
    obj = _load_json(path)
    try:
        h = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidState(f"{path}: malformed Hamiltonian JSON ({exc})") from None
    if "dim" in obj and h.shape != (obj["dim"], obj["dim"]):
        raise InvalidState(f"{path}: matrix shape {h.shape} does not match dim")
    return h


def cmd_evolve(args) -> int:
    rho = qstate.load_state(args.state)
    i0 = qstate.info_from_density(rho)
    h = _load_hamiltonian(args.hamiltonian)
    u = dynamics.axis_from_hamiltonian(h)
    traj = dynamics.evolve_info(i0, u, args.t, args.dt)
    idx = range(0, len(traj.times), args.stride)
    if (len(traj.times) - 1) % args.stride:
        idx = [*idx, len(traj.times) - 1]
    rows = ([traj.times[k], *traj.vectors[k], traj.norms[k]] for k in idx)
    _emit_csv(["t", "i1", "i2", "i3", "norm"], rows, args.csv)
    if args.csv:
        exact = qstate.info_from_density(dynamics.evolve_exact(rho, h, args.t)).as_array()
        _emit_json(
            {
                "final": list(traj.vectors[-1]),
                "exact_final": list(exact),
                "oracle_deviation": float(np.max(np.abs(traj.vectors[-1] - exact))),
                "norm_drift": float(np.max(np.abs(traj.norms - traj.norms[0]))),
            }
        )
    return EXIT_OK


def cmd_sg_sim(args) -> int:
    run = stochastics.simulate_sg(args.theta, args.trials, args.seed)
    report = {
        "theta": run.theta,
        "p": run.p,
        "trials": run.trials,
        "seed": run.seed,
        "successes": run.successes,
        "frequency": run.frequency,
        "sigma": stochastics.binomial_sigma(run.p, run.trials),
        "per_trial_uncertainty": stochastics.per_trial_uncertainty(run.p),
    }
    if args.chebyshev_k is not None:
        rep = stochastics.chebyshev_report(
            args.theta, args.trials, args.chebyshev_k, args.runs, args.seed
        )
        report["chebyshev"] = {
            "k": rep.k,
            "runs": rep.runs,
            "bound": rep.bound,
            "empirical_violation_rate": rep.empirical_violation_rate,
            "slack": rep.slack,
            "within_bound": rep.within_bound,
        }
    _emit_json(report)
    return EXIT_OK


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infoqm",
        description="Information measures, information vectors and their quantum oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("info", help="entropy, uncertainty and information of a distribution")
    p.add_argument("--p", type=_float_list(), required=True, help="probabilities, e.g. 0.6,0.4")
    p.add_argument("--mode", choices=("unit", "bits"), default="unit")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("state", help="inspect a state given by file or information vector")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", metavar="FILE", help="state JSON file")
    src.add_argument("--i", type=_float_list(3), help="information vector i1,i2,i3")
    p.add_argument("--mode", choices=("unit", "bits"), default="unit")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("mub", help="construct and verify a complete MUB set")
    p.add_argument("--dim", type=_count(2), required=True)
    p.add_argument("--json", metavar="FILE", help="write the bases to FILE")
    p.set_defaults(func=cmd_mub)

    p = sub.add_parser("malus", help="tabulate the cos^2 law against ODE and oracle")
    n = p.add_mutually_exclusive_group()
    n.add_argument("--n", type=_positive, default=1.0, help="winding constant (default 1)")
    n.add_argument("--preset", choices=sorted(malus.PRESETS))
    p.add_argument("--sweep", type=_sweep, default=(0.0, 2 * math.pi, 101), help="lo:hi:points")
    p.add_argument("--csv", metavar="FILE")
    p.set_defaults(func=cmd_malus)

    p = sub.add_parser("entangle", help="correlation information and CHSH verdict")
    p.add_argument("--state", metavar="FILE", required=True)
    p.add_argument("--planes", choices=("canonical", "optimize"), default="canonical")
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("evolve", help="evolve a qubit information vector")
    p.add_argument("--state", metavar="FILE", required=True)
    p.add_argument("--hamiltonian", metavar="FILE", required=True)
    p.add_argument("--t", type=_nonnegative, required=True)
    p.add_argument("--dt", type=_positive, default=1e-3)
    p.add_argument("--stride", type=_count(1), default=1, help="emit every k-th step")
    p.add_argument("--csv", metavar="FILE")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sg-sim", help="seeded Stern-Gerlach Monte Carlo")
    p.add_argument("--theta", type=_finite, required=True)
    p.add_argument("--trials", type=_count(1), default=10_000)
    p.add_argument("--seed", type=_count(0), default=0)
    p.add_argument("--chebyshev-k", type=_positive)
    p.add_argument("--runs", type=_count(100), default=1000)
    p.set_defaults(func=cmd_sg_sim)
    return parser


def dispatch(argv=None) -> int:
    """Run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

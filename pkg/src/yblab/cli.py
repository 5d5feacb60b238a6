"""Command-line entry point: one JSON report per invocation.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 size-guard refusal.
"""
import argparse
import json
import math
import os
import sys

import numpy as np

from . import integrability, lattice, rmatrix, spin_chain, uq_sl2
from .errors import ConventionError, SizeGuardError, TensorFormatError
from .linalg import DEFAULT_TOL, permutation_tensor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


# -- deterministic JSON -----------------------------------------------------

def _dump(obj, out):
    if obj is None or isinstance(obj, bool):
        out.append({None: "null", True: "true", False: "false"}[obj])
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        out.append(format(x, ".17g") if math.isfinite(x) else "null")
    elif isinstance(obj, (complex, np.complexfloating)):
        _dump([obj.real, obj.imag], out)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            _dump(str(k), out)
            out.append(": ")
            _dump(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _dump(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj):
    """JSON text with every float written to 17 significant digits."""
    out = []
    _dump(obj, out)
    return "".join(out)


# -- helpers ----------------------------------------------------------------

def _default_tol():
    raw = os.environ.get("YBLAB_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise TensorFormatError(f"YBLAB_TOL is not a number: {raw!r}") from None
    if not tol > 0:
        raise TensorFormatError("YBLAB_TOL must be positive")
    return tol


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _complex_flag(p, name, default=0.0, help=None):
    p.add_argument(f"--{name}", f"--{name}-re", dest=f"{name}_re", type=float, default=default, help=help)
    p.add_argument(f"--{name}-im", dest=f"{name}_im", type=float, default=0.0)


def _cval(args, name):
    return complex(getattr(args, f"{name}_re"), getattr(args, f"{name}_im"))


def _check(value, lo=0.0, hi=None):
    ok = value is not None and math.isfinite(value) and value >= lo and (hi is None or value <= hi)
    return {"value": value, "min": lo, "max": hi, "pass": bool(ok)}


def _family_from_args(args):
    if getattr(args, "input", None):
        obj = rmatrix.load_json(args.input)
        if isinstance(obj, dict) and "family" in obj:
            return rmatrix.family_from_json(obj)
        return rmatrix.SpectralRFamily.constant(rmatrix.tensor_from_json(obj))
    name = args.family
    if name == "six-vertex":
        return rmatrix.SpectralRFamily.six_vertex(_cval(args, "alpha"))
    if name == "xxz-first-order":
        return rmatrix.SpectralRFamily.xxz_first_order(_cval(args, "J"))
    if name == "gauge-six-vertex":
        return rmatrix.SpectralRFamily.gauge_six_vertex(args.gamma)
    if name == "permutation":
        return rmatrix.SpectralRFamily.constant(permutation_tensor(2))
    raise TensorFormatError("either --family or --input is required")


def _family_args(p):
    p.add_argument("--family", choices=["six-vertex", "xxz-first-order", "gauge-six-vertex", "permutation"])
    p.add_argument("--input", help="tensor or family JSON file")
    _complex_flag(p, "alpha", 1.0)
    _complex_flag(p, "J", 1.0)
    p.add_argument("--gamma", type=float, default=0.6)


# -- subcommands ----------------------------------------------------------------

def cmd_ybe_check(args, tol):
    fam = _family_from_args(args)
    reports = [
        integrability.ybe_residual(fam, complex(l, args.lambda_im), complex(m, args.mu_im))
        for l in args.lam
        for m in args.mu
    ]
    worst = max(r.relative for r in reports)
    results = {
        "family": rmatrix.family_to_json(fam),
        "reports": [r.to_json() for r in reports],
        "checks": {"max_relative_residual": _check(worst, 0.0, tol)},
    }
    return results


def cmd_classify_star(args, tol):
    if args.input:
        obj = rmatrix.load_json(args.input)
        if isinstance(obj, dict) and "family" in obj:
            x = rmatrix.family_from_json(obj)(_cval(args, "point"))
            form = "R"
        else:
            x = rmatrix.tensor_from_json(obj)
            form = args.form
    else:
        x = _family_from_args(args)(_cval(args, "point"))
        form = "R"
    rep = integrability.classify_star(x, tol, form=form)
    return {
        "form": form,
        "star": rep.to_json(),
        "checks": {
            "verdict_residual": _check(min(rep.unitarity_residual, rep.hermiticity_residual), 0.0, tol)
        },
    }


def cmd_transfer(args, tol):
    fam = _family_from_args(args)
    r = fam(_cval(args, "u"))
    lat = lattice.LatticeSpec(args.sites, args.rows, r.shape[0])
    z_t = lattice.partition_transfer(r, lat)
    results = {"transfer": lattice.partition_report(z_t, lat, "transfer"), "checks": {}}
    if args.brute_force:
        z_b = lattice.partition_bruteforce(r, lat)
        results["bruteforce"] = lattice.partition_report(z_b, lat, "bruteforce")
        rel = abs(z_t - z_b) / max(abs(z_t), 1e-300)
        results["checks"]["relative_difference"] = _check(rel, 0.0, max(tol, 1e-9))
    return results


def cmd_trotter(args, tol):
    z = complex(args.z_re, args.z_im)
    order = spin_chain.trotter_order(args.J, z, args.sites, args.steps)
    results = order.to_json()
    if order.exact:
        results["checks"] = {"max_error": _check(max(order.errors), 0.0, 1e-12)}
    else:
        results["checks"] = {"slope_deviation": _check(abs(order.slope + 1.0), 0.0, args.order_tol)}
    return results


def cmd_xxz_match(args, tol):
    u = _cval(args, "u")
    rep = spin_chain.correspondence_report(args.J, u)
    rep["checks"] = {"halving_ratio": _check(rep["halving_ratio"], args.ratio_min, args.ratio_max)}
    return rep


def _rtt_conv(gamma, lam, mu, convention):
    if convention != "auto":
        return convention, None
    pairs = list(uq_sl2.DEFAULT_PAIRS)
    if lam != mu:
        pairs.append((lam, mu))
    winner, table = uq_sl2.convention_search(gamma, pairs)
    return winner, uq_sl2.convention_report(winner, table)


def cmd_rtt_check(args, tol):
    lam, mu = _cval(args, "lambda"), _cval(args, "mu")
    if args.convention not in ("auto", *uq_sl2.CONVENTIONS):
        raise TensorFormatError(f"unknown convention {args.convention!r}")
    try:
        conv, search = _rtt_conv(args.gamma, lam, mu, args.convention)
    except ConventionError as exc:
        return {
            "error": str(exc),
            "search": {"winner": None, "table": exc.table},
            "checks": {"convention_selected": {"value": None, "min": 0.0, "max": None, "pass": False}},
        }
    res = uq_sl2.rtt_l_residual(args.gamma, lam, mu, conv)
    out = {"convention": conv, "residual": res, "checks": {"rtt_residual": _check(res, 0.0, tol)}}
    if search is not None:
        out["search"] = search
    return out


def cmd_uqsl2_verify(args, tol):
    rep = uq_sl2.standard_rep(args.gamma)
    rel = uq_sl2.relations_residual(rep)
    star = uq_sl2.star_check(rep)
    checks = {
        "relations": _check(rel, 0.0, tol),
        "twisted_star": _check(star["twisted_residual"], 0.0, tol),
        "x_plus_hermiticity_is_one": _check(abs(star["hermiticity"]["x_plus"] - 1.0), 0.0, tol),
    }
    out = {"relations_residual": rel, "star": star}
    try:
        winner, table = uq_sl2.convention_search(args.gamma)
        out["conventions"] = uq_sl2.convention_report(winner, table)
        checks["rtt_winner"] = _check(max(table[winner]), 0.0, tol)
    except ConventionError as exc:
        out["conventions"] = {"winner": None, "table": exc.table, "error": str(exc)}
        checks["rtt_winner"] = {"value": None, "min": 0.0, "max": tol, "pass": False}
    out["checks"] = checks
    return out


COMMANDS = {
    "ybe-check": cmd_ybe_check,
    "classify-star": cmd_classify_star,
    "transfer": cmd_transfer,
    "trotter": cmd_trotter,
    "xxz-match": cmd_xxz_match,
    "rtt-check": cmd_rtt_check,
    "uqsl2-verify": cmd_uqsl2_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise TensorFormatError(f"usage error: {message}")


def build_parser():
    parser = _Parser(prog="yblab", description="Integrable lattice model verification reports.")
    parser.add_argument("--tol", type=float, default=None, help="residual tolerance (default $YBLAB_TOL or 1e-10)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ybe-check", help="Yang-Baxter residuals on a (lambda, mu) grid")
    _family_args(p)
    p.add_argument("--lambda", dest="lam", type=_float_list, default=[0.9])
    p.add_argument("--lambda-im", type=float, default=0.0)
    p.add_argument("--mu", type=_float_list, default=[0.4])
    p.add_argument("--mu-im", type=float, default=0.0)

    p = sub.add_parser("classify-star", help="Hopf / twisted star classification of a tensor")
    _family_args(p)
    p.add_argument("--form", choices=["B", "R"], default="B", help="form of a tensor given via --input")
    _complex_flag(p, "point", 0.0)

    p = sub.add_parser("transfer", help="partition function via transfer matrix")
    _family_args(p)
    _complex_flag(p, "u", 0.5)
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--brute-force", action="store_true")

    p = sub.add_parser("trotter", help="Trotter convergence order")
    p.add_argument("--J", type=float, default=1.0)
    p.add_argument("--z-re", type=float, default=0.5)
    p.add_argument("--z-im", type=float, default=0.0)
    p.add_argument("--sites", type=int, default=4)
    p.add_argument("--steps", type=_int_list, default=[8, 16, 32, 64])
    p.add_argument("--order-tol", type=float, default=0.2)

    p = sub.add_parser("xxz-match", help="XXZ bond vs six-vertex correspondence")
    p.add_argument("--J", type=float, default=2.0)
    _complex_flag(p, "u", 0.2)
    p.add_argument("--ratio-min", type=float, default=0.15)
    p.add_argument("--ratio-max", type=float, default=0.40)

    p = sub.add_parser("rtt-check", help="RTT relation for the U_q(sl2) L-operators")
    p.add_argument("--gamma", type=float, default=0.6)
    _complex_flag(p, "lambda", 0.9)
    _complex_flag(p, "mu", 0.4)
    p.add_argument("--convention", default="auto")

    p = sub.add_parser("uqsl2-verify", help="relations, stars and RTT of the 2d representation")
    p.add_argument("--gamma", type=float, default=0.6)
    return parser


def _inputs(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "tol")}


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        tol = args.tol if args.tol is not None else _default_tol()
        if not tol > 0:
            raise TensorFormatError("--tol must be positive")
        results = COMMANDS[args.command](args, tol)
    except SizeGuardError as exc:
        print(f"yblab: size guard: {exc}", file=stderr)
        return EXIT_GUARD
    except (TensorFormatError, ValueError, IndexError, OSError) as exc:
        print(f"yblab: {exc}", file=stderr)
        return EXIT_USAGE
    checks = results.get("checks", {})
    passed = all(c["pass"] for c in checks.values())
    report = {
        "command": args.command,
        "inputs": _inputs(args),
        "results": results,
        "pass": passed,
        "tol": tol,
    }
    stdout.write(dumps(report) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

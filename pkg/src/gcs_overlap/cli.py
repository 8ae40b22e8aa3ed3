"""Command-line front end.

Subcommands ``overlap``, ``verify``, ``sweep`` and ``threshold``. Every flag
may also be given in a JSON document passed with ``--config``; flags win.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error,
3 series non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import algebra as al
from .coords import omega_to_tau
from .errors import DomainError, NonConvergence, ProjectiveInfinity
from .overlap import SeriesConfig, overlap
from .semiclassics import Family, SweepPlan, run_sweep
from .verification import VerifyConfig, report_dict, run_verification
from .virasoro import VirasoroRep, threshold_line, virasoro_algebra

EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NONCONVERGENCE = 3

# config keys that mirror command-line flags
_KEYS = ("algebra", "rep", "tau", "tau_prime", "omega", "omega_prime", "tol", "max_terms",
         "truncation", "format", "out", "family", "params", "k", "c", "h", "h_prime_t", "c_range")


class UsageError(Exception):
    pass


def _number(text):
    return float(Fraction(text.strip())) if "/" in text else float(text)


def parse_pair(value):
    """``"re,im"`` string or ``[re, im]`` list to a pair of floats."""
    if isinstance(value, str):
        parts = value.split(",")
    else:
        parts = list(value)
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated numbers, got {value!r}")
    return tuple(_number(p) if isinstance(p, str) else float(p) for p in parts)


def parse_list(value):
    if isinstance(value, str):
        return [_number(p) for p in value.split(",") if p.strip()]
    return [float(v) for v in value]


def _kv(text):
    out = {}
    for token in text.replace(",", " ").split():
        if "=" not in token:
            raise UsageError(f"expected key=value in rep {text!r}, got {token!r}")
        key, val = token.split("=", 1)
        out[key.strip()] = Fraction(val.strip())
    return out


def resolve_spec(algebra, rep):
    """Turn ``--algebra``/``--rep`` values into (AlgebraSpec, RepSpec, compact).

    ``compact`` is True, False or None (no Omega chart known) and selects the
    Omega -> tau map.
    """
    if isinstance(algebra, str) and algebra.lstrip().startswith("{"):
        algebra = json.loads(algebra)
    if isinstance(rep, str) and rep.lstrip().startswith("{"):
        rep = json.loads(rep)
    if isinstance(algebra, dict):
        record = dict(algebra)
        if isinstance(rep, dict):
            record.update(rep)
        alg, rs = al.spec_from_record(record)
        compact = True if alg is al.SU2 else False if alg is al.SU11 else None
        return alg, rs, compact
    if algebra is None:
        raise UsageError("--algebra is required")
    name = algebra.lower()
    if name == "su2":
        kv = _kv(rep or "")
        if "j" not in kv:
            raise UsageError("su2 needs --rep j=<half-integer>")
        return al.SU2, al.spin(kv["j"]), True
    if name == "su11":
        text = (rep or "").strip().lower()
        if text in ("one-mode-even", "one-mode-odd"):
            return al.SU11, al.one_mode(text.rsplit("-", 1)[1]), False
        if text.startswith("two-mode"):
            kv = _kv(text[len("two-mode"):])
            return al.SU11, al.two_mode(int(kv["n0"])), False
        if text.startswith("hwv"):
            text = text[3:]
        kv = _kv(text)
        if "h'" in kv:
            return al.SU11, al.highest_weight(kv["h'"]), False
        if "k" in kv:
            return al.SU11, al.discrete_series(kv["k"]), False
        raise UsageError("su11 needs --rep k=<k>, 'two-mode n0=<n>', one-mode-even/odd or h'=<h'>")
    if name == "virasoro":
        kv = _kv(rep or "")
        if not {"k", "c", "h"} <= set(kv):
            raise UsageError("virasoro needs --rep 'k=<k> c=<c> h=<h>'")
        vrep = VirasoroRep(int(kv["k"]), float(kv["c"]), float(kv["h"]))
        return virasoro_algebra(vrep.k), vrep.rep, False
    raise UsageError(f"unknown algebra {algebra!r}")


def _format_row(values):
    return [repr(v) if isinstance(v, float) else str(v) for v in values]


def render(records, fmt, columns):
    """JSON (one object, or a list) or CSV with header and LF line endings."""
    if fmt == "json":
        payload = records[0] if len(records) == 1 and columns is None else records
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow(_format_row([rec[c] for c in columns]))
    return buf.getvalue()


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _series_cfg(opts):
    return SeriesConfig(tol=float(opts.get("tol") or 1e-12), max_terms=int(opts.get("max_terms") or 10_000))


def _point(opts, tau_key, omega_key, compact):
    if opts.get(tau_key) is not None:
        re, im = parse_pair(opts[tau_key])
        return complex(re, im)
    if opts.get(omega_key) is not None:
        if compact is None:
            raise UsageError("--omega needs a built-in algebra (su2, su11, virasoro)")
        rho, phi = parse_pair(opts[omega_key])
        return omega_to_tau(compact, rho * complex(math.cos(phi), math.sin(phi)))
    raise UsageError(f"--{tau_key.replace('_', '-')} or --{omega_key.replace('_', '-')} is required")


def cmd_overlap(opts):
    alg, rep, compact = resolve_spec(opts.get("algebra"), opts.get("rep"))
    tau = _point(opts, "tau", "omega", compact)
    tau_prime = _point(opts, "tau_prime", "omega_prime", compact)
    res = overlap(alg, rep, tau, tau_prime, _series_cfg(opts))
    rec = {
        "tau": [tau.real, tau.imag],
        "tau_prime": [tau_prime.real, tau_prime.imag],
        "value_re": res.value.real,
        "value_im": res.value.imag,
        "magnitude": res.magnitude,
        "terms_used": res.terms_used,
        "tail_estimate": res.tail_estimate,
    }
    fmt = opts.get("format") or "json"
    if fmt == "csv":
        flat = {"tau_re": tau.real, "tau_im": tau.imag,
                "tau_prime_re": tau_prime.real, "tau_prime_im": tau_prime.imag}
        flat.update({k: v for k, v in rec.items() if k not in ("tau", "tau_prime")})
        _emit(render([flat], "csv", list(flat)), opts.get("out"))
    else:
        _emit(render([rec], "json", None), opts.get("out"))
    return 0


def cmd_verify(opts):
    cfg = VerifyConfig(truncation=int(opts.get("truncation") or 300), series=_series_cfg(opts))
    checks = run_verification(cfg)
    report = report_dict(checks)
    if (opts.get("format") or "json") == "csv":
        cols = ["name", "max_error", "tolerance", "passed", "detail"]
        text = render(report["checks"], "csv", cols)
    else:
        text = render([report], "json", None)
    _emit(text, opts.get("out"))
    failed = [c for c in checks if not c.passed]
    if failed:
        print(f"verification failed: {failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return 0


def cmd_sweep(opts):
    params = parse_list(opts.get("params") or [])
    if not params:
        raise UsageError("sweep needs a non-empty --params list")
    family = Family(opts.get("family") or "Su2J")
    tau = complex(*parse_pair(opts.get("tau") or "0,0"))
    tau_prime = complex(*parse_pair(opts.get("tau_prime") or "1,0"))
    fixed = {key: float(opts[key]) for key in ("k", "c", "h") if opts.get(key) is not None}
    plan = SweepPlan(family, params, (tau, tau_prime), fixed=fixed)
    report = run_sweep(plan, _series_cfg(opts))
    rows = [{"parameter": p, "magnitude": m, "log_magnitude": math.log(m)}
            for p, m in zip(report.parameter_values, report.magnitudes)]
    fmt = opts.get("format") or "csv"
    _emit(render(rows, fmt, ["parameter", "magnitude", "log_magnitude"]), opts.get("out"))
    return 0


def cmd_threshold(opts):
    if opts.get("k") is None or opts.get("h_prime_t") is None:
        raise UsageError("threshold needs --k and --h-prime-t")
    k, hpt = int(float(opts["k"])), float(opts["h_prime_t"])
    start, stop, num = parse_list(opts.get("c_range") or "0,100,11")
    if num < 1:
        raise UsageError("--c-range needs num >= 1")
    rows = [{"c": float(c), "h_boundary": threshold_line(k, hpt, float(c))}
            for c in np.linspace(start, stop, int(num))]
    fmt = opts.get("format") or "csv"
    _emit(render(rows, fmt, ["c", "h_boundary"]), opts.get("out"))
    return 0


COMMANDS = {"overlap": cmd_overlap, "verify": cmd_verify, "sweep": cmd_sweep, "threshold": cmd_threshold}


def build_parser():
    parser = argparse.ArgumentParser(prog="gcs-overlap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON document with any of the flags below")
    common.add_argument("--algebra", help="su2, su11, virasoro, or a JSON structure-constant record")
    common.add_argument("--rep", help="e.g. 'j=1/2', 'k=1/2', 'two-mode n0=3', one-mode-even, \"h'=1.25\"")
    common.add_argument("--tau", help="complex point as 're,im'")
    common.add_argument("--tau-prime", dest="tau_prime")
    common.add_argument("--omega", help="displacement label in polar form 'rho,phi'")
    common.add_argument("--omega-prime", dest="omega_prime")
    common.add_argument("--tol", type=float)
    common.add_argument("--max-terms", dest="max_terms", type=int)
    common.add_argument("--truncation", type=int)
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--out", help="output path (default stdout)")
    sub.add_parser("overlap", parents=[common], help="normalized overlap of two coherent states")
    sub.add_parser("verify", parents=[common], help="run the cross-validation matrix")
    sw = sub.add_parser("sweep", parents=[common], help="overlap magnitude along a parameter sweep")
    sw.add_argument("--family", choices=[f.value for f in Family])
    sw.add_argument("--params", help="comma-separated increasing parameter values")
    for name in ("k", "c", "h"):
        sw.add_argument(f"--{name}", help=f"fixed Virasoro {name}")
    th = sub.add_parser("threshold", parents=[common], help="classicality threshold line h(c)")
    th.add_argument("--k")
    th.add_argument("--h-prime-t", dest="h_prime_t")
    th.add_argument("--c-range", dest="c_range", help="'start,stop,num'")
    for name, sp in sub.choices.items():
        sp.set_defaults(subparser=sp)
    return parser


def merge_options(args) -> dict:
    opts = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            opts.update(json.load(fh))
    for key in _KEYS:
        val = getattr(args, key, None)
        if val is not None:
            opts[key] = val
    return opts


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_DOMAIN
    sub = args.subparser
    try:
        opts = merge_options(args)
        return COMMANDS[args.command](opts)
    except UsageError as exc:
        sub.print_usage(sys.stderr)
        print(f"{sub.prog}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, ProjectiveInfinity) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NonConvergence as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

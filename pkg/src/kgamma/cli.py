"""Command-line interface: point evaluation, verification sweeps, crosschecks.

Exit codes: 0 success, 1 mathematical FAIL, 2 usage error, 3 domain error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time

from . import functions as fn
from . import harness, oracle
from .policy import AccuracyPolicy, DomainError

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

#: Environment variable overriding the default relative tolerance;
#: explicit --rel-tol flags take precedence.
REL_TOL_ENV = "KGAMMA_REL_TOL"

CSV_COLUMNS = (
    "theorem_id", "x", "k", "p_param", "m", "n", "l",
    "holder_p", "holder_q", "lhs", "rhs", "slack", "margin", "verdict",
)

_EVAL_FUNCTIONS = (
    "k_gamma", "pk_gamma", "k_polygamma", "k_zeta", "pk_zeta",
    "k_gamma_deriv", "pk_gamma_deriv",
    "oracle_k_gamma", "oracle_pk_gamma", "oracle_k_polygamma",
    "oracle_bose", "oracle_k_gamma_deriv",
)


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    # shortest round-trip representation: diff-able regression files
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _default_rel_tol() -> float:
    raw = os.environ.get(REL_TOL_ENV)
    if raw is None:
        return 1e-12
    try:
        value = float(raw)
    except ValueError as exc:
        raise UsageError(f"{REL_TOL_ENV} is not a number: {raw!r}") from exc
    if not value > 0:
        raise UsageError(f"{REL_TOL_ENV} must be positive, got {raw!r}")
    return value


def parse_grid_axis(text: str, integer: bool = False) -> tuple:
    """Parse a grid axis: either 'v1,v2,v3' or 'min:max:count[:log]'."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
            raise UsageError(f"bad range spec {text!r}; want min:max:count[:log]")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise UsageError(f"bad range spec {text!r}") from exc
        if count < 1 or hi < lo:
            raise UsageError(f"bad range spec {text!r}")
        if count == 1:
            values = [lo]
        elif len(parts) == 4:
            if lo <= 0:
                raise UsageError("log spacing requires positive endpoints")
            ratio = (hi / lo) ** (1.0 / (count - 1))
            values = [lo * ratio**i for i in range(count)]
        else:
            step = (hi - lo) / (count - 1)
            values = [lo + step * i for i in range(count)]
    else:
        try:
            values = [float(v) for v in text.split(",") if v.strip() != ""]
        except ValueError as exc:
            raise UsageError(f"bad list spec {text!r}") from exc
        if not values:
            raise UsageError(f"empty grid axis {text!r}")
    if integer:
        out = []
        for v in values:
            if abs(v - round(v)) > 1e-9:
                raise UsageError(f"axis requires integers, got {v}")
            out.append(int(round(v)))
        return tuple(out)
    return tuple(values)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgamma",
        description="Generalized gamma/polygamma/zeta functions and "
                    "inequality verification sweeps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("function", choices=_EVAL_FUNCTIONS)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--k", type=float)
    p_eval.add_argument("--p", type=float)
    p_eval.add_argument("--m", type=int)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--s", type=float, help="order for oracle_bose")
    p_eval.add_argument("--c", type=float, help="kernel scale for oracle_bose")
    p_eval.add_argument("--rel-tol", type=float, default=None)

    p_verify = sub.add_parser("verify", help="run an inequality sweep")
    p_verify.add_argument("--theorems", default=None,
                          help="comma list from " + ",".join(harness.THEOREM_IDS))
    p_verify.add_argument("--default-grid", action="store_true",
                          help="use the standard verification grid")
    p_verify.add_argument("--x", default=None)
    p_verify.add_argument("--k", default=None)
    p_verify.add_argument("--p-param", default=None)
    p_verify.add_argument("--m", default=None)
    p_verify.add_argument("--n", default=None)
    p_verify.add_argument("--l", default=None)
    p_verify.add_argument("--holder-p", default=None)
    p_verify.add_argument("--rel-tol", type=float, default=None)
    p_verify.add_argument("--slack-tol", type=float,
                          default=harness.DEFAULT_SLACK_TOL)
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument("--output", default=None)

    p_cross = sub.add_parser(
        "crosscheck", help="closed forms vs the quadrature oracle"
    )
    p_cross.add_argument("--x", default=None)
    p_cross.add_argument("--k", default=None)
    p_cross.add_argument("--p-param", default=None)
    p_cross.add_argument("--m", default=None)
    p_cross.add_argument("--n", default=None)
    p_cross.add_argument("--rel-tol", type=float, default=None)
    p_cross.add_argument("--threshold", type=float, default=1e-8)
    return parser


# --------------------------------------------------------------------------
# eval


def _require_args(args, names: list[str]) -> list[float]:
    values = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"function {args.function} requires --{name}")
        values.append(v)
    return values


def cmd_eval(args) -> int:
    policy = AccuracyPolicy(rel_tol=args.rel_tol or _default_rel_tol())
    oracle_policy = AccuracyPolicy(
        rel_tol=args.rel_tol or 1e-10, max_subdivisions=4000
    )
    name = args.function
    if name == "k_gamma":
        x, k = _require_args(args, ["x", "k"])
        print(_fmt(fn.k_gamma(fn.EvalPoint(x, k), policy)))
    elif name == "pk_gamma":
        x, k, p = _require_args(args, ["x", "k", "p"])
        print(_fmt(fn.pk_gamma(fn.EvalPoint(x, k, p), policy)))
    elif name == "k_polygamma":
        m, x, k = _require_args(args, ["m", "x", "k"])
        print(_fmt(fn.k_polygamma(int(m), fn.EvalPoint(x, k), policy)))
    elif name == "k_zeta":
        x, k = _require_args(args, ["x", "k"])
        print(_fmt(fn.k_zeta(x, k, policy)))
    elif name == "pk_zeta":
        x, k, p = _require_args(args, ["x", "k", "p"])
        print(_fmt(fn.pk_zeta(x, k, p, policy)))
    elif name == "k_gamma_deriv":
        n, x, k = _require_args(args, ["n", "x", "k"])
        print(_fmt(fn.k_gamma_deriv(int(n), fn.EvalPoint(x, k), policy)))
    elif name == "pk_gamma_deriv":
        n, x, k, p = _require_args(args, ["n", "x", "k", "p"])
        print(_fmt(fn.pk_gamma_deriv(int(n), fn.EvalPoint(x, k, p), policy)))
    else:
        result = _eval_oracle(name, args, oracle_policy)
        print(f"{_fmt(result.value)} error_estimate={_fmt(result.error_estimate)} "
              f"converged={result.converged}")
        if not result.converged:
            return EXIT_FAIL
    return EXIT_OK


def _eval_oracle(name, args, policy) -> oracle.QuadratureResult:
    if name == "oracle_k_gamma":
        x, k = _require_args(args, ["x", "k"])
        return oracle.integrate_k_gamma(fn.EvalPoint(x, k), policy)
    if name == "oracle_pk_gamma":
        x, k, p = _require_args(args, ["x", "k", "p"])
        return oracle.integrate_pk_gamma(fn.EvalPoint(x, k, p), policy)
    if name == "oracle_k_polygamma":
        m, x, k = _require_args(args, ["m", "x", "k"])
        return oracle.integrate_k_polygamma(int(m), fn.EvalPoint(x, k), policy)
    if name == "oracle_bose":
        s, k, c = _require_args(args, ["s", "k", "c"])
        return oracle.integrate_bose(s, k, c, policy)
    if name == "oracle_k_gamma_deriv":
        n, x, k = _require_args(args, ["n", "x", "k"])
        use_p = args.p is not None
        pt = fn.EvalPoint(x, k, args.p)
        return oracle.integrate_k_gamma_deriv(int(n), pt, use_p, policy)
    raise UsageError(f"unknown function {name!r}")


# --------------------------------------------------------------------------
# verify


def _grid_from_args(args) -> harness.GridSpec:
    base = harness.GridSpec()
    if getattr(args, "default_grid", False):
        return base
    kwargs = {}
    if args.x is not None:
        kwargs["xs"] = parse_grid_axis(args.x)
    if args.k is not None:
        kwargs["ks"] = parse_grid_axis(args.k)
    if args.p_param is not None:
        kwargs["p_params"] = parse_grid_axis(args.p_param)
    if args.m is not None:
        kwargs["ms"] = parse_grid_axis(args.m, integer=True)
    if args.n is not None:
        kwargs["ns"] = parse_grid_axis(args.n, integer=True)
    if getattr(args, "l", None) is not None:
        kwargs["ls"] = parse_grid_axis(args.l, integer=True)
    if getattr(args, "holder_p", None) is not None:
        kwargs["holder_ps"] = parse_grid_axis(args.holder_p)
    try:
        return harness.GridSpec(**{
            k: v for k, v in {**_grid_defaults(base), **kwargs}.items()
        })
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _grid_defaults(base: harness.GridSpec) -> dict:
    return {
        "xs": base.xs, "ks": base.ks, "p_params": base.p_params,
        "ms": base.ms, "ns": base.ns, "ls": base.ls,
        "holder_ps": base.holder_ps,
    }


def _check_row(check: harness.InequalityCheck) -> dict:
    inp = check.inputs
    return {
        "theorem_id": check.theorem_id,
        "x": inp.get("x"),
        "k": inp.get("k"),
        "p_param": inp.get("p_param"),
        "m": inp.get("m"),
        "n": inp.get("n"),
        "l": inp.get("l"),
        "holder_p": inp.get("holder_p"),
        "holder_q": inp.get("holder_q"),
        "lhs": check.lhs,
        "rhs": check.rhs,
        "slack": check.slack,
        "margin": check.numerical_margin,
        "verdict": check.verdict,
    }


def _run_metadata(args, grid: harness.GridSpec, rel_tol: float) -> dict:
    return {
        "artifact_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "rel_tol": rel_tol,
        "slack_tol": args.slack_tol,
        "grid": {
            "x": list(grid.xs), "k": list(grid.ks),
            "p_param": list(grid.p_params), "m": list(grid.ms),
            "n": list(grid.ns), "l": list(grid.ls),
            "holder_p": list(grid.holder_ps),
        },
    }


def _render_csv(checks, metadata) -> str:
    buf = io.StringIO()
    # timestamp lives only in this comment line; the body below is
    # byte-identical across runs with the same grid and tolerances
    buf.write(f"# kgamma verify {metadata['artifact_version']} "
              f"generated {metadata['timestamp']}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for check in checks:
        row = _check_row(check)
        writer.writerow([_fmt(row[col]) for col in CSV_COLUMNS])
    return buf.getvalue()


def _render_json(checks, metadata) -> str:
    # a single array: one run-metadata header object, then one object per record
    payload = [{"run_metadata": metadata}]
    for check in checks:
        payload.append(_check_row(check))
    return json.dumps(payload, indent=2) + "\n"


def cmd_verify(args) -> int:
    if args.theorems:
        theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
    elif args.default_grid:
        theorems = harness.THEOREM_IDS
    else:
        theorems = ()
    if not theorems:
        raise UsageError("no theorems selected; pass --theorems or --default-grid")
    unknown = set(theorems) - set(harness.THEOREM_IDS)
    if unknown:
        raise UsageError(f"unknown theorem ids: {sorted(unknown)}")

    grid = _grid_from_args(args)
    rel_tol = args.rel_tol or _default_rel_tol()
    policy = AccuracyPolicy(rel_tol=rel_tol)
    checks, summary = harness.scan_grid(grid, theorems, policy, args.slack_tol)

    metadata = _run_metadata(args, grid, rel_tol)
    text = (_render_csv if args.format == "csv" else _render_json)(checks, metadata)
    if args.output:
        try:
            with open(args.output, "w") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)

    any_fail = False
    for theorem_id in harness.THEOREM_IDS:
        entry = summary.per_theorem.get(theorem_id)
        if entry is None:
            continue
        print(
            f"{theorem_id}: {entry['count']} checks, {entry['PASS']} pass, "
            f"{entry['FAIL']} fail, {entry['DIRECTION_NEGATIVE']} direction-negative, "
            f"min slack {_fmt(entry['min_slack'])} at {entry['min_slack_at']}",
            file=sys.stderr,
        )
        if entry["FAIL"]:
            any_fail = True
    for message in summary.errors:
        print(f"evaluation error: {message}", file=sys.stderr)
    return EXIT_FAIL if any_fail else EXIT_OK


# --------------------------------------------------------------------------
# crosscheck


def crosscheck_families(grid: harness.GridSpec, oracle_policy, policy) -> dict:
    """Max relative discrepancy, closed form vs defining integral, per family."""
    worst: dict[str, float] = {}

    def note(family: str, closed: float, quad: oracle.QuadratureResult) -> None:
        rel = abs(quad.value - closed) / max(abs(closed), 1e-300)
        worst[family] = max(worst.get(family, 0.0), rel)

    for x in grid.xs:
        for k in grid.ks:
            pt = fn.EvalPoint(x, k)
            note("k_gamma", fn.k_gamma(pt, policy),
                 oracle.integrate_k_gamma(pt, oracle_policy))
            for m in grid.ms:
                if m > 4:
                    continue
                note("k_polygamma", abs(fn.k_polygamma(m, pt, policy)),
                     oracle.integrate_k_polygamma(m, pt, oracle_policy))
            for n in range(0, 5):
                note("k_gamma_deriv", fn.k_gamma_deriv(n, pt, policy),
                     oracle.integrate_k_gamma_deriv(n, pt, False, oracle_policy))
            for p in grid.p_params:
                ppt = fn.EvalPoint(x, k, p)
                note("pk_gamma", fn.pk_gamma(ppt, policy),
                     oracle.integrate_pk_gamma(ppt, oracle_policy))
                for n in range(0, 5):
                    note("pk_gamma_deriv", fn.pk_gamma_deriv(n, ppt, policy),
                         oracle.integrate_k_gamma_deriv(n, ppt, True, oracle_policy))

    for k in grid.ks:
        for m in grid.ms:
            if m > 4 or m + 1.0 <= k or m - k <= -1.0:
                continue
            closed = (fn.k_zeta(m + 1.0, k, policy)
                      * fn.k_gamma(fn.EvalPoint(m + 1.0, k), policy))
            note("bose_k_zeta", closed, oracle.integrate_bose(m, k, k, oracle_policy))
            for p in grid.p_params:
                closed_p = (fn.pk_zeta(m + 1.0, k, p, policy)
                            * fn.pk_gamma(fn.EvalPoint(m + 1.0, k, p), policy))
                note("bose_pk_zeta", closed_p,
                     oracle.integrate_bose(m, k, p, oracle_policy))
    return worst


def cmd_crosscheck(args) -> int:
    grid = _grid_from_args(args)
    rel_tol = args.rel_tol or _default_rel_tol()
    policy = AccuracyPolicy(rel_tol=rel_tol)
    oracle_policy = AccuracyPolicy(rel_tol=1e-10, max_subdivisions=4000)
    worst = crosscheck_families(grid, oracle_policy, policy)
    ok = True
    for family in sorted(worst):
        status = "ok" if worst[family] <= args.threshold else "EXCEEDS"
        print(f"{family:16s} max_rel_discrepancy={_fmt(worst[family])} {status}")
        ok = ok and worst[family] <= args.threshold
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_crosscheck(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

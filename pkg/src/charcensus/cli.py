"""Command-line front end.

Batch and non-interactive: every subcommand resolves its configuration,
runs one computation, and emits a machine-readable result.  JSON output
follows the versioned schema shipped in ``schemas/``; CSV encodes the
same values (big integers as decimal strings, reals as shortest
round-trip doubles).  Exit codes: 0 success, 1 numeric breakdown,
2 usage error, 3 guard refusal; errors go to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import secrets
import sys

from .asymptotics import (
    core_count_bound,
    full_table_bound,
    solve_saddle,
    strip_zero_bound,
)
from .logreal import LogReal
from .characters import (
    character_table,
    character_value,
    lower_bound_partial,
    zero_count,
)
from .counting import load_or_build, tcore_count, tcore_count_bruteforce
from .errors import GuardError, NumericError
from .partitions import parse_partition
from .sampling import estimate_zero_density

SCHEMA_VERSION = 1
DEFAULT_CACHE_DIR = "./.charcensus-cache"


class _Parser(argparse.ArgumentParser):
    """argparse with machine-readable usage errors on stderr."""

    def error(self, message):
        _write_error(2, "usage", message)
        raise SystemExit(2)


def _write_error(code: int, kind: str, message) -> None:
    json.dump({"error": {"code": code, "type": kind, "message": str(message)}},
              sys.stderr)
    sys.stderr.write("\n")


# ---------------------------------------------------------------------------
# command implementations: each returns the result payload dict

def _cmd_count_p(args):
    table = load_or_build("P", args.n, cache_dir=args.cache_dir)
    return {"kind": "count", "family": "p", "n": args.n, "t": None,
            "value": str(table.value(args.n))}


def _cmd_count_pt(args):
    table = load_or_build("P_BOUNDED", args.n, args.t, cache_dir=args.cache_dir)
    return {"kind": "count", "family": "pt", "n": args.n, "t": args.t,
            "value": str(table.value(args.n, t=args.t))}


def _cmd_count_core(args):
    if args.brute:
        value = tcore_count_bruteforce(args.t, args.n)
    else:
        value = tcore_count(args.t, args.n)
    return {"kind": "count", "family": "core", "n": args.n, "t": args.t,
            "brute": bool(args.brute), "value": str(value)}


def _cmd_char_eval(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    return {"kind": "char_value", "lambda": str(lam), "mu": str(mu),
            "chi": str(character_value(lam, mu))}


def _cmd_char_table(args):
    table = character_table(args.n, threads=args.threads)
    return {"kind": "char_table", "N": args.n, "dim": len(table.partitions),
            "partitions": [str(p) for p in table.partitions],
            "rows": [[str(v) for v in row] for row in table.rows]}


def _cmd_zeros_exact(args):
    census = zero_count(args.n, threads=args.threads)
    return {"kind": "census", **census.to_json_dict()}


def _cmd_zeros_lower_bound(args):
    t_lo = 1 if args.t_lo is None else args.t_lo
    t_hi = args.n if args.t_hi is None else args.t_hi
    value = lower_bound_partial(args.n, t_lo, t_hi)
    return {"kind": "lower_bound", "N": args.n, "t_lo": t_lo, "t_hi": t_hi,
            "value": str(value)}


def _cmd_bounds_t12(args):
    report = full_table_bound(args.n)
    return {"kind": "bound", **report.to_json_dict()}


def _cmd_bounds_t13(args):
    report = strip_zero_bound(args.n, args.t, args.epsilon)
    return {"kind": "bound", **report.to_json_dict()}


def _cmd_bounds_p32(args):
    report = core_count_bound(args.n, args.t, args.epsilon, regime=args.regime)
    return {"kind": "bound", **report.to_json_dict()}


def _cmd_bounds_saddle(args):
    sol = solve_saddle(args.n, args.t, tol=args.tol)
    return {"kind": "saddle", "N": sol.n, "t": sol.t, "y": sol.y,
            "bracket_lo": sol.bracket_lo, "bracket_hi": sol.bracket_hi,
            "residual": sol.residual, "ty_regime": sol.ty_regime}


def _cmd_estimate_density(args):
    est = estimate_zero_density(args.n, args.samples, args.seed,
                                threads=args.threads)
    return {"kind": "density", **est.to_json_dict()}


def _cmd_sweep(args):
    rows = []
    for n in args.n_list:
        census = zero_count(n, threads=args.threads)
        lb = lower_bound_partial(n, 1, n)
        z = census.total_zeros
        p_n = census.table_dim
        if n >= 2:  # the 2 p(n)^2 / log n bound is undefined at n = 1
            report = full_table_bound(n)
            log_t12, p_source = report.bound.log, report.p_source
            ratio = None if z == 0 else \
                report.with_comparison(LogReal.from_value(z)).ratio
        else:
            log_t12 = p_source = ratio = None
        rows.append({
            "N": n,
            "p_N": str(p_n),
            "Z": str(z),
            "lower_bound": str(lb),
            "lower_bound_over_Z": None if z == 0 else lb / z,
            "z_ratio_to_t12": ratio,
            "log_t12_bound": log_t12,
            "p_source": p_source,
        })
    return {"kind": "sweep", "rows": rows}


# ---------------------------------------------------------------------------
# output formatting

def _flatten(prefix: str, value, out: dict) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    else:
        out[prefix] = value


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _result_to_csv(result: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if result["kind"] == "char_table":
        writer.writerow(["lambda"] + result["partitions"])
        for lam, row in zip(result["partitions"], result["rows"]):
            writer.writerow([lam] + row)
    elif result["kind"] == "sweep":
        header = ["N", "p_N", "Z", "lower_bound", "lower_bound_over_Z",
                  "z_ratio_to_t12", "log_t12_bound", "p_source"]
        writer.writerow(header)
        for row in result["rows"]:
            writer.writerow([_cell(row[k]) for k in header])
    else:
        flat: dict = {}
        _flatten("", {k: v for k, v in result.items() if k != "kind"}, flat)
        writer.writerow(list(flat))
        writer.writerow([_cell(v) for v in flat.values()])
    return buf.getvalue()


def _result_to_human(config: dict, result: dict) -> str:
    lines = [f"# {k} = {_cell(v)}" for k, v in sorted(config.items())]
    flat: dict = {}
    _flatten("", {k: v for k, v in result.items() if k != "kind"}, flat)
    if result["kind"] == "char_table":
        lines.append(f"character table of S_{result['N']}: "
                     f"{result['dim']} x {result['dim']}")
        lines.append(_result_to_csv(result).rstrip("\n"))
    elif result["kind"] == "sweep":
        lines.append(_result_to_csv(result).rstrip("\n"))
    else:
        width = max(len(k) for k in flat)
        lines.extend(f"{k.ljust(width)}  {_cell(v)}" for k, v in flat.items())
    return "\n".join(lines) + "\n"


def _emit(args, command: str, result: dict) -> None:
    config = {k: v for k, v in vars(args).items()
              if k not in ("func", "command_name") and not k.startswith("_")}
    config["command"] = command
    if args.format == "json":
        envelope = {"schema_version": SCHEMA_VERSION, "command": command,
                    "config": config, "result": result}
        text = json.dumps(envelope, indent=2) + "\n"
    elif args.format == "csv":
        # data stays RFC-4180 clean; the resolved config goes to stderr
        json.dump({"config": config}, sys.stderr)
        sys.stderr.write("\n")
        text = _result_to_csv(result)
    else:
        text = _result_to_human(config, result)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# parser

def _int_list(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if "-" in tok[1:]:
            a, b = tok.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(tok))
    if not out:
        raise ValueError("empty n-list")
    return out


def _add_common(sp: argparse.ArgumentParser, default_format: str = "human") -> None:
    # fresh actions per subparser: a shared parent would alias the
    # defaults across commands
    sp.add_argument("--format", choices=("json", "csv", "human"),
                    default=default_format,
                    help=f"output format (default {default_format})")
    sp.add_argument("--cache-dir", default=None,
                    help=f"count-table cache directory (default "
                         f"{DEFAULT_CACHE_DIR}; env CHARCENSUS_CACHE wins)")
    sp.add_argument("--out", default=None, help="write output to a file")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker threads; results are identical for any count")


def build_parser() -> _Parser:
    parser = _Parser(prog="charcensus",
                     description="Exact character-table zero censuses and "
                                 "their asymptotic bounds.")
    top = parser.add_subparsers(dest="command_name", required=True)

    count = top.add_parser("count", help="exact count families").add_subparsers(
        dest="sub", required=True)
    p = count.add_parser("p", help="partition count p(n)")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_count_p, command="count.p")
    pt = count.add_parser("pt", help="bounded partition count p_t(n)")
    _add_common(pt)
    pt.add_argument("--t", type=int, required=True)
    pt.add_argument("--n", type=int, required=True)
    pt.set_defaults(func=_cmd_count_pt, command="count.pt")
    core = count.add_parser("core", help="t-core count c_t(n)")
    _add_common(core)
    core.add_argument("--t", type=int, required=True)
    core.add_argument("--n", type=int, required=True)
    core.add_argument("--brute", action="store_true",
                      help="use the enumeration oracle instead of the series")
    core.set_defaults(func=_cmd_count_core, command="count.core")

    char = top.add_parser("char", help="character values and tables").add_subparsers(
        dest="sub", required=True)
    ev = char.add_parser("eval", help="one character value")
    _add_common(ev)
    ev.add_argument("--lambda", dest="lam", required=True,
                    help='row partition, e.g. "[4,2,1]"')
    ev.add_argument("--mu", dest="mu", required=True,
                    help='cycle type, e.g. "[5,2]"')
    ev.set_defaults(func=_cmd_char_eval, command="char.eval")
    tab = char.add_parser("table", help="full table of S_n")
    _add_common(tab, default_format="csv")
    tab.add_argument("--n", type=int, required=True)
    tab.set_defaults(func=_cmd_char_table, command="char.table")

    zeros = top.add_parser("zeros", help="exact zero censuses").add_subparsers(
        dest="sub", required=True)
    ze = zeros.add_parser("exact", help="full zero census")
    _add_common(ze)
    ze.add_argument("--n", type=int, required=True)
    ze.set_defaults(func=_cmd_zeros_exact, command="zeros.exact")
    zl = zeros.add_parser("lower-bound",
                          help="guaranteed-zero sum, optionally over a t range")
    _add_common(zl)
    zl.add_argument("--n", type=int, required=True)
    zl.add_argument("--t-lo", type=int, default=None)
    zl.add_argument("--t-hi", type=int, default=None)
    zl.set_defaults(func=_cmd_zeros_lower_bound, command="zeros.lower-bound")

    bounds = top.add_parser("bounds", help="asymptotic bound evaluators"
                            ).add_subparsers(dest="sub", required=True)
    t12 = bounds.add_parser("t12", help="full-table zero bound 2 p(n)^2 / log n")
    _add_common(t12)
    t12.add_argument("--n", type=int, required=True)
    t12.set_defaults(func=_cmd_bounds_t12, command="bounds.t12")
    t13 = bounds.add_parser("t13", help="t-core strip zero bound")
    _add_common(t13)
    t13.add_argument("--n", type=int, required=True)
    t13.add_argument("--t", type=int, required=True)
    t13.add_argument("--epsilon", type=float, default=0.5)
    t13.set_defaults(func=_cmd_bounds_t13, command="bounds.t13")
    p32 = bounds.add_parser("p32", help="core-count bound in its four regimes")
    _add_common(p32)
    p32.add_argument("--n", type=int, required=True)
    p32.add_argument("--t", type=int, required=True)
    p32.add_argument("--epsilon", type=float, default=0.5)
    p32.add_argument("--regime", choices=("P32_I", "P32_II", "P32_III", "P32_IV"),
                     default=None, help="force a regime instead of auto-selecting")
    p32.set_defaults(func=_cmd_bounds_p32, command="bounds.p32")
    sad = bounds.add_parser("saddle",
                            help="saddle ordinate for the core-count estimate")
    _add_common(sad)
    sad.add_argument("--n", type=int, required=True)
    sad.add_argument("--t", type=int, required=True)
    sad.add_argument("--tol", type=float, default=1e-9,
                     help="relative residual tolerance")
    sad.set_defaults(func=_cmd_bounds_saddle, command="bounds.saddle")

    est = top.add_parser("estimate", help="Monte Carlo probes").add_subparsers(
        dest="sub", required=True)
    den = est.add_parser("density", help="zero density over uniform pairs")
    _add_common(den)
    den.add_argument("--n", type=int, required=True)
    den.add_argument("--samples", type=int, required=True)
    den.add_argument("--seed", type=int, default=None,
                     help="64-bit seed; generated and reported when absent")
    den.set_defaults(func=_cmd_estimate_density, command="estimate.density")

    sw = top.add_parser("sweep",
                        help="census vs bound comparison table over many n")
    _add_common(sw, default_format="csv")
    sw.add_argument("--n-list", type=_int_list, required=True,
                    help='comma list with ranges, e.g. "3-14" or "4,6,8"')
    sw.set_defaults(func=_cmd_sweep, command="sweep")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    if args.cache_dir is None:
        args.cache_dir = os.environ.get("CHARCENSUS_CACHE") or DEFAULT_CACHE_DIR
    elif os.environ.get("CHARCENSUS_CACHE"):
        args.cache_dir = os.environ["CHARCENSUS_CACHE"]
    if getattr(args, "seed", "absent") is None:
        args.seed = secrets.randbits(63)
    try:
        result = args.func(args)
    except GuardError as exc:
        _write_error(3, "guard", exc)
        return 3
    except NumericError as exc:
        _write_error(1, "numeric", exc)
        return 1
    except ValueError as exc:
        _write_error(2, "usage", exc)
        return 2
    _emit(args, args.command, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: compute, table, series, verify, list-identities.

Exit codes: 0 success (all verifications pass), 1 verification failure,
2 usage error.  Every number printed is an exact decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import identities, mexcount, partitions, statistics, tables
from .partitions import CapacityError
from .series import (
    ResidueCondition,
    TruncatedSeries,
    alternating_theta,
    euler_product,
    jtp_specialized,
    residue_product,
)
from .statistics import MexParams

DEFAULT_PRECISION_CAP = 2000
PRECISION_CAP_ENV = "MEXSTAT_MAX_PRECISION"


def _precision_cap() -> int:
    raw = os.environ.get(PRECISION_CAP_ENV)
    if raw is None:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{PRECISION_CAP_ENV} must be an integer, got {raw!r}")
    if cap < 0:
        raise ValueError(f"{PRECISION_CAP_ENV} must be non-negative")
    return cap


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}; expected comma-separated integers")
    return partitions.as_partition(parts)


def _parse_int_list(text: str, label: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse {label} {text!r}; expected comma-separated integers")


def _require(args: argparse.Namespace, names: list[str], kind: str) -> None:
    missing = [n for n in names if getattr(args, n.lstrip("-").replace("-", "_"), None) is None]
    if missing:
        raise ValueError(f"'{kind}' requires {', '.join('--' + m for m in missing)}")


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _compute_value(args: argparse.Namespace) -> tuple[str, str, str]:
    """Returns (label, value string, method string) for the requested quantity."""
    kind = args.kind
    if kind in ("p_aa", "pbar_aa"):
        _require(args, ["A", "a", "n"], kind)
        params = MexParams(args.A, args.a)
        method = args.method or ("enum" if args.n <= partitions.ENUMERATION_CAP else "series")
        barred = kind == "pbar_aa"
        if method == "enum":
            value = (mexcount.pbar_mex_enum if barred else mexcount.p_mex_enum)(params, args.n)
            method_name = "enumeration"
        elif method == "series":
            if args.n < 0:
                raise ValueError("n must be non-negative for the series method")
            row = (mexcount.pbar_mex_series if barred else mexcount.p_mex_series)(params, args.n)
            value = row[args.n]
            method_name = "series"
        elif method == "recurrence":
            value = (mexcount.pbar_mex_recurrence if barred else mexcount.p_mex_recurrence)(
                params, args.n
            )
            method_name = "recurrence"
        else:
            raise ValueError(f"unknown method {method!r}")
        name = "pbar" if barred else "p"
        return f"{name}_{{{args.A},{args.a}}}({args.n})", str(value), method_name
    if kind == "p":
        _require(args, ["n"], kind)
        return f"p({args.n})", str(partitions.p_count(args.n)), "pentagonal recurrence"
    if kind == "spt":
        _require(args, ["n"], kind)
        return f"spt({args.n})", str(statistics.spt_direct(args.n)), "enumeration"
    if kind in ("rank", "crank"):
        _require(args, ["partition"], kind)
        fn = statistics.rank if kind == "rank" else statistics.crank
        return f"{kind}({tables.format_partition(args.partition)})", str(fn(args.partition)), "direct"
    if kind == "mex":
        _require(args, ["partition", "A", "a"], kind)
        value = statistics.mex(args.partition, MexParams(args.A, args.a))
        return (
            f"mex_{{{args.A},{args.a}}}({tables.format_partition(args.partition)})",
            str(value),
            "direct",
        )
    if kind in ("N", "M"):
        _require(args, ["m", "n"], kind)
        method = args.method or "combinatorial"
        if method not in ("combinatorial", "series"):
            raise ValueError(f"method for {kind} must be 'combinatorial' or 'series'")
        fn = statistics.rank_count if kind == "N" else statistics.crank_count
        return f"{kind}({args.m},{args.n})", str(fn(args.m, args.n, method)), method
    if kind == "moment":
        _require(args, ["stat", "k", "n"], kind)
        if args.stat == "rank":
            value = statistics.rank_moment(args.k, args.n)
            method_name = "enumerated distribution"
        elif args.stat == "crank":
            value = statistics.crank_moment(args.k, args.n)
            method_name = "series distribution"
        else:
            raise ValueError("--stat must be 'rank' or 'crank'")
        return f"{args.stat}_moment_{args.k}({args.n})", str(value), method_name
    if kind == "goe":
        _require(args, ["n"], kind)
        return f"goe({args.n})", str(statistics.goe_count(args.n)), "enumeration"
    raise ValueError(f"unknown compute kind {kind!r}")


def cmd_compute(args: argparse.Namespace) -> int:
    label, value, method = _compute_value(args)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "label": label, "value": value, "method": method}))
    elif args.format == "csv":
        _print_csv([["kind", "label", "value", "method"], [args.kind, label, value, method]])
    else:
        print(f"{label} = {value}")
        print(f"method: {method}")
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    if args.format == "csv":
        sys.stdout.write(tables.render_csv(args.table_id))
    elif args.format == "json":
        fields, rows = tables.table_fields_and_rows(args.table_id)
        print(json.dumps({"table": args.table_id, "fields": fields, "rows": rows}, indent=2))
    else:
        sys.stdout.write(tables.render_text(args.table_id))
    return 0


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _build_series(args: argparse.Namespace) -> tuple[str, TruncatedSeries]:
    precision = args.precision
    cap = _precision_cap()
    if precision > cap:
        raise ValueError(f"precision {precision} exceeds the cap {cap} (set {PRECISION_CAP_ENV})")
    if precision < 0:
        raise ValueError("precision must be non-negative")
    expr = args.expr
    if expr == "euler":
        return "euler", euler_product(precision)
    if expr in ("F", "Fbar"):
        _require(args, ["A", "a"], expr)
        params = MexParams(args.A, args.a)
        row = (
            mexcount.pbar_mex_series(params, precision)
            if expr == "Fbar"
            else mexcount.p_mex_series(params, precision)
        )
        return f"{expr}_{{{args.A},{args.a}}}", TruncatedSeries(row)
    if expr == "residue-product":
        _require(args, ["modulus", "residues"], expr)
        cond = ResidueCondition(
            args.modulus,
            frozenset(_parse_int_list(args.residues, "residues")),
            sign=args.sign,
            mode=args.mode,
        )
        return "residue-product", residue_product(cond, precision)
    if expr == "theta":
        _require(args, ["quadratic"], expr)
        coeffs = _parse_int_list(args.quadratic, "quadratic")
        if len(coeffs) != 3:
            raise ValueError("--quadratic needs exactly three integers P,Q,R")
        p2, p1, p0 = coeffs

        def exponent(n: int) -> int:
            num = p2 * n * n + p1 * n + p0
            if num % 2:
                raise ValueError(f"(P*n^2+Q*n+R)/2 is not an integer at n={n}")
            return num // 2

        return "theta", alternating_theta(exponent, args.n_start, precision)
    if expr == "jtp":
        _require(args, ["k", "i"], expr)
        return (
            f"jtp({args.k},{args.i},{args.parity},{args.side})",
            jtp_specialized(args.k, args.i, args.parity, args.side, precision),
        )
    raise ValueError(f"unknown series expression {expr!r}")


def cmd_series(args: argparse.Namespace) -> int:
    label, series = _build_series(args)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "expr": label,
                    "precision": series.precision,
                    "coefficients": series.to_decimal_strings(),
                }
            )
        )
    elif args.format == "csv":
        rows = [["exponent", "coefficient"]]
        rows += [[str(e), str(c)] for e, c in enumerate(series.coeffs)]
        _print_csv(rows)
    else:
        for e, c in enumerate(series.coeffs):
            print(f"q^{e}: {c}")
    return 0


# ---------------------------------------------------------------------------
# verify / list-identities
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    n_series = args.max_n_series if args.max_n_series is not None else args.max_n
    if args.check_id == "all":
        reports = identities.verify_all(args.max_n, n_series)
    else:
        reports = [identities.verify(args.check_id, args.max_n)]

    if args.format == "json":
        print(identities.reports_to_json(reports))
    elif args.format == "csv":
        _print_csv([identities.CSV_HEADER] + [r.csv_row() for r in reports])
    else:
        for r in reports:
            print(f"{r.status:4s}  {r.check_id:18s}  n={r.n_from}..{r.n_to}  ({r.elapsed_ms:.1f} ms)")
            for n, lhs, rhs in r.failures:
                print(f"      n={n}: lhs={lhs} rhs={rhs}")
    return 0 if all(r.status == "pass" for r in reports) else 1


def cmd_list_identities(args: argparse.Namespace) -> int:
    catalog = identities.list_identities()
    if args.format == "json":
        print(json.dumps(catalog, indent=2))
    elif args.format == "csv":
        rows = [["id", "valid_from", "requires_enumeration", "description"]]
        rows += [
            [
                str(c["id"]),
                str(c["valid_from"]),
                str(c["requires_enumeration"]).lower(),
                str(c["description"]),
            ]
            for c in catalog
        ]
        _print_csv(rows)
    else:
        for c in catalog:
            print(f"{c['id']:18s}  n>={c['valid_from']}  {c['description']}")
    return 0


def _print_csv(rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mexstat",
        description="Exact computations and identity checks for mex-classified partition counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p_compute = sub.add_parser("compute", help="compute a single quantity")
    p_compute.add_argument(
        "kind",
        choices=["p_aa", "pbar_aa", "p", "spt", "rank", "crank", "mex", "N", "M", "moment", "goe"],
    )
    p_compute.add_argument("--A", type=int)
    p_compute.add_argument("--a", type=int)
    p_compute.add_argument("--n", type=int)
    p_compute.add_argument("--m", type=int)
    p_compute.add_argument("--k", type=int)
    p_compute.add_argument("--stat", choices=["rank", "crank"])
    p_compute.add_argument(
        "--method",
        help="p_aa/pbar_aa: enum|series|recurrence; N/M: combinatorial|series",
    )
    p_compute.add_argument("--partition", type=_parse_partition)
    add_format(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="regenerate a reference table")
    p_table.add_argument("table_id", type=int, choices=[1, 2, 3])
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_series = sub.add_parser("series", help="expand a generating series")
    p_series.add_argument(
        "expr", choices=["euler", "F", "Fbar", "residue-product", "theta", "jtp"]
    )
    p_series.add_argument("--precision", type=int, default=20)
    p_series.add_argument("--A", type=int)
    p_series.add_argument("--a", type=int)
    p_series.add_argument("--modulus", type=int)
    p_series.add_argument("--residues", help="comma-separated residues, e.g. 2,8,12")
    p_series.add_argument("--sign", choices=["minus", "plus"], default="minus")
    p_series.add_argument("--mode", choices=["include", "exclude"], default="include")
    p_series.add_argument("--quadratic", help="P,Q,R for exponent (P*n^2+Q*n+R)/2")
    p_series.add_argument("--n-start", type=int, default=0)
    p_series.add_argument("--k", type=int)
    p_series.add_argument("--i", type=int)
    p_series.add_argument("--parity", choices=["even", "odd"], default="odd")
    p_series.add_argument("--side", choices=["sum", "product"], default="sum")
    add_format(p_series)
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="verify one identity or all of them")
    p_verify.add_argument("check_id", metavar="id", help="identity id or 'all'")
    p_verify.add_argument("--max-n", type=int, default=50)
    p_verify.add_argument(
        "--max-n-series",
        type=int,
        default=None,
        help="separate bound for series-only checks (verify all)",
    )
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_list = sub.add_parser("list-identities", help="list the identity catalog")
    add_format(p_list)
    p_list.set_defaults(func=cmd_list_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CapacityError, ValueError) as exc:
        print(f"mexstat: error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

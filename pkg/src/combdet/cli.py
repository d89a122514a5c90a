"""Command-line front end.

Exit codes: 0 success, 1 bad arguments or violated constraints, 2 crosscheck divergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import List, Optional

from .crosscheck import (
    LIMITS,
    METHODS,
    CapExceeded,
    all_families,
    bench,
    compute_one,
    crosscheck_family,
    random_profile_trials,
)
from .families import FAMILY_TAGS, FamilyError, FamilyId, parse_family
from .genfubini import label
from .hessenberg import char_poly, family_profile, toeplitz_hessenberg
from .power_series import family_egf
from .records import dumps, encode_value, format_plain, output_record


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _family_args(p: argparse.ArgumentParser, allow_all: bool = False) -> None:
    choices = list(FAMILY_TAGS) + (["all"] if allow_all else [])
    p.add_argument("--family", required=True, choices=choices)
    p.add_argument("--m", type=int, default=None, help="block-size bound for restricted/associated families")
    p.add_argument("--k", type=int, default=None, help="power for gen_fubini")


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.add_argument("--out", default=None, help="write to FILE instead of stdout")
    p.add_argument("--force", action="store_true", help="override per-method caps")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="combdet", description="Exact Fubini, Bernoulli, Cauchy and Euler-type numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="one number by one method")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", default="determinant", choices=sorted(METHODS))
    _output_args(p)

    p = sub.add_parser("series", help="truncated generating-function coefficients")
    _family_args(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--n", type=int, default=None, help="alias for --order")
    _output_args(p)

    p = sub.add_parser("charpoly", help="characteristic polynomial det(T_n - xI) of a family's matrix")
    p.add_argument("--family", default="fubini", choices=list(FAMILY_TAGS))
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    _output_args(p)

    p = sub.add_parser("crosscheck", help="compare all methods exactly")
    _family_args(p, allow_all=True)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--methods", default=None, help="comma-separated subset of methods")
    p.add_argument("--seed", type=int, default=0, help="seed for the random-profile trials of --family all")
    _output_args(p)

    p = sub.add_parser("bench", help="time methods at one n")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--methods", default="recurrence,determinant")
    p.add_argument("--repeat", type=int, default=1)
    _output_args(p)
    return parser


def _split(methods: Optional[str]) -> Optional[List[str]]:
    if methods is None:
        return None
    return [m.strip() for m in methods.split(",") if m.strip()]


def _csv(rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _params_text(family: FamilyId) -> str:
    return ";".join(f"{k}={v}" for k, v in family.params().items())


def _records_text(records: List[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(dumps(r) + "\n" for r in records)
    if fmt == "csv":
        rows = [["family", "params", "n", "method", "value"]]
        for r in records:
            params = ";".join(f"{k}={v}" for k, v in r.get("params", {}).items())
            v = r["value"]
            value = v["int"] if "int" in v else f"{v['num']}/{v['den']}"
            rows.append([r["family"], params, str(r["n"]), r["method"], value])
        return _csv(rows)
    raise AssertionError(fmt)


def cmd_compute(args) -> tuple:
    family = parse_family(args.family, args.m, args.k)
    value = compute_one(family, args.n, args.method, force=args.force)
    extra = {"label": label(family.param, args.n)} if family.tag == "gen_fubini" else None
    rec = output_record(family, args.n, args.method, value, extra)
    if args.format == "plain":
        return format_plain(value) + "\n", 0
    return _records_text([rec], args.format), 0


def cmd_series(args) -> tuple:
    family = parse_family(args.family, args.m, args.k)
    order = args.order if args.order is not None else args.n
    if order is None:
        raise UsageError("series needs --order")
    if order < 0:
        raise UsageError("--order must be >= 0")
    if not args.force and order > LIMITS["egf"]:
        raise CapExceeded(f"series order is capped at {LIMITS['egf']} (use --force)")
    coeffs = family_egf(family, order).coeffs
    if args.format == "plain":
        return ", ".join(format_plain(c) for c in coeffs) + "\n", 0
    records = []
    for j, c in enumerate(coeffs):
        extra = {"label": label(family.param, j)} if family.tag == "gen_fubini" else None
        records.append(output_record(family, j, "series", c, extra))
    return _records_text(records, args.format), 0


def cmd_charpoly(args) -> tuple:
    family = parse_family(args.family, args.m, args.k)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if not args.force and args.n > LIMITS["minors"]:
        raise CapExceeded(f"charpoly is capped at n <= {LIMITS['minors']} (use --force)")
    coeffs = char_poly(toeplitz_hessenberg(family_profile(family), args.n))
    degrees = range(args.n, -1, -1)
    if args.format == "plain":
        lines = [f"x^{d}: {format_plain(c)}" for d, c in zip(degrees, coeffs)]
        return "\n".join(lines) + "\n", 0
    if args.format == "json":
        rec = {"family": family.tag}
        if family.params():
            rec["params"] = family.params()
        rec.update(
            {
                "n": args.n,
                "method": "char_poly",
                "convention": "det(T_n - xI)",
                "coefficients": [{"degree": d, "value": encode_value(c)} for d, c in zip(degrees, coeffs)],
            }
        )
        return dumps(rec) + "\n", 0
    rows = [["family", "params", "n", "degree", "value"]]
    rows += [[family.tag, _params_text(family), str(args.n), str(d), format_plain(c)] for d, c in zip(degrees, coeffs)]
    return _csv(rows), 0


def cmd_crosscheck(args) -> tuple:
    methods = _split(args.methods)
    if args.family == "all":
        families = all_families()
        trial_failures = random_profile_trials(args.seed)
    else:
        families = [parse_family(args.family, args.m, args.k)]
        trial_failures = []
    reports = []
    for f in families:
        chosen = methods
        if methods is not None and args.family == "all":
            chosen = [m for m in methods if m in METHODS and METHODS[m][0](f)]
            if not chosen:
                continue
        reports.append(crosscheck_family(f, args.n_max, chosen, force=args.force))
    ok = all(r.ok for r in reports) and not trial_failures
    if args.format == "json":
        text = dumps({"verdict": "pass" if ok else "fail", "random_profile_failures": trial_failures,
                      "reports": [r.to_dict() for r in reports]}) + "\n"
    elif args.format == "csv":
        rows = [["family", "params", "n", "method", "value", "verdict"]]
        for r in reports:
            for row in r.rows:
                for m in sorted(row.values):
                    rows.append([r.family.tag, _params_text(r.family), str(row.n), m,
                                 format_plain(row.values[m]), "pass" if row.ok else "fail"])
        text = _csv(rows)
    else:
        parts = [r.to_table() for r in reports]
        if args.family == "all":
            parts.append(f"random profiles (seed {args.seed}): {len(trial_failures)} mismatches")
        parts.append("PASS" if ok else "FAIL")
        text = "\n\n".join(parts) + "\n"
    return text, 0 if ok else 2


def cmd_bench(args) -> tuple:
    family = parse_family(args.family, args.m, args.k)
    methods = _split(args.methods) or []
    rows = bench(family, args.n, methods, repeat=args.repeat, force=args.force)
    digits = len(str(abs(Fraction(rows[0].value).numerator))) if rows else 0
    if args.format == "json":
        recs = [dict(output_record(family, args.n, r.method, r.value), seconds=round(r.seconds, 6)) for r in rows]
        return "".join(dumps(x) + "\n" for x in recs), 0
    if args.format == "csv":
        out = [["family", "params", "n", "method", "seconds"]]
        out += [[family.tag, _params_text(family), str(args.n), r.method, f"{r.seconds:.6f}"] for r in rows]
        return _csv(out), 0
    width = max(len(r.method) for r in rows) if rows else 0
    lines = [f"# {family} n={args.n}: all methods agree ({digits} digits in numerator)"]
    lines += [f"{r.method.ljust(width)}  {r.seconds:.6f} s" for r in rows]
    return "\n".join(lines) + "\n", 0


COMMANDS = {
    "compute": cmd_compute,
    "series": cmd_series,
    "charpoly": cmd_charpoly,
    "crosscheck": cmd_crosscheck,
    "bench": cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (FamilyError, CapExceeded, UsageError, ValueError) as exc:
        print(f"combdet: error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"combdet: divergence: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

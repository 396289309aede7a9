"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 a check failed (would falsify a
theorem), 3 I/O error, 4 no certificate applies.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import isqrt

from . import figures
from .arith import squarefree_decompose
from .combinatorics import catalan, narayana
from .pell import (
    PellInstance,
    fundamental_solution,
    representatives,
    solutions_even_m,
)
from .powers import (
    PowerCertificate,
    ProofStepFailed,
    catalan_not_power,
    catalan_witness,
    certify,
    conjecture_scan,
    figure2_data,
    thm2_applies,
    thm2_premise_holds,
)
from .squares import crosscheck, figure1_data, resolve_workers, squares_for_b

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED, EXIT_IO, EXIT_UNCERTIFIED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="narayana", description="Perfect powers among Catalan and Narayana numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalan-audit", help="check that C_1..C_n are not perfect powers")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("squares", help="all a <= a-max with N(a, b) a perfect square")
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--a-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--verify", action="store_true", help="re-check every root against N(a, b)")
    p.add_argument("--crosscheck", action="store_true", help="compare with a brute-force scan")

    p = sub.add_parser("pell", help="solve n^2 - d m^2 = z^2 for even m")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--z", type=_positive, required=True)
    p.add_argument("--n-limit", type=_positive, default=10**6)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("figure", help="data for figure 1 (squares) or 2 (theorem thresholds)")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--a-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--workers", type=_positive)

    p = sub.add_parser("scan", help="look for N(a, b) that are k-th powers with k >= 3")
    p.add_argument("--a-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=_positive)

    p = sub.add_parser("certify", help="certificates bounding k in N(a, b) = m^k")
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    return parser


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_catalan_audit(args, out) -> int:
    rows, failed = [], False
    for n in range(1, args.n_max + 1):
        try:
            ok = catalan_not_power(n)
        except ProofStepFailed:
            ok = False
        cert = catalan_witness(n) if ok and n >= 6 else None
        rows.append({
            "n": n,
            "value": catalan(n) if n <= 5 else None,
            "p": cert.p if cert else None,
            "valuation": cert.valuation if cert else None,
            "not_power": ok,
        })
        failed |= not ok
    if args.format == "json":
        out.write(_json(rows) + "\n")
    else:
        lines = ["n,value,p,valuation,not_power"]
        for r in rows:
            cells = [r["n"], r["value"], r["p"], r["valuation"], str(r["not_power"]).lower()]
            lines.append(",".join("" if c is None else str(c) for c in cells))
        out.write("\n".join(lines) + "\n")
    return EXIT_FALSIFIED if failed else EXIT_OK


def cmd_squares(args, out, err) -> int:
    b = args.b
    if b < 2:
        raise UsageError("--b must be > 1")
    dec = squarefree_decompose(b)
    hits = squares_for_b(b, args.a_max, verify=False)
    status = EXIT_OK
    if args.verify:
        for h in hits:
            value = narayana(h.a, b)
            if isqrt(value) != h.root or h.root * h.root != value:
                err.write(f"verify failed: N({h.a},{b}) != {h.root}^2\n")
                status = EXIT_FALSIFIED
    if dec.d == 1:
        err.write(
            f"note: b={b} is a perfect square (d=1): there is no Pell unit, "
            "so hits come from the finite divisor-pair branch\n"
        )
    report = crosscheck(b, args.a_max) if args.crosscheck else None
    if report is not None and not report.ok:
        status = EXIT_FALSIFIED
    if args.format == "json":
        doc = {"b": b, "d": dec.d, "s": dec.s, "hits": [{"a": h.a, "b": h.b, "root": str(h.root)} for h in hits]}
        if report is not None:
            doc["crosscheck"] = {"pell": report.pell, "oracle": report.oracle, "ok": report.ok}
        out.write(_json(doc) + "\n")
    else:
        out.write(figures.csv_text("a,b,root", [(h.a, h.b, h.root) for h in hits]))
        if report is not None:
            err.write("crosscheck: " + report.summary() + "\n")
    return status


def _pairs(items) -> str:
    return " ".join(f"({n},{m})" for n, m in items)


def cmd_pell(args, out, err) -> int:
    dec = squarefree_decompose(args.d)
    if dec.s != 1:
        raise UsageError(f"d={args.d} = {dec.d}*{dec.s}^2 is not squarefree")
    inst = PellInstance(args.d, args.z)
    if args.d == 1:
        fund, raw, dedup = None, [], []
        err.write("note: d=1 has no fundamental unit; solving by divisor pairs of z^2\n")
    else:
        f = fundamental_solution(args.d)
        fund = (f.n1, f.m1)
        raw = [(r.nprime, r.mprime) for r in representatives(inst)]
        dedup = [(r.nprime, r.mprime) for r in representatives(inst, dedup=True)]
    sols = list(solutions_even_m(inst, args.n_limit))
    if args.format == "json":
        doc = {
            "d": args.d,
            "z": args.z,
            "fundamental": list(fund) if fund else None,
            "representatives": [list(p) for p in raw],
            "representatives_dedup": [list(p) for p in dedup],
            "solutions": [{"n": s.n, "m": s.m, "rep": s.source[0], "k": s.source[1]} for s in sols],
        }
        out.write(_json(doc) + "\n")
        return EXIT_OK
    out.write(f"d={args.d} z={args.z}\n")
    out.write(f"fundamental: {_pairs([fund]) if fund else 'none'}\n")
    out.write(f"representatives: {_pairs(raw)}\n")
    out.write(f"representatives_dedup: {_pairs(dedup)}\n")
    out.write(figures.csv_text("n,m,rep,k", [(s.n, s.m, *s.source) for s in sols]))
    return EXIT_OK


def cmd_figure(args, out, err) -> int:
    if args.a_max < 4:
        rows = []
    elif args.which == 1:
        rows = figure1_data(args.a_max, workers=resolve_workers(args.workers))
    else:
        rows = figure2_data(args.a_max)
    if args.format == "svg":
        text = figures.figure1_svg(rows, args.a_max) if args.which == 1 else figures.figure2_svg(rows, args.a_max)
    else:
        text = figures.figure1_csv(rows) if args.which == 1 else figures.figure2_csv(rows)
    if args.out:
        try:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            err.write(f"narayana: cannot write {args.out}: {exc}\n")
            return EXIT_IO
    else:
        out.write(text)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    if args.a_max < 4:
        raise UsageError("--a-max must be >= 4")
    report = conjecture_scan(args.a_max, workers=resolve_workers(args.workers))
    if args.format == "json":
        out.write(_json(report.record()) + "\n")
    else:
        out.write(f"a_max,square_hits,higher_power_hits\n{report.a_max},{report.square_hits},{len(report.higher_power_hits)}\n")
        for a, b, g in report.higher_power_hits:
            out.write(f"# k>=3 hit: a={a} b={b} exponent_gcd={g}\n")
    return EXIT_FALSIFIED if report.higher_power_hits else EXIT_OK


def cmd_certify(args, out, err) -> int:
    if not args.a > args.b > 1:
        raise UsageError("need a > b > 1")
    b = args.b if 2 * args.b <= args.a else args.a - args.b + 1
    if b >= 2 and thm2_applies(args.a, b) and not thm2_premise_holds(args.a, b):
        err.write(
            f"note: P(binom({args.a},{b})) > 1.95*{b} fails here; "
            "the thm2 certificate rests on p > b and p^2 > a only\n"
        )
    try:
        certs = certify(args.a, args.b)
    except ProofStepFailed as exc:
        err.write(f"narayana: proof step failed: {exc}\n")
        return EXIT_FALSIFIED
    if args.format == "json":
        for c in certs:
            out.write(c.to_json() + "\n")
    else:
        out.write(PowerCertificate.CSV_HEADER + "\n")
        for c in certs:
            out.write(c.to_csv() + "\n")
    if not certs:
        err.write(f"narayana: no certificate applies to ({args.a}, {args.b})\n")
        return EXIT_UNCERTIFIED
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "catalan-audit":
            return cmd_catalan_audit(args, out)
        if args.command == "squares":
            return cmd_squares(args, out, err)
        if args.command == "pell":
            return cmd_pell(args, out, err)
        if args.command == "figure":
            return cmd_figure(args, out, err)
        if args.command == "scan":
            return cmd_scan(args, out)
        return cmd_certify(args, out, err)
    except UsageError as exc:
        err.write(f"narayana: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 success, 1 a hard check failed (``verify``, ``cling --verify``,
``count --method both`` disagreement), 2 bad arguments or domain error,
3 budget exceeded. Errors print one ``error: <kind>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

from . import bounds, clingratios, enumeration, kernels
from .errors import BudgetExceeded, DomainError, GridParseError
from .tiles import is_polygon_mosaic, is_suitably_connected, parse_grid

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3

# the default verify sweep
SWEEP_MAX_ROWS = 6
SWEEP_MAX_COLS = 10
CLASS_CHECK_SIZES = ((5, 6), (5, 7), (6, 7))


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def render(self, payload: dict, rows: list[list[Any]] | None, header: list[str] | None, plain: str) -> str:
        if self.fmt == "json":
            return json.dumps(payload, indent=2) + "\n"
        if self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            if header:
                writer.writerow(header)
            writer.writerows(rows or [])
            return buf.getvalue()
        return plain.rstrip("\n") + "\n"


def _positive(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--budget-bits", type=_positive, help="frontier state budget (log2); default 22 or $MSAP_BUDGET_BITS")

    dims = argparse.ArgumentParser(add_help=False)
    dims.add_argument("--rows", "-m", type=_positive, required=True)
    dims.add_argument("--cols", "-n", type=_positive, required=True)

    p = sub.add_parser("count", parents=[common, dims], help="exact p(m x n)")
    p.add_argument("--method", choices=("dp", "brute", "both"), default="dp")
    p.add_argument("--edge-budget", type=_positive, help="max grid-graph edges for the brute-force oracle")

    sub.add_parser("quasi", parents=[common, dims], help="|Q_ij| along the scan order")
    sub.add_parser("ratios", parents=[common, dims], help="growth ratios r_ij")

    p = sub.add_parser("cling", parents=[common], help="cling types and cp-ratio pairs")
    p.add_argument("--verify", action="store_true", help="compare pairs and counting matrices with reference values")

    sub.add_parser("bounds", parents=[common, dims], help="bounds report for one grid")

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite, or one grid with --rows/--cols")
    p.add_argument("--rows", "-m", type=_positive)
    p.add_argument("--cols", "-n", type=_positive)
    p.add_argument("--max-rows", type=_positive, default=SWEEP_MAX_ROWS)
    p.add_argument("--max-cols", type=_positive, default=SWEEP_MAX_COLS)

    p = sub.add_parser("limit", parents=[common], help="p(n x n)^(1/n^2) for n = 2..n-max")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--digits", type=_positive, default=20)

    p = sub.add_parser("check", parents=[common], help="classify a mosaic given as text")
    p.add_argument("file", nargs="?", default="-", help="grid file, '-' for stdin")
    return parser


# -- subcommands -------------------------------------------------------------------


def cmd_count(args):
    m, n = args.rows, args.cols
    results = {}
    if args.method in ("dp", "both"):
        results["dp"] = enumeration.count_polygon_mosaics(m, n, args.budget_bits)
    if args.method in ("brute", "both"):
        results["brute"] = enumeration.brute_force_count(m, n, args.edge_budget)
    agree = len(set(results.values())) == 1
    payload = {"m": m, "n": n, "counts": {k: str(v) for k, v in results.items()}, "agree": agree}
    plain = "\n".join(f"{k}: {v}" for k, v in results.items())
    if not agree:
        plain += "\nMISMATCH between engines"
    rows = [[m, n, k, v] for k, v in results.items()]
    return payload, rows, ["m", "n", "method", "count"], plain, EXIT_OK if agree else EXIT_FAIL


def cmd_quasi(args):
    g = enumeration.growth_ratios(args.rows, args.cols, args.budget_bits)
    entries = [
        {"i": i, "j": j, "count": str(g.counts[i, j]), "ratio": str(g.ratios[i, j])} for i, j in g.counts
    ]
    payload = {"m": g.m, "n": g.n, "quasimosaics": entries}
    rows = [[e["i"], e["j"], e["count"], e["ratio"]] for e in entries]
    plain = "\n".join(f"Q({e['i']},{e['j']}) = {e['count']}  r = {e['ratio']}" for e in entries)
    return payload, rows, ["i", "j", "count", "ratio"], plain, EXIT_OK


def cmd_ratios(args):
    g = enumeration.growth_ratios(args.rows, args.cols, args.budget_bits)
    matrix = [[str(r) for r in row] for row in g.rows()]
    product = g.product()
    payload = {"m": g.m, "n": g.n, "ratios": matrix, "product_minus_one": str(product - 1)}
    width = max(len(s) for row in matrix for s in row)
    plain = "\n".join(" ".join(s.rjust(width) for s in row) for row in matrix)
    plain += f"\nprod r - 1 = {product - 1}"
    return payload, matrix, None, plain, EXIT_OK


def cmd_cling(args):
    if args.verify:
        report = clingratios.verify_report()
        rows = [[k, *v["computed"], *v["expected"], v["match"]] for k, v in report["pairs"].items()]
        rows += [[k, "", "", "", "", v["match"]] for k, v in report["matrices"].items()]
        plain = "\n".join(
            f"{k}: {{{v['computed'][0]}, {v['computed'][1]}}} expected {{{v['expected'][0]}, {v['expected'][1]}}} "
            f"{'ok' if v['match'] else 'MISMATCH'}"
            for k, v in report["pairs"].items()
        )
        plain += "\n" + "\n".join(f"{k}: {'ok' if v['match'] else 'MISMATCH'}" for k, v in report["matrices"].items())
        status = EXIT_OK if report["ok"] else EXIT_FAIL
        return report, rows, ["name", "min", "max", "expected_min", "expected_max", "match"], plain, status
    entries = []
    for ct in clingratios.cling_catalog():
        pair = clingratios.cp_ratio_pair(ct)
        entries.append({
            "kind": ct.kind,
            "cells": [list(c) for c in ct.cells],
            "contact_edges": len(ct.contact_edges),
            "forced_x_edges": len(ct.forced_x_edges),
            "pair": [str(pair.min), str(pair.max)],
        })
    rows = [[e["kind"], len(e["cells"]), e["contact_edges"], *e["pair"]] for e in entries]
    plain = "\n".join(f"{e['kind']}: {{{e['pair'][0]}, {e['pair'][1]}}}" for e in entries)
    return {"types": entries}, rows, ["kind", "cells", "contact_edges", "min", "max"], plain, EXIT_OK


def _report_plain(r: bounds.BoundsReport) -> str:
    lines = [
        f"{r.m}x{r.n}: exact = {r.exact if r.exact is not None else 'unavailable'}",
        f"  case bounds    [{r.lemma4[0]}, {r.lemma4[1]}]  {r.lemma4_verdict.value}",
        f"  theorem bounds [{r.theorem[0]}, {r.theorem[1]}]  {r.theorem_verdict.value}",
    ]
    if r.lemma3_checked:
        lines.append(f"  growth-ratio class violations: {len(r.lemma3_violations)}")
    return "\n".join(lines)


def cmd_bounds(args):
    r = bounds.verify_sandwich(args.rows, args.cols, args.budget_bits)
    return r.to_dict(), [r.csv_row()], list(r.CSV_COLUMNS), _report_plain(r), EXIT_OK


def _suite(args) -> dict:
    checks = []

    def add(name: str, ok: bool, detail: Any = None) -> None:
        checks.append({"name": name, "ok": ok, "detail": detail})

    # oracle equivalence
    mism = []
    for m in range(1, 7):
        for n in range(m, 14):
            if m * (n - 1) + n * (m - 1) > enumeration.DEFAULT_EDGE_BUDGET:
                continue
            dp = enumeration.count_polygon_mosaics(m, n, args.budget_bits)
            bf = enumeration.brute_force_count(m, n)
            if dp != bf:
                mism.append({"m": m, "n": n, "dp": str(dp), "brute": str(bf)})
    add("oracle_equivalence", not mism, mism)

    cling = clingratios.verify_report()
    add("cp_ratio_pairs", all(v["match"] and v.get("routes_agree", True) for v in cling["pairs"].values()))
    add("counting_matrices", all(v["match"] for v in cling["matrices"].values()))

    reports = []
    for m in range(2, args.max_rows + 1):
        for n in range(m, args.max_cols + 1):
            reports.append(bounds.verify_sandwich(m, n, args.budget_bits))
    bad = [f"{r.m}x{r.n}" for r in reports if r.lemma4_verdict is bounds.Verdict.VIOLATED]
    add("case_bounds_sandwich", not bad, bad)

    viol = {}
    for m, n in CLASS_CHECK_SIZES:
        v = bounds.lemma3_violations(m, n, args.budget_bits)
        if v:
            viol[f"{m}x{n}"] = [x.to_dict() for x in v]
    add("growth_ratio_classes", not viol, viol)

    eq1 = []
    for m, n in [(m, n) for m in range(2, 5) for n in range(m, 7)] + list(CLASS_CHECK_SIZES):
        g = enumeration.growth_ratios(m, n, args.budget_bits)
        if g.product() - 1 != enumeration.count_polygon_mosaics(m, n, args.budget_bits):
            eq1.append(f"{m}x{n}")
    add("ratio_product_identity", not eq1, eq1)

    findings = [f for r in reports for f in r.findings]
    return {
        "ok": all(c["ok"] for c in checks),
        "backend": kernels.BACKEND,
        "checks": checks,
        "reports": [r.to_dict() for r in reports],
        "findings": findings,
    }


def cmd_verify(args):
    if (args.rows is None) != (args.cols is None):
        raise DomainError("--rows and --cols must be given together")
    if args.rows is not None:
        r = bounds.verify_sandwich(args.rows, args.cols, args.budget_bits)
        payload = {"ok": r.hard_ok, "report": r.to_dict(), "findings": r.findings}
        plain = _report_plain(r)
        for f in r.findings:
            plain += f"\n  finding: {f['side']} theorem bound {f['bound']} vs exact {f['exact']}"
        return payload, [r.csv_row()], list(r.CSV_COLUMNS), plain, EXIT_OK if r.hard_ok else EXIT_FAIL
    payload = _suite(args)
    rows = [[c["name"], c["ok"]] for c in payload["checks"]]
    plain = "\n".join(f"{'PASS' if c['ok'] else 'FAIL'} {c['name']}" for c in payload["checks"])
    for f in payload["findings"]:
        plain += f"\nfinding: {f['m']}x{f['n']} {f['side']} theorem bound {f['bound']} vs exact {f['exact']}"
    return payload, rows, ["check", "ok"], plain, EXIT_OK if payload["ok"] else EXIT_FAIL


def cmd_limit(args):
    seq = bounds.limit_estimate(args.n_max, args.digits, args.budget_bits)
    tail = [v for n, v in seq if n >= 4]
    monotone = all(a < b for a, b in zip(tail, tail[1:]))
    lo, hi = bounds.LIMIT_WINDOW
    window = [str(float(lo)), str(float(hi))]
    payload = {
        "sequence": [{"n": n, "root": str(v)} for n, v in seq],
        "monotone_from_4": monotone,
        "window": window,
    }
    plain = "\n".join(f"n={n:3d}  {v}" for n, v in seq)
    plain += f"\nincreasing for n >= 4: {monotone}\nwindow for the limit: [{window[0]}, {window[1]}]"
    return payload, [[n, str(v)] for n, v in seq], ["n", "root"], plain, EXIT_OK


def cmd_check(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    grid = parse_grid(text)
    if not is_suitably_connected(grid):
        kind = "not-suitably-connected"
    elif not is_polygon_mosaic(grid):
        kind = "suitably-connected"
    elif grid.is_trivial():
        kind = "trivial"
    else:
        kind = "polygon-mosaic"
    payload = {"rows": grid.rows, "cols": grid.cols, "classification": kind}
    return payload, [[grid.rows, grid.cols, kind]], ["rows", "cols", "classification"], kind, EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "quasi": cmd_quasi,
    "ratios": cmd_ratios,
    "cling": cmd_cling,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "limit": cmd_limit,
    "check": cmd_check,
}


def _fail(kind: str, message: str, status: int) -> int:
    print(f"error: {kind}: {message}", file=sys.stderr)
    return status


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Output(args.format)
    try:
        payload, rows, header, plain, status = COMMANDS[args.command](args)
    except GridParseError as exc:
        return _fail("parse", str(exc), EXIT_DOMAIN)
    except DomainError as exc:
        return _fail("domain", str(exc), EXIT_DOMAIN)
    except BudgetExceeded as exc:
        return _fail("budget", str(exc), EXIT_BUDGET)
    except OSError as exc:
        return _fail("io", str(exc), EXIT_DOMAIN)
    text = out.render(payload, rows, header, plain)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status

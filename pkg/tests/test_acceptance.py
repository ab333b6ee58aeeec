"""Acceptance suite: one PASS/FAIL line per criterion.

The lines are printed in the pytest terminal summary; run with
``pytest tests/test_acceptance.py`` or directly as a script.
"""

import json
import sys
import time
from collections import Counter
from fractions import Fraction as F

import pytest

from msap import cli
from msap.bounds import LIMIT_WINDOW, lemma3_violations, lemma4_bounds, limit_estimate, ratio_table, theorem_bounds, verify_sandwich
from msap.clingratios import cling_catalog, cp_ratio_pair, verify_report
from msap.enumeration import brute_force_count, count_polygon_mosaics, growth_ratios, quasimosaic_counts, scan_order


RESULTS: list[str] = []


def report(number, title, ok, elapsed, limit, detail=""):
    in_time = elapsed < limit
    verdict = "PASS" if ok and in_time else "FAIL"
    line = f"[{verdict}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit:g}s)"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    assert ok, detail or title
    assert in_time, f"took {elapsed:.2f}s, limit {limit}s"


def edge_count(m, n):
    return m * (n - 1) + n * (m - 1)


ORACLE_SET = sorted(
    {(m, n) for m in range(1, 28) for n in range(1, 28) if edge_count(m, n) <= 26} | {(3, 6), (6, 3)}
)
CLASS_CHECK_SET = [(5, 6), (5, 7), (6, 7)]


def test_criterion_1_closed_form():
    t = time.perf_counter()
    bad = [n for n in range(2, 21) if count_polygon_mosaics(2, n) != 2 ** (n - 1) - 1]
    report(1, "2 x n closed form for n = 2..20", not bad, time.perf_counter() - t, 1, f"mismatches={bad}" if bad else "")


def test_criterion_2_quasimosaic_constants():
    t = time.perf_counter()
    ok = True
    for m, n in [(5, 5), (4, 4), (4, 7), (6, 5)]:
        counts = quasimosaic_counts(m, n)
        head = [counts[c] for c in scan_order(m, n).sequence[:6]]
        ok &= head == [2, 4, 8, 16, 28, 56]
    ok &= growth_ratios(5, 5)[2, 2] == F(7, 4)
    report(2, "|Q| begins 2,4,8,16,28,56 and r22 = 7/4", ok, time.perf_counter() - t, 1)


def test_criterion_3_oracle_equivalence():
    t = time.perf_counter()
    bad = [(m, n) for m, n in ORACLE_SET if count_polygon_mosaics(m, n) != brute_force_count(m, n)]
    ok = not bad and brute_force_count(3, 3) == 13
    report(3, f"DP equals brute force on {len(ORACLE_SET)} grids", ok, time.perf_counter() - t, 60, f"mismatches={bad}" if bad else "")


EXPECTED_PAIRS = Counter(
    {(F(1, 4), F(1, 2)): 1, (F(1, 3), F(1, 2)): 5, (F(1, 4), F(3, 5)): 1, (F(1, 4), F(4, 7)): 1, (F(4, 11), F(1, 2)): 2, (F(1, 2), F(1, 2)): 3}
)


def test_criterion_4_cling_ratios_and_matrices():
    t = time.perf_counter()
    got = Counter(tuple(cp_ratio_pair(ct)) for ct in cling_catalog())
    rep = verify_report()
    row = rep["matrices"]["N1_x"]["computed"][0]
    ok = got == EXPECTED_PAIRS and rep["ok"] and len(rep["matrices"]) == 10 and row == [14, 10, 12, 10, 14, 11, 10, 8]
    report(4, "thirteen cp-ratio pairs and ten proof matrices", ok, time.perf_counter() - t, 5)


def test_criterion_5_case_bounds_sandwich():
    t = time.perf_counter()
    grids = [(m, n) for m in range(3, 7) for n in range(m, 11)]
    bad = []
    for m, n in grids:
        lo, hi = lemma4_bounds(m, n)
        if not lo <= count_polygon_mosaics(m, n) <= hi:
            bad.append((m, n))
    pinned = lemma4_bounds(3, 3) == (13, 13) and brute_force_count(3, 3) == 13
    report(5, f"lemma4_lo <= p <= lemma4_hi on {len(grids)} grids, pinned at 3x3", not bad and pinned, time.perf_counter() - t, 120, f"violations={bad}" if bad else "")


def test_criterion_6_ratio_containment():
    t = time.perf_counter()
    ok = True
    detail = []
    for m, n in CLASS_CHECK_SET:
        table = ratio_table(m, n)
        violations = lemma3_violations(m, n)
        ok &= not violations and table.total_tiles() == m * n and not table.chart_mismatches
        ok &= all(c.tile_count == c.expected_count for c in table.classes)
        if violations:
            detail.append(f"{m}x{n}: {len(violations)} outside")
    report(6, "growth ratios inside their class intervals at 5x6, 5x7, 6x7", ok, time.perf_counter() - t, 300, "; ".join(detail))


def test_criterion_7_product_identity():
    t = time.perf_counter()
    grids = sorted(set(CLASS_CHECK_SET) | set(ORACLE_SET))
    bad = [(m, n) for m, n in grids if growth_ratios(m, n).product() - 1 != count_polygon_mosaics(m, n)]
    report(7, f"product of growth ratios minus 1 equals p on {len(grids)} grids", not bad, time.perf_counter() - t, 60, f"mismatches={bad}" if bad else "")


def test_criterion_8_theorem_form_finding(capsys):
    t = time.perf_counter()
    rep = verify_sandwich(3, 3)
    ok = rep.theorem[0] == F(68, 5) and theorem_bounds(3, 3)[0] == F(68, 5)
    ok &= any(f["kind"] == "theorem_form" for f in rep.findings) and rep.hard_ok
    status = cli.main(["verify", "--rows", "3", "--cols", "3", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    ok &= status == 0 and data["report"]["theorem"][0] == "68/5" and bool(data["findings"])
    report(8, "theorem_lo = 68/5 at 3x3 reported as a finding, exit 0", ok, time.perf_counter() - t, 10)


def test_criterion_9_limit_scan():
    t = time.perf_counter()
    seq = limit_estimate(10)
    tail = [v for n, v in seq if n >= 4]
    monotone = all(a < b for a, b in zip(tail, tail[1:]))
    lo, hi = LIMIT_WINDOW
    detail = f"p^(1/n^2) at n=10: {seq[-1][1]:.6f}; window [{float(lo)}, {float(hi)}]"
    report(9, "limit scan to n = 10, monotone from n = 4", monotone and seq[-1][0] == 10, time.perf_counter() - t, 600, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

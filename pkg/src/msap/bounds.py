"""Exact bound formulas for p(m x n) and their verification against exact counts."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from .clingratios import classify, cp_ratio_pair, ratio_interval
from .enumeration import count_polygon_mosaics, growth_ratios
from .errors import BudgetExceeded, DomainError

F = Fraction

LIMIT_WINDOW = (Fraction(17, 10), Fraction(31, 16))


def _int_dims(*values: int) -> None:
    if not all(isinstance(v, int) for v in values):
        raise DomainError(f"dimensions must be integers, got {values}")


def theorem_bounds(m: int, n: int) -> tuple[Fraction, Fraction]:
    """2^(m+n-3) (17/10)^((m-2)(n-2)) and the same with 31/16."""
    _int_dims(m, n)
    if m < 3 or n < 3:
        raise DomainError(f"theorem bounds need m, n >= 3, got {m}x{n}")
    k = (m - 2) * (n - 2)
    scale = F(2) ** (m + n - 3)
    return scale * F(17, 10) ** k, scale * F(31, 16) ** k


def lemma4_bounds(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Case-wise bounds for 3 <= m <= n (m = 3, m = 4, m >= 5)."""
    _int_dims(m, n)
    if not 3 <= m <= n:
        raise DomainError(f"case bounds need 3 <= m <= n, got {m}x{n}")
    if m == 3:
        return 14 * F(7, 2) ** (n - 3) - 1, 14 * F(11, 3) ** (n - 3) - 1
    if m == 4:
        return 8 * F(49, 8) ** (n - 2) - 1, F(9520, 27) * F(155, 22) ** (n - 4) - 1
    lo = 8 * F(6) ** (m - 4) * F(49, 8) ** (n - 2) * F(17, 10) ** ((m - 4) * (n - 4)) - 1
    hi = (
        F(337280, 1863)
        * F(2645, 192) ** (m - 4)
        * F(2415, 176) ** (n - 4)
        * F(31, 16) ** ((m - 5) * (n - 5))
        - 1
    )
    return lo, hi


def closed_form_2xn(n: int) -> int:
    return 2 ** (n - 1) - 1


# -- growth ratio table -------------------------------------------------------------


@dataclass(frozen=True)
class RatioClass:
    label: str
    clings: tuple[str, str] | None
    interval: tuple[Fraction, Fraction]
    tile_count: int
    expected_count: int
    positions: tuple[tuple[int, int], ...] = ()

    def contains(self, r: Fraction) -> bool:
        return self.interval[0] <= r <= self.interval[1]


@dataclass(frozen=True)
class RatioTable:
    m: int
    n: int
    classes: tuple[RatioClass, ...]
    # positions where the cling types found in the grid differ from the row's pair
    chart_mismatches: tuple[tuple[int, int, str | None, str | None], ...] = ()

    def class_of(self, i: int, j: int) -> RatioClass:
        for cls in self.classes:
            if (i, j) in cls.positions:
                return cls
        raise KeyError((i, j))

    def total_tiles(self) -> int:
        return sum(c.tile_count for c in self.classes)


Pred = Callable[[int, int, int, int], bool]

# (label, predicate(i, j, m, n), cling pair or fixed ratio, count(m, n))
_TABLE_ROWS: list[tuple[str, Pred, tuple[str, str] | int, Callable[[int, int], int]]] = [
    ("i=1 or j=1 except (1,n),(m,1)",
     lambda i, j, m, n: (i == 1 or j == 1) and (i, j) not in ((1, n), (m, 1)), 2, lambda m, n: m + n - 3),
    ("i=m or j=n", lambda i, j, m, n: i == m or j == n, 1, lambda m, n: m + n - 1),
    ("4<=i<=m-2 and 4<=j<=n-3",
     lambda i, j, m, n: 4 <= i <= m - 2 and 4 <= j <= n - 3, ("U1", "V1"), lambda m, n: (m - 5) * (n - 6)),
    ("(2,2)", lambda i, j, m, n: (i, j) == (2, 2), ("U5", "V7"), lambda m, n: 1),
    ("(2,3)", lambda i, j, m, n: (i, j) == (2, 3), ("U3", "V7"), lambda m, n: 1),
    ("i=2 and 4<=j<=n-2", lambda i, j, m, n: i == 2 and 4 <= j <= n - 2, ("U1", "V7"), lambda m, n: n - 5),
    ("(2,n-1)", lambda i, j, m, n: (i, j) == (2, n - 1), ("U1", "V8"), lambda m, n: 1),
    ("(3,2)", lambda i, j, m, n: (i, j) == (3, 2), ("U5", "V3"), lambda m, n: 1),
    ("(3,3)", lambda i, j, m, n: (i, j) == (3, 3), ("U3", "V3"), lambda m, n: 1),
    ("i=3 and 4<=j<=n-3", lambda i, j, m, n: i == 3 and 4 <= j <= n - 3, ("U1", "V3"), lambda m, n: n - 6),
    ("(3,n-2)", lambda i, j, m, n: (i, j) == (3, n - 2), ("U1", "V4"), lambda m, n: 1),
    ("(3,n-1)", lambda i, j, m, n: (i, j) == (3, n - 1), ("U1", "V6"), lambda m, n: 1),
    ("4<=i<=m-1 and j=2", lambda i, j, m, n: 4 <= i <= m - 1 and j == 2, ("U5", "V1"), lambda m, n: m - 4),
    ("4<=i<=m-2 and j=3", lambda i, j, m, n: 4 <= i <= m - 2 and j == 3, ("U3", "V1"), lambda m, n: m - 5),
    ("4<=i<=m-2 and j=n-2", lambda i, j, m, n: 4 <= i <= m - 2 and j == n - 2, ("U1", "V2"), lambda m, n: m - 5),
    ("4<=i<=m-2 and j=n-1", lambda i, j, m, n: 4 <= i <= m - 2 and j == n - 1, ("U1", "V5"), lambda m, n: m - 5),
    ("(m-1,3)", lambda i, j, m, n: (i, j) == (m - 1, 3), ("U4", "V1"), lambda m, n: 1),
    ("i=m-1 and 4<=j<=n-3", lambda i, j, m, n: i == m - 1 and 4 <= j <= n - 3, ("U2", "V1"), lambda m, n: n - 6),
    ("(m-1,n-2)", lambda i, j, m, n: (i, j) == (m - 1, n - 2), ("U2", "V2"), lambda m, n: 1),
    ("(m-1,n-1)", lambda i, j, m, n: (i, j) == (m - 1, n - 1), ("U2", "V5"), lambda m, n: 1),
]


def ratio_table(m: int, n: int) -> RatioTable:
    """Position classes of the general case with their growth-ratio intervals.

    Requires 5 <= m <= n and n >= 6. Intervals come from the computed cp-ratio
    pairs; each position is also re-classified from its actual cling mosaics
    and any disagreement with the row's pair is recorded.
    """
    _int_dims(m, n)
    if not (5 <= m <= n and n >= 6):
        raise DomainError(f"general ratio table needs 5 <= m <= n, n >= 6, got {m}x{n}")
    buckets: list[list[tuple[int, int]]] = [[] for _ in _TABLE_ROWS]
    mismatches = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for k, (_, pred, kind, _) in enumerate(_TABLE_ROWS):
                if pred(i, j, m, n):
                    buckets[k].append((i, j))
                    if isinstance(kind, tuple):
                        found = classify(m, n, i, j)
                        if found != kind:
                            mismatches.append((i, j, *found))
                    break
            else:
                raise AssertionError(f"position ({i},{j}) not covered by any class")
    classes = []
    for (label, _, kind, count), cells in zip(_TABLE_ROWS, buckets):
        if isinstance(kind, tuple):
            interval = ratio_interval(cp_ratio_pair(kind[0]), cp_ratio_pair(kind[1]))
            clings = kind
        else:
            interval = (F(kind), F(kind))
            clings = None
        classes.append(RatioClass(label, clings, interval, len(cells), count(m, n), tuple(cells)))
    return RatioTable(m, n, tuple(classes), tuple(mismatches))


# -- sandwich verification --------------------------------------------------------


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNCHECKED = "unchecked"


def _verdict(exact: int | None, lo: Fraction, hi: Fraction) -> Verdict:
    if exact is None:
        return Verdict.UNCHECKED
    return Verdict.HOLDS if lo <= exact <= hi else Verdict.VIOLATED


@dataclass
class RatioViolation:
    i: int
    j: int
    r: Fraction
    interval: tuple[Fraction, Fraction]

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "r": str(self.r), "interval": [str(x) for x in self.interval]}


@dataclass
class BoundsReport:
    m: int
    n: int
    exact: int | None
    lemma4: tuple[Fraction, Fraction]
    theorem: tuple[Fraction, Fraction]
    lemma4_verdict: Verdict
    theorem_verdict: Verdict
    lemma3_checked: bool = False
    lemma3_violations: list[RatioViolation] = field(default_factory=list)

    @property
    def findings(self) -> list[dict]:
        """Theorem-form comparisons that fail; reported, not treated as errors."""
        if self.theorem_verdict is not Verdict.VIOLATED:
            return []
        lo, hi = self.theorem
        side = "lower" if self.exact < lo else "upper"
        return [{
            "m": self.m,
            "n": self.n,
            "kind": "theorem_form",
            "side": side,
            "bound": str(lo if side == "lower" else hi),
            "exact": str(self.exact),
            "note": "bound without the -1 term does not contain the exact count",
        }]

    @property
    def hard_ok(self) -> bool:
        return self.lemma4_verdict is not Verdict.VIOLATED and not self.lemma3_violations

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "exact": None if self.exact is None else str(self.exact),
            "lemma4": [str(x) for x in self.lemma4],
            "theorem": [str(x) for x in self.theorem],
            "lemma4_verdict": self.lemma4_verdict.value,
            "theorem_verdict": self.theorem_verdict.value,
            "lemma3_violations": [v.to_dict() for v in self.lemma3_violations],
        }

    CSV_COLUMNS = (
        "m", "n", "exact", "lemma4_lo", "lemma4_hi", "theorem_lo", "theorem_hi",
        "lemma4_verdict", "theorem_verdict", "lemma3_violations",
    )

    def csv_row(self) -> list[str]:
        d = self.to_dict()
        return [
            str(self.m), str(self.n), d["exact"] or "", *d["lemma4"], *d["theorem"],
            d["lemma4_verdict"], d["theorem_verdict"], str(len(self.lemma3_violations)),
        ]


def lemma3_violations(m: int, n: int, budget: int | None = None) -> list[RatioViolation]:
    """Growth ratios of the m x n grid lying outside their class interval."""
    table = ratio_table(m, n)
    ratios = growth_ratios(m, n, budget)
    out = []
    for cls in table.classes:
        for i, j in cls.positions:
            r = ratios[i, j]
            if not cls.contains(r):
                out.append(RatioViolation(i, j, r, cls.interval))
    return out


def verify_sandwich(m: int, n: int, budget: int | None = None) -> BoundsReport:
    _int_dims(m, n)
    if m < 2 or n < 2:
        raise DomainError(f"sandwich check needs m, n >= 2, got {m}x{n}")
    try:
        exact = count_polygon_mosaics(m, n, budget)
    except BudgetExceeded:
        exact = None
    a, b = sorted((m, n))
    if a == 2:
        closed = F(closed_form_2xn(b))
        lemma4 = theorem = (closed, closed)
    else:
        lemma4 = lemma4_bounds(a, b)
        theorem = theorem_bounds(m, n)
    report = BoundsReport(
        m, n, exact, lemma4, theorem, _verdict(exact, *lemma4), _verdict(exact, *theorem)
    )
    if a >= 5 and b >= 6:
        try:
            report.lemma3_violations = lemma3_violations(a, b, budget)
            report.lemma3_checked = True
        except BudgetExceeded:
            pass
    return report


def limit_estimate(n_max: int, digits: int = 20, budget: int | None = None) -> list[tuple[int, Decimal]]:
    """(n, p(n x n) ** (1 / n^2)) for n = 2..n_max, to ``digits`` significant digits."""
    if n_max < 2:
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    out = []
    with localcontext() as ctx:
        ctx.prec = digits + 10
        for k in range(2, n_max + 1):
            p = count_polygon_mosaics(k, k, budget)
            root = Decimal(p) ** (Decimal(1) / Decimal(k * k))
            out.append((k, +root.quantize(Decimal(1).scaleb(-(digits - 1)))))
    return out

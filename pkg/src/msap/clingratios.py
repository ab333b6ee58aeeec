"""Cling mosaics and their cp-ratios.

For a leading tile at (i, j) of a quasimosaic, the l-cling mosaic is the
already placed cells (i, j-2), (i, j-1), (i+1, j-2) and the t-cling mosaic is
(i-2, j), (i-2, j+1), (i-2, j+2), (i-1, j), (i-1, j+1), restricted to the grid.
Each cling edge falls in one class:

* internal  -- shared by two cling cells;
* output    -- shared with the leading tile (``e_l`` or ``e_t``);
* forced    -- on the system boundary, so it carries no cp;
* contact   -- shared with a cell placed before the leading tile;
* free      -- shared with a cell not yet placed.

The classes depend only on where (i, j) sits relative to the boundary, which
gives five l-cling types U1..U5 and eight t-cling types V1..V8. A cp-ratio is
the fraction of cling fillings, for fixed contact edges, whose output edge
carries a cp; it is computed here by exhaustive enumeration of fillings.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .enumeration import scan_order
from .errors import DomainError, PatternLengthMismatch
from .tiles import TILES, MosaicTile

# An edge is ("h", r, c), the edge right of cell (r, c), or ("v", r, c), the
# edge below cell (r, c). Coordinates are relative to the leading tile.
Edge = tuple[str, int, int]
Cell = tuple[int, int]

L_CLING_OFFSETS: tuple[Cell, ...] = ((0, -2), (0, -1), (1, -2))
T_CLING_OFFSETS: tuple[Cell, ...] = ((-2, 0), (-2, 1), (-2, 2), (-1, 0), (-1, 1))

# Positions in a 12 x 12 grid whose cling mosaics realize each type.
_REPRESENTATIVES = {
    "U1": (6, 6), "U2": (11, 6), "U3": (6, 3), "U4": (11, 3), "U5": (6, 2),
    "V1": (6, 6), "V2": (6, 10), "V3": (3, 6), "V4": (3, 10),
    "V5": (6, 11), "V6": (3, 11), "V7": (2, 6), "V8": (2, 11),
}
_CATALOG_GRID = (12, 12)

U_KINDS = ("U1", "U2", "U3", "U4", "U5")
V_KINDS = ("V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8")


def cell_edges(cell: Cell) -> dict[str, Edge]:
    r, c = cell
    return {"l": ("h", r, c - 1), "t": ("v", r - 1, c), "r": ("h", r, c), "b": ("v", r, c)}


def _across(cell: Cell, side: str) -> Cell:
    r, c = cell
    return {"l": (r, c - 1), "t": (r - 1, c), "r": (r, c + 1), "b": (r + 1, c)}[side]


@dataclass(frozen=True)
class ClingType:
    kind: str
    cells: tuple[Cell, ...]
    forced_x_edges: frozenset[Edge]
    contact_edges: tuple[Edge, ...]
    free_edges: frozenset[Edge]
    output_edge: Edge

    @property
    def side(self) -> str:
        return "l" if self.kind.startswith("U") else "t"

    def signature(self) -> tuple:
        return (self.cells, self.forced_x_edges, self.contact_edges, self.free_edges, self.output_edge)


class RatioPair(NamedTuple):
    min: Fraction
    max: Fraction

    def __str__(self) -> str:
        return f"{{{self.min}, {self.max}}}"


def _order_contacts(side: str, contacts: Iterable[Edge], cells: dict[Edge, tuple[Cell, str]]) -> tuple[Edge, ...]:
    lefts = [e for e in contacts if cells[e][1] == "l"]
    tops = [e for e in contacts if cells[e][1] == "t"]
    if len(lefts) + len(tops) != len(list(contacts)):
        raise AssertionError("contact edge not on the left or top of the cling mosaic")
    if side == "l":
        # tops from right to left, then lefts from top to bottom
        tops.sort(key=lambda e: -cells[e][0][1])
        lefts.sort(key=lambda e: cells[e][0][0])
        return tuple(tops + lefts)
    # lefts from bottom to top, then tops from left to right
    lefts.sort(key=lambda e: -cells[e][0][0])
    tops.sort(key=lambda e: cells[e][0][1])
    return tuple(lefts + tops)


def cling_at(m: int, n: int, i: int, j: int, side: str, kind: str = "") -> ClingType | None:
    """The l-cling (``side="l"``) or t-cling mosaic of the leading tile (i, j).

    ``None`` when no cling cell lies inside the grid.
    """
    order = scan_order(m, n)
    rank = {cell: k for k, cell in enumerate(order)}
    lead_rank = rank[(i, j)]
    offsets = L_CLING_OFFSETS if side == "l" else T_CLING_OFFSETS
    cells = tuple(
        (dr, dc) for dr, dc in offsets if 1 <= i + dr <= m and 1 <= j + dc <= n
    )
    if not cells:
        return None
    cellset = set(cells)
    owner: dict[Edge, tuple[Cell, str]] = {}
    forced, contacts, free = set(), [], set()
    output = None
    for cell in cells:
        for s, edge in cell_edges(cell).items():
            other = _across(cell, s)
            if other in cellset:
                continue
            owner[edge] = (cell, s)
            if other == (0, 0):
                output = edge
                continue
            ai, aj = i + other[0], j + other[1]
            if not (1 <= ai <= m and 1 <= aj <= n):
                forced.add(edge)
            elif rank[(ai, aj)] < lead_rank:
                contacts.append(edge)
            else:
                free.add(edge)
    if output is None:
        raise AssertionError("cling mosaic does not touch the leading tile")
    return ClingType(
        kind=kind,
        cells=cells,
        forced_x_edges=frozenset(forced),
        contact_edges=_order_contacts(side, contacts, owner),
        free_edges=frozenset(free),
        output_edge=output,
    )


@lru_cache(maxsize=None)
def cling_catalog() -> tuple[ClingType, ...]:
    m, n = _CATALOG_GRID
    out = []
    for kind in U_KINDS + V_KINDS:
        i, j = _REPRESENTATIVES[kind]
        out.append(cling_at(m, n, i, j, "l" if kind[0] == "U" else "t", kind))
    return tuple(out)


def cling_type(kind: str) -> ClingType:
    for ct in cling_catalog():
        if ct.kind == kind:
            return ct
    raise KeyError(kind)


def classify(m: int, n: int, i: int, j: int) -> tuple[str | None, str | None]:
    """Cling types (U_k, V_k') of the leading tile (i, j); ``None`` if absent or unlisted."""
    by_sig = {ct.signature(): ct.kind for ct in cling_catalog()}
    result = []
    for side in "lt":
        ct = cling_at(m, n, i, j, side)
        result.append(None if ct is None else by_sig.get(ct.signature()))
    return result[0], result[1]


# -- exhaustive fillings --------------------------------------------------------


def _fillings(cells: Sequence[Cell], forced: Iterable[Edge] = ()) -> Iterable[dict[Edge, bool]]:
    """Suitably connected tile assignments to ``cells``; yields edge -> cp."""
    forced = frozenset(forced)
    for tiles in itertools.product(TILES, repeat=len(cells)):
        edges: dict[Edge, bool] = {}
        ok = True
        for cell, tile in zip(cells, tiles):
            for s, edge in cell_edges(cell).items():
                cp = getattr(tile.mask, s)
                if edge in edges and edges[edge] != cp:
                    ok = False
                    break
                edges[edge] = cp
            if not ok:
                break
        if ok and not any(edges[e] for e in forced):
            yield edges


@lru_cache(maxsize=None)
def _tally(kind: str) -> dict[tuple[bool, ...], tuple[int, int]]:
    ct = cling_type(kind)
    tally: dict[tuple[bool, ...], list[int]] = defaultdict(lambda: [0, 0])
    for edges in _fillings(ct.cells, ct.forced_x_edges):
        entry = tally[tuple(edges[e] for e in ct.contact_edges)]
        entry[1] += 1
        if edges[ct.output_edge]:
            entry[0] += 1
    return {k: (v[0], v[1]) for k, v in tally.items()}


def _as_pattern(pattern: str | Sequence[bool]) -> tuple[bool, ...]:
    if isinstance(pattern, str):
        if set(pattern) - {"x", "o"}:
            raise ValueError(f"pattern must use 'x' and 'o', got {pattern!r}")
        return tuple(ch == "o" for ch in pattern)
    return tuple(bool(p) for p in pattern)


def cp_ratio(ct: ClingType | str, pattern: str | Sequence[bool]) -> Fraction | None:
    """cp-ratio for the given contact edges; ``None`` if no filling realizes them."""
    if isinstance(ct, str):
        ct = cling_type(ct)
    pat = _as_pattern(pattern)
    if len(pat) != len(ct.contact_edges):
        raise PatternLengthMismatch(
            f"{ct.kind} has {len(ct.contact_edges)} contact edges, pattern has {len(pat)}"
        )
    hits, total = _tally(ct.kind).get(pat, (0, 0))
    return Fraction(hits, total) if total else None


def cp_ratio_pair(ct: ClingType | str) -> RatioPair:
    if isinstance(ct, str):
        ct = cling_type(ct)
    values = [Fraction(h, t) for h, t in _tally(ct.kind).values() if t]
    return RatioPair(min(values), max(values))


def ratio_interval(u: RatioPair, v: RatioPair) -> tuple[Fraction, Fraction]:
    """Range of a growth ratio whose l- and t-cling types have pairs ``u``, ``v``."""
    return 2 - u.max * v.max, 2 - u.min * v.min


# -- counting matrices ---------------------------------------------------------

# Row/column order for contact-edge patterns: xx, xo, ox, oo (x before o,
# first edge most significant), and likewise for triples.
def patterns(k: int) -> list[tuple[bool, ...]]:
    return list(itertools.product((False, True), repeat=k))


@dataclass(frozen=True)
class CountMatrix:
    name: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __add__(self, other: CountMatrix) -> CountMatrix:
        return CountMatrix(
            f"{self.name}+{other.name}",
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def column(self, k: int) -> CountMatrix:
        return CountMatrix(f"{self.name}[:,{k}]", tuple((row[k],) for row in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def quotient_pair(num: CountMatrix, den: CountMatrix) -> RatioPair:
    """Min and max of ``num / den`` entry-wise, skipping zero denominators."""
    values = [
        Fraction(a, b) for ra, rb in zip(num.rows, den.rows) for a, b in zip(ra, rb) if b
    ]
    return RatioPair(min(values), max(values))


# The three-tile submosaic: corner tile at (0, 0), one tile to its right and
# one below it. Edge names follow the row/column indexing of its matrices.
W_CELLS: tuple[Cell, ...] = ((0, 0), (0, 1), (1, 0))
W_EDGES: dict[str, Edge] = {
    "e1": ("v", -1, 1),  # top of the right tile
    "e2": ("v", -1, 0),  # top of the corner
    "e3": ("h", 0, -1),  # left of the corner
    "e4": ("h", 1, -1),  # left of the lower tile
    "c1": ("h", 0, 1),   # right of the right tile
    "c2": ("v", 1, 0),   # bottom of the lower tile
}


@lru_cache(maxsize=None)
def w_matrices() -> dict[str, CountMatrix]:
    """N_xx, N_xo, N_ox, N_oo indexed [e1e2][e3e4], keyed by c1c2."""
    counts: dict[tuple[bool, ...], int] = defaultdict(int)
    for edges in _fillings(W_CELLS):
        counts[tuple(edges[W_EDGES[k]] for k in ("c1", "c2", "e1", "e2", "e3", "e4"))] += 1
    out = {}
    for c1, c2 in patterns(2):
        label = "xo"[c1] + "xo"[c2]
        rows = tuple(
            tuple(counts[(c1, c2, *row, *col)] for col in patterns(2)) for row in patterns(2)
        )
        out[label] = CountMatrix(f"N_{label}", rows)
    return out


def w_sum(pattern: str) -> CountMatrix:
    """N with ``*`` wildcards, e.g. ``"o*"`` = N_ox + N_oo."""
    mats = w_matrices()
    chosen = [
        mats[a + b]
        for a in ("xo" if pattern[0] == "*" else pattern[0])
        for b in ("xo" if pattern[1] == "*" else pattern[1])
    ]
    total = chosen[0]
    for mat in chosen[1:]:
        total = total + mat
    return CountMatrix(f"N_{pattern}", total.rows)


def type_matrices(kind: str, row_edges: int = 2) -> dict[str, CountMatrix]:
    """Counts of fillings of a cling type by output cp (x/o), rows = first
    ``row_edges`` contact edges, columns = the rest."""
    ct = cling_type(kind)
    k = len(ct.contact_edges)
    tally = _tally(kind)
    out = {}
    for cp in (False, True):
        rows = []
        for row in patterns(row_edges):
            cells = []
            for col in patterns(k - row_edges):
                hits, total = tally.get(row + col, (0, 0))
                cells.append(hits if cp else total - hits)
            rows.append(tuple(cells))
        out["xo"[cp]] = CountMatrix(f"{kind}_{'xo'[cp]}", tuple(rows))
    return out


# The two-tile column left of the three-tile submosaic in a t-cling mosaic:
# upper tile (-2, 0) and lower tile (-1, 0), leading tile at (0, 0).
_COLUMN_CELLS: tuple[Cell, ...] = ((-2, 0), (-1, 0))
_COLUMN_EDGES = {
    "e1": ("h", -1, -1),  # left of the lower tile
    "e2": ("h", -2, -1),  # left of the upper tile
    "e3": ("v", -3, 0),   # top of the upper tile
    "et": ("v", -1, 0),   # bottom of the lower tile
    "e6": ("h", -1, 0),   # right of the lower tile
    "e7": ("h", -2, 0),   # right of the upper tile
}


def composed_matrices(right_pattern: str) -> dict[str, CountMatrix]:
    """t-cling counts built from the column pair and a W matrix sum.

    The remaining three tiles of a t-cling mosaic form a transposed W whose
    e1e2 are the column's right edges (e6e7) and whose e3e4 are the t-cling's
    e4e5; by transposition symmetry its counts are ``w_sum(right_pattern)``
    (``"**"`` for V1, ``"*x"`` when the far right edge is on the boundary).
    """
    inner = w_sum(right_pattern)
    acc: dict[tuple[bool, ...], list[int]] = defaultdict(lambda: [0] * 4)
    for edges in _fillings(_COLUMN_CELLS):
        key = tuple(edges[_COLUMN_EDGES[k]] for k in ("et", "e1", "e2", "e3"))
        row = patterns(2).index((edges[_COLUMN_EDGES["e6"]], edges[_COLUMN_EDGES["e7"]]))
        for col in range(4):
            acc[key][col] += inner.rows[row][col]
    out = {}
    for et in (False, True):
        rows = []
        for e1, e2 in patterns(2):
            rows.append(tuple(acc[(et, e1, e2, e3)][col] for e3 in (False, True) for col in range(4)))
        out["xo"[et]] = CountMatrix(f"composed_{'xo'[et]}", tuple(rows))
    return out


def proof_matrices() -> dict[str, CountMatrix]:
    """All ten counting matrices by exhaustive enumeration."""
    w = w_matrices()
    out = {f"N_{k}": CountMatrix(f"N_{k}", w[k].rows) for k in ("xx", "xo", "ox", "oo")}
    for label, kind in (("N1", "V1"), ("N2", "V2"), ("N3", "V5")):
        mats = type_matrices(kind)
        for cp in "xo":
            out[f"{label}_{cp}"] = CountMatrix(f"{label}_{cp}", mats[cp].rows)
    return out


def matrix_route_pairs() -> dict[str, RatioPair]:
    """cp-ratio pairs recomputed as matrix quotients, independent of the
    per-type enumeration for U1..U4 and via the column composition for V1..V4."""
    first = lambda mat: mat.column(0)  # noqa: E731
    pairs = {
        "U1": quotient_pair(w_sum("o*"), w_sum("**")),
        "U2": quotient_pair(w_sum("ox"), w_sum("*x")),
        "U3": quotient_pair(first(w_sum("o*")), first(w_sum("**"))),
        "U4": quotient_pair(first(w_sum("ox")), first(w_sum("*x"))),
    }
    for free_kind, edge_kind, pattern in (("V1", "V3", "**"), ("V2", "V4", "*x")):
        mats = composed_matrices(pattern)
        both = mats["x"] + mats["o"]
        pairs[free_kind] = quotient_pair(mats["o"], both)
        pairs[edge_kind] = quotient_pair(first(mats["o"]), first(both))
    n3 = type_matrices("V5")
    n3_all = n3["x"] + n3["o"]
    pairs["V5"] = quotient_pair(n3["o"], n3_all)
    pairs["V6"] = quotient_pair(first(n3["o"]), first(n3_all))
    return pairs


# -- reference values ------------------------------------------------------------

F = Fraction
REFERENCE_PAIRS: dict[str, RatioPair] = {
    "U1": RatioPair(F(1, 4), F(1, 2)),
    "U2": RatioPair(F(1, 3), F(1, 2)),
    "U3": RatioPair(F(1, 3), F(1, 2)),
    "U4": RatioPair(F(1, 3), F(1, 2)),
    "U5": RatioPair(F(1, 2), F(1, 2)),
    "V1": RatioPair(F(1, 4), F(3, 5)),
    "V2": RatioPair(F(1, 4), F(4, 7)),
    "V3": RatioPair(F(4, 11), F(1, 2)),
    "V4": RatioPair(F(4, 11), F(1, 2)),
    "V5": RatioPair(F(1, 3), F(1, 2)),
    "V6": RatioPair(F(1, 3), F(1, 2)),
    "V7": RatioPair(F(1, 2), F(1, 2)),
    "V8": RatioPair(F(1, 2), F(1, 2)),
}

REFERENCE_MATRICES: dict[str, list[list[int]]] = {
    "N_xx": [[2, 2, 2, 2], [2, 2, 1, 1], [2, 2, 2, 2], [2, 2, 1, 1]],
    "N_xo": [[2, 1, 2, 1], [2, 1, 1, 1], [2, 1, 2, 1], [2, 1, 1, 1]],
    "N_ox": [[2, 2, 2, 2], [2, 2, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]],
    "N_oo": [[2, 1, 2, 1], [2, 1, 1, 1], [1, 1, 1, 0], [1, 0, 1, 1]],
    "N1_x": [
        [14, 10, 12, 10, 14, 11, 10, 8],
        [14, 11, 10, 8, 8, 6, 8, 6],
        [14, 11, 10, 8, 14, 10, 12, 10],
        [14, 10, 12, 10, 6, 5, 6, 4],
    ],
    "N1_o": [
        [14, 11, 10, 8, 14, 10, 12, 10],
        [14, 10, 12, 10, 6, 5, 6, 4],
        [8, 6, 8, 6, 8, 6, 4, 4],
        [8, 6, 4, 4, 8, 6, 8, 6],
    ],
    "N2_x": [
        [7, 7, 6, 6, 7, 7, 5, 5],
        [7, 7, 5, 5, 4, 4, 4, 4],
        [7, 7, 5, 5, 7, 7, 6, 6],
        [7, 7, 6, 6, 3, 3, 3, 3],
    ],
    "N2_o": [
        [7, 7, 5, 5, 7, 7, 6, 6],
        [7, 7, 6, 6, 3, 3, 3, 3],
        [4, 4, 4, 4, 4, 4, 2, 2],
        [4, 4, 2, 2, 4, 4, 4, 4],
    ],
    "N3_x": [[2, 2, 2, 2], [2, 2, 1, 1], [2, 2, 2, 2], [2, 2, 1, 1]],
    "N3_o": [[2, 2, 2, 2], [2, 2, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]],
}


def verify_report() -> dict:
    """Computed versus reference pairs and matrices, JSON-ready."""
    routes = matrix_route_pairs()
    pairs = {}
    for ct in cling_catalog():
        got = cp_ratio_pair(ct)
        ref = REFERENCE_PAIRS[ct.kind]
        entry = {
            "computed": [str(got.min), str(got.max)],
            "expected": [str(ref.min), str(ref.max)],
            "contact_edges": len(ct.contact_edges),
            "cells": len(ct.cells),
            "match": got == ref,
        }
        if ct.kind in routes:
            alt = routes[ct.kind]
            entry["matrix_route"] = [str(alt.min), str(alt.max)]
            entry["routes_agree"] = alt == got
        pairs[ct.kind] = entry
    matrices = {}
    for name, mat in proof_matrices().items():
        ref = REFERENCE_MATRICES[name]
        mismatches = [
            [r, c, got, exp]
            for r, (grow, erow) in enumerate(zip(mat.tolist(), ref))
            for c, (got, exp) in enumerate(zip(grow, erow))
            if got != exp
        ]
        matrices[name] = {"computed": mat.tolist(), "expected": ref, "match": not mismatches, "mismatches": mismatches}
    ok = all(p["match"] and p.get("routes_agree", True) for p in pairs.values()) and all(
        m["match"] for m in matrices.values()
    )
    return {"ok": ok, "pairs": pairs, "matrices": matrices}


def check_kind(kind: str) -> None:
    if kind not in U_KINDS + V_KINDS:
        raise DomainError(f"unknown cling type {kind!r}")

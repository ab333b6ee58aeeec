"""Exact counting of polygon mosaics, quasimosaics and growth ratios.

Two engines count p(m x n), the number of multiple self-avoiding polygons
in the m x n grid:

* :func:`brute_force_count` enumerates edge subsets of the grid graph one by
  one (every vertex of degree 0 or 2), with no state merging;
* :func:`count_polygon_mosaics` runs a column-sweep transfer DP over mosaic
  tiles, carrying one connection-point bit per exposed edge.

The quasimosaic DP runs the same tile kernel along the anti-diagonal scan
order and records the running total after every placement.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from . import kernels
from .errors import BudgetExceeded, DomainError
from .tiles import transition_table

DEFAULT_BUDGET_BITS = 22
DEFAULT_EDGE_BUDGET = 40

Index = tuple[int, int]

_TABLE = transition_table()


def budget_bits(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("MSAP_BUDGET_BITS")
    return int(env) if env else DEFAULT_BUDGET_BITS


def _check_dims(m: int, n: int) -> None:
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
        raise DomainError(f"grid dimensions must be positive integers, got {m}x{n}")


# -- scan order ---------------------------------------------------------------


@dataclass(frozen=True)
class ScanOrder:
    """Anti-diagonal order (1,1), (1,2), (2,1), (1,3), ... ending at (m,n)."""

    m: int
    n: int

    @cached_property
    def sequence(self) -> tuple[Index, ...]:
        seq = []
        for d in range(2, self.m + self.n + 1):
            for i in range(max(1, d - self.n), min(self.m, d - 1) + 1):
                seq.append((i, d - i))
        return tuple(seq)

    def predecessor(self, i: int, j: int) -> Index | None:
        """a(i,j); ``None`` for (1,1)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise DomainError(f"({i},{j}) outside {self.m}x{self.n}")
        if (i, j) == (1, 1):
            return None
        if i > 1 and j < self.n:
            return (i - 1, j + 1)
        if i + j - 2 <= self.m:
            return (i + j - 2, 1)
        return (self.m, i + j - self.m - 1)

    def __iter__(self) -> Iterator[Index]:
        return iter(self.sequence)

    def __len__(self) -> int:
        return self.m * self.n


def scan_order(m: int, n: int) -> ScanOrder:
    _check_dims(m, n)
    return ScanOrder(m, n)


# -- frontier sweep -------------------------------------------------------------


def _slot_plan(m: int, n: int, order: Sequence[Index]) -> tuple[list[tuple[int, int, int, int]], int]:
    """Assign frontier bit positions to exposed edges along ``order``.

    Returns per-step (top, left, right, bottom) positions, -1 on the system
    boundary, and the largest number of simultaneously exposed edges.
    """
    live: dict[tuple[str, int, int], int] = {}
    free: list[int] = []
    next_bit = 0
    width = 0
    plan = []
    for i, j in order:
        left = live.pop(("h", i, j - 1)) if j > 1 else -1
        top = live.pop(("v", i - 1, j)) if i > 1 else -1
        released = [b for b in (top, left) if b >= 0]

        def take() -> int:
            nonlocal next_bit
            if released:
                return released.pop()
            if free:
                return free.pop()
            next_bit += 1
            return next_bit - 1

        right = take() if j < n else -1
        bottom = take() if i < m else -1
        free.extend(released)
        if right >= 0:
            live[("h", i, j)] = right
        if bottom >= 0:
            live[("v", i, j)] = bottom
        width = max(width, len(live))
        plan.append((top, left, right, bottom))
    return plan, width


def _sweep(m: int, n: int, order: Sequence[Index], budget: int | None) -> Iterator[tuple[Index, dict[int, int]]]:
    plan, width = _slot_plan(m, n, order)
    # cp counts on any cut are even, so at most 2**(width-1) frontiers occur
    bits = max(width - 1, 0)
    limit = budget_bits(budget)
    if bits > limit:
        raise BudgetExceeded(f"{m}x{n} sweep needs 2^{bits} frontier states, budget is 2^{limit}")
    place = kernels.place if width < 62 else kernels.python_backend.place
    states = {0: 1}
    for cell, (top, left, right, bottom) in zip(order, plan):
        states = place(states, top, left, right, bottom, _TABLE)
        yield cell, states


def count_polygon_mosaics(m: int, n: int, budget: int | None = None) -> int:
    """p(m x n) via the column-sweep tile DP (trivial mosaic excluded)."""
    _check_dims(m, n)
    if m > n:
        m, n = n, m
    order = [(i, j) for j in range(1, n + 1) for i in range(1, m + 1)]
    states: dict[int, int] = {0: 1}
    for _, states in _sweep(m, n, order, budget):
        pass
    return sum(states.values()) - 1


def brute_force_count(m: int, n: int, edge_budget: int | None = None) -> int:
    """p(m x n) by enumerating degree-0-or-2 edge subsets of the grid graph."""
    _check_dims(m, n)
    edges = m * (n - 1) + n * (m - 1)
    limit = DEFAULT_EDGE_BUDGET if edge_budget is None else edge_budget
    if edges > limit:
        raise BudgetExceeded(f"{m}x{n} grid graph has {edges} edges, oracle budget is {limit}")
    count = kernels.count_cycle_covers if edges <= 63 else kernels.python_backend.count_cycle_covers
    return count(m, n) - 1


# -- quasimosaics -----------------------------------------------------------------


def quasimosaic_counts(m: int, n: int, budget: int | None = None) -> dict[Index, int]:
    """|Q_{i,j}| for every position, in scan order."""
    _check_dims(m, n)
    order = scan_order(m, n).sequence
    return {cell: sum(states.values()) for cell, states in _sweep(m, n, order, budget)}


def count_quasimosaics(m: int, n: int, i: int, j: int, budget: int | None = None) -> int:
    _check_dims(m, n)
    if not (1 <= i <= m and 1 <= j <= n):
        raise DomainError(f"({i},{j}) outside {m}x{n}")
    order = scan_order(m, n).sequence
    stop = order.index((i, j)) + 1
    for cell, states in _sweep(m, n, order[:stop], budget):
        pass
    return sum(states.values())


@dataclass(frozen=True)
class GrowthRatioMatrix:
    m: int
    n: int
    ratios: dict[Index, Fraction]
    counts: dict[Index, int]

    def __getitem__(self, index: Index) -> Fraction:
        return self.ratios[index]

    def product(self) -> Fraction:
        prod = Fraction(1)
        for r in self.ratios.values():
            prod *= r
        return prod

    def rows(self) -> list[list[Fraction]]:
        return [[self.ratios[i, j] for j in range(1, self.n + 1)] for i in range(1, self.m + 1)]


def growth_ratios(m: int, n: int, budget: int | None = None) -> GrowthRatioMatrix:
    """r_{i,j} = |Q_{i,j}| / |Q_{a(i,j)}| as exact fractions."""
    order = scan_order(m, n)
    counts = quasimosaic_counts(m, n, budget)
    ratios = {}
    prev = 1
    for cell in order:
        ratios[cell] = Fraction(counts[cell], prev)
        prev = counts[cell]
    return GrowthRatioMatrix(m, n, ratios, counts)

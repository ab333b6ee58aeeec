"""Mosaic tiles for polygons and the predicates on grids built from them.

A tile is characterized by which of its four edge midpoints carry a
connection point. ``T1`` is empty; ``T2``..``T7`` each carry exactly two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, GridParseError


class CpMask(NamedTuple):
    l: bool = False
    t: bool = False
    r: bool = False
    b: bool = False

    def popcount(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        sides = "".join(name for name, on in zip("ltrb", self) if on)
        return sides or "-"


class MosaicTile(enum.Enum):
    T1 = CpMask()
    T2 = CpMask(l=True, b=True)
    T3 = CpMask(r=True, b=True)
    T4 = CpMask(t=True, r=True)
    T5 = CpMask(l=True, t=True)
    T6 = CpMask(l=True, r=True)
    T7 = CpMask(t=True, b=True)

    @property
    def mask(self) -> CpMask:
        return self.value

    def __str__(self) -> str:
        return self.name


TILES: tuple[MosaicTile, ...] = tuple(MosaicTile)

_BY_MASK = {tile.mask: tile for tile in TILES}

# Given (left cp, top cp) of a tile, the admissible tiles. Every pair holds one
# r-cp and one non-r-cp tile, and likewise for b.
_MATCHING: dict[tuple[bool, bool], tuple[MosaicTile, ...]] = {
    (False, False): (MosaicTile.T1, MosaicTile.T3),
    (True, False): (MosaicTile.T2, MosaicTile.T6),
    (False, True): (MosaicTile.T4, MosaicTile.T7),
    (True, True): (MosaicTile.T5,),
}


def cp_mask(tile: MosaicTile) -> CpMask:
    return tile.mask


def tile_for_mask(mask: CpMask) -> MosaicTile | None:
    """Inverse of :func:`cp_mask`; ``None`` for masks no tile realizes."""
    return _BY_MASK.get(CpMask(*mask))


def tiles_matching(l: bool, t: bool) -> tuple[MosaicTile, ...]:
    return _MATCHING[(bool(l), bool(t))]


def transition_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """(r, b) bits of each admissible tile, indexed by ``l | t << 1``.

    This is the form consumed by the counting kernels.
    """
    table = []
    for key in range(4):
        l, t = bool(key & 1), bool(key & 2)
        table.append(tuple((int(x.mask.r), int(x.mask.b)) for x in tiles_matching(l, t)))
    return tuple(table)


@dataclass(frozen=True)
class MosaicGrid:
    """An m x n matrix of tiles. ``grid[i, j]`` is 1-based like ``M_ij``."""

    entries: tuple[tuple[MosaicTile, ...], ...]

    def __init__(self, entries: Iterable[Iterable[MosaicTile]]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise DomainError("mosaic grid needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DomainError("ragged mosaic grid")
        for row in rows:
            for tile in row:
                if not isinstance(tile, MosaicTile):
                    raise DomainError(f"not a mosaic tile: {tile!r}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def trivial(cls, m: int, n: int) -> MosaicGrid:
        if m < 1 or n < 1:
            raise DomainError(f"grid dimensions must be positive, got {m}x{n}")
        return cls([[MosaicTile.T1] * n for _ in range(m)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, index: tuple[int, int]) -> MosaicTile:
        i, j = index
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols} grid")
        return self.entries[i - 1][j - 1]

    def is_trivial(self) -> bool:
        return all(tile is MosaicTile.T1 for row in self.entries for tile in row)

    def __str__(self) -> str:
        return format_grid(self)


def is_suitably_connected(grid: MosaicGrid) -> bool:
    rows = grid.entries
    for i, row in enumerate(rows):
        for j, tile in enumerate(row):
            if j + 1 < len(row) and tile.mask.r != row[j + 1].mask.l:
                return False
            if i + 1 < len(rows) and tile.mask.b != rows[i + 1][j].mask.t:
                return False
    return True


def is_polygon_mosaic(grid: MosaicGrid) -> bool:
    rows = grid.entries
    if any(row[0].mask.l or row[-1].mask.r for row in rows):
        return False
    if any(tile.mask.t for tile in rows[0]) or any(tile.mask.b for tile in rows[-1]):
        return False
    return is_suitably_connected(grid)


def parse_grid(text: str) -> MosaicGrid:
    """Parse rows of space-separated ``T1``..``T7`` tokens.

    Blank lines are ignored. Errors report 1-based row/column.
    """
    rows: list[list[MosaicTile]] = []
    lines = [line for line in text.splitlines() if line.strip()]
    for r, line in enumerate(lines, start=1):
        row = []
        for c, token in enumerate(line.split(), start=1):
            try:
                row.append(MosaicTile[token])
            except KeyError:
                raise GridParseError(f"row {r} col {c}: unknown tile {token!r}", r, c) from None
        if rows and len(row) != len(rows[0]):
            raise GridParseError(
                f"row {r} col {len(row)}: expected {len(rows[0])} tiles, got {len(row)}",
                r,
                len(row),
            )
        rows.append(row)
    if not rows:
        raise GridParseError("row 1 col 1: empty grid", 1, 1)
    return MosaicGrid(rows)


def format_grid(grid: MosaicGrid | Sequence[Sequence[MosaicTile]]) -> str:
    entries = grid.entries if isinstance(grid, MosaicGrid) else grid
    return "\n".join(" ".join(tile.name for tile in row) for row in entries)

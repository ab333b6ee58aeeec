import itertools

import pytest
from hypothesis import given, strategies as st

from msap.errors import DomainError, GridParseError
from msap.tiles import (
    TILES,
    CpMask,
    MosaicGrid,
    MosaicTile as T,
    cp_mask,
    format_grid,
    is_polygon_mosaic,
    is_suitably_connected,
    parse_grid,
    tile_for_mask,
    tiles_matching,
    transition_table,
)

UNIT_SQUARE = MosaicGrid([[T.T3, T.T2], [T.T4, T.T5]])


def test_seven_tiles_with_zero_or_two_cps():
    assert len(TILES) == 7
    assert cp_mask(T.T1).popcount() == 0
    assert all(cp_mask(t).popcount() == 2 for t in TILES[1:])


def test_masks_are_distinct_and_cover_all_two_cp_patterns():
    masks = {cp_mask(t) for t in TILES}
    assert len(masks) == 7
    two_cp = {m for m in (CpMask(*bits) for bits in itertools.product((False, True), repeat=4)) if m.popcount() == 2}
    assert masks - {CpMask()} == two_cp


@pytest.mark.parametrize("tile, sides", [
    (T.T1, ""), (T.T2, "lb"), (T.T3, "rb"), (T.T4, "tr"), (T.T5, "lt"), (T.T6, "lr"), (T.T7, "tb"),
])
def test_canonical_masks(tile, sides):
    assert str(cp_mask(tile)) == (sides or "-")
    assert tile_for_mask(cp_mask(tile)) is tile


@pytest.mark.parametrize("l, t, expected", [
    (False, False, (T.T1, T.T3)),
    (True, False, (T.T2, T.T6)),
    (False, True, (T.T4, T.T7)),
    (True, True, (T.T5,)),
])
def test_tiles_matching(l, t, expected):
    got = tiles_matching(l, t)
    assert got == expected
    assert all(x.mask.l == l and x.mask.t == t for x in got)
    if len(got) == 2:
        assert {x.mask.r for x in got} == {True, False}
        assert {x.mask.b for x in got} == {True, False}


def test_every_tile_is_in_its_matching_set():
    for tile in TILES:
        assert tile in tiles_matching(tile.mask.l, tile.mask.t)
    assert set().union(*(tiles_matching(l, t) for l in (0, 1) for t in (0, 1))) == set(TILES)


def test_transition_table_mirrors_matching():
    table = transition_table()
    assert table[0] == ((0, 0), (1, 1))
    assert table[3] == ((0, 0),)
    assert [len(x) for x in table] == [2, 2, 2, 1]


def test_suitably_connected_examples():
    assert is_suitably_connected(MosaicGrid([[T.T1]]))
    assert is_suitably_connected(UNIT_SQUARE)
    assert not is_suitably_connected(MosaicGrid([[T.T3, T.T1]]))


def test_polygon_mosaic_examples():
    assert is_polygon_mosaic(UNIT_SQUARE)
    assert not is_polygon_mosaic(MosaicGrid([[T.T5]]))
    assert is_polygon_mosaic(MosaicGrid.trivial(3, 4))
    assert MosaicGrid.trivial(3, 4).is_trivial()


def test_one_based_indexing():
    assert UNIT_SQUARE[1, 1] is T.T3
    assert UNIT_SQUARE[2, 2] is T.T5
    with pytest.raises(IndexError):
        UNIT_SQUARE[0, 1]


@pytest.mark.parametrize("m, n", [(0, 3), (3, 0), (-1, 2)])
def test_degenerate_dimensions_rejected(m, n):
    with pytest.raises(DomainError):
        MosaicGrid.trivial(m, n)


def test_ragged_grid_rejected():
    with pytest.raises(DomainError):
        MosaicGrid([[T.T1, T.T1], [T.T1]])


def test_text_round_trip():
    text = "T3 T2\nT4 T5"
    assert format_grid(parse_grid(text)) == text
    assert parse_grid(text) == UNIT_SQUARE


def test_parse_error_location():
    with pytest.raises(GridParseError) as err:
        parse_grid("T1 T1\nT1 X9")
    assert (err.value.row, err.value.col) == (2, 2)
    with pytest.raises(GridParseError):
        parse_grid("T1 T1\nT1")


grids = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.sampled_from(TILES), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(grids)
def test_polygon_implies_suitably_connected(entries):
    grid = MosaicGrid(entries)
    if is_polygon_mosaic(grid):
        assert is_suitably_connected(grid)


@given(grids)
def test_transpose_preserves_predicates(entries):
    swap = {T.T2: T.T4, T.T4: T.T2, T.T6: T.T7, T.T7: T.T6}
    grid = MosaicGrid(entries)
    transposed = MosaicGrid([[swap.get(row[j], row[j]) for row in entries] for j in range(len(entries[0]))])
    assert is_suitably_connected(grid) == is_suitably_connected(transposed)
    assert is_polygon_mosaic(grid) == is_polygon_mosaic(transposed)

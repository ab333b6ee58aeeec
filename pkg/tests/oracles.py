"""Slow, independent reference counters used only by the tests."""

import itertools

from msap.tiles import TILES, MosaicGrid, is_polygon_mosaic


def grid_graph_edges(m, n):
    edges = []
    for r in range(m):
        for c in range(n):
            if c + 1 < n:
                edges.append(((r, c), (r, c + 1)))
            if r + 1 < m:
                edges.append(((r, c), (r + 1, c)))
    return edges


def naive_edge_subsets(m, n):
    """Every one of the 2^E edge subsets; keep nonempty ones with degrees in {0, 2}."""
    edges = grid_graph_edges(m, n)
    total = 0
    for mask in range(1, 1 << len(edges)):
        deg = {}
        for k, (a, b) in enumerate(edges):
            if mask >> k & 1:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
        if all(d == 2 for d in deg.values()):
            total += 1
    return total


def naive_polygon_mosaics(m, n):
    """All 7^(mn) mosaics, counting nontrivial polygon mosaics."""
    total = 0
    for tiles in itertools.product(TILES, repeat=m * n):
        grid = MosaicGrid([tiles[r * n:(r + 1) * n] for r in range(m)])
        if is_polygon_mosaic(grid) and not grid.is_trivial():
            total += 1
    return total


def antidiagonal(m, n):
    return [(i, d - i) for d in range(2, m + n + 1) for i in range(max(1, d - n), min(m, d - 1) + 1)]


def backtrack_quasimosaics(m, n):
    """Place tiles one by one in scan order, checking every tile against its
    placed neighbours and the system boundary; count survivors at each depth."""
    order = antidiagonal(m, n)
    counts = [0] * len(order)
    placed = {}

    def rec(k):
        if k == len(order):
            return
        i, j = order[k]
        for tile in TILES:
            mk = tile.mask
            if mk.l != (placed[i, j - 1].mask.r if j > 1 else False):
                continue
            if mk.t != (placed[i - 1, j].mask.b if i > 1 else False):
                continue
            if (j == n and mk.r) or (i == m and mk.b):
                continue
            placed[i, j] = tile
            counts[k] += 1
            rec(k + 1)
            del placed[i, j]

    rec(0)
    return dict(zip(order, counts))

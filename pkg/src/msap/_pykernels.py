"""Pure-Python counting kernels.

Same signatures and results as the compiled ``_kernels`` extension; used
when the extension is not built or ``MSAP_PURE_PYTHON`` is set.
"""


def place(states, top, left, right, bottom, table):
    """Advance a frontier DP by one tile.

    ``states`` maps a frontier bitmask to the number of partial mosaics with
    that frontier. ``top``/``left`` are the bit positions holding the cp of
    the new tile's top/left edge and are cleared; ``right``/``bottom`` are the
    positions that receive its right/bottom cp. A position of -1 means the
    edge lies on the system boundary, so it reads as no cp on input and
    forbids a cp on output. ``table[l | t << 1]`` lists admissible (r, b).
    """
    out = {}
    get = out.get
    clear = 0
    if top >= 0:
        clear |= 1 << top
    if left >= 0:
        clear |= 1 << left
    clear = ~clear
    # Resolve the boundary filter once per call, not per state.
    choices = []
    for options in table:
        keep = []
        for r, b in options:
            if (r and right < 0) or (b and bottom < 0):
                continue
            keep.append((r << right if r else 0) | (b << bottom if b else 0))
        choices.append(tuple(keep))
    for s, count in states.items():
        key = 0
        if left >= 0:
            key = (s >> left) & 1
        if top >= 0:
            key |= ((s >> top) & 1) << 1
        base = s & clear
        for add in choices[key]:
            k = base | add
            out[k] = get(k, 0) + count
    return out


def count_cycle_covers(m, n):
    """Number of edge subsets of the m x n grid graph with all degrees in {0, 2}.

    Depth-first over vertices in row-major order, choosing the right and down
    edge at each vertex; a branch is cut as soon as a vertex's degree is
    final and not 0 or 2. Every surviving leaf is one subset, the empty one
    included.
    """
    down = [0] * n
    last = m * n

    def rec(pos, left_in):
        if pos == last:
            return 1
        r, c = divmod(pos, n)
        up = down[c]
        total = 0
        rights = (0, 1) if c < n - 1 else (0,)
        downs = (0, 1) if r < m - 1 else (0,)
        for right in rights:
            for dn in downs:
                deg = left_in + up + right + dn
                if deg == 0 or deg == 2:
                    down[c] = dn
                    total += rec(pos + 1, right)
        down[c] = up
        return total

    return rec(0, 0)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; drop-in twin of ``_pykernels``.

Frontier keys are handled as C integers; counts stay Python ints so that
results are exact at any size.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.ref cimport PyObject


def place(dict states, int top, int left, int right, int bottom, table):
    cdef dict out = {}
    cdef long long clear = 0
    cdef long long s, base, k
    cdef long long adds[4][2]
    cdef int nadd[4]
    cdef int key, a, r, b
    cdef PyObject *prev
    cdef object count

    if top >= 0:
        clear |= (<long long>1) << top
    if left >= 0:
        clear |= (<long long>1) << left
    clear = ~clear

    for key in range(4):
        nadd[key] = 0
        for r, b in table[key]:
            if (r and right < 0) or (b and bottom < 0):
                continue
            k = 0
            if r:
                k |= (<long long>1) << right
            if b:
                k |= (<long long>1) << bottom
            adds[key][nadd[key]] = k
            nadd[key] += 1

    for skey, count in states.items():
        s = skey
        key = 0
        if left >= 0:
            key = (s >> left) & 1
        if top >= 0:
            key |= ((s >> top) & 1) << 1
        base = s & clear
        for a in range(nadd[key]):
            k = base | adds[key][a]
            kobj = k
            prev = PyDict_GetItem(out, kobj)
            if prev is NULL:
                PyDict_SetItem(out, kobj, count)
            else:
                PyDict_SetItem(out, kobj, <object>prev + count)
    return out


cdef unsigned long long _rec(int pos, int left_in, int m, int n, int last, int *down):
    cdef int r, c, up, right, dn, deg, nr, nd
    cdef unsigned long long total = 0
    if pos == last:
        return 1
    r = pos // n
    c = pos % n
    up = down[c]
    nr = 2 if c < n - 1 else 1
    nd = 2 if r < m - 1 else 1
    for right in range(nr):
        for dn in range(nd):
            deg = left_in + up + right + dn
            if deg == 0 or deg == 2:
                down[c] = dn
                total += _rec(pos + 1, right, m, n, last, down)
    down[c] = up
    return total


def count_cycle_covers(int m, int n):
    cdef int down[64]
    cdef int c
    if n > 64 or m * (n - 1) + n * (m - 1) > 63:
        raise OverflowError("grid too large for the compiled edge enumerator")
    for c in range(n):
        down[c] = 0
    return _rec(0, 0, m, n, m * n, down)

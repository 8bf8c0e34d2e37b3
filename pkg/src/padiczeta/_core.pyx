# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled histogram recursion over int64; twin of _core_fallback.

Same inputs and outputs as _core_fallback.collect_histogram.  Raises
OverflowError whenever intermediate coefficients might leave the int64
headroom; callers then rerun the pure-Python fallback, which is always
exact.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef enum:
    BIGVAL = 1 << 30

cdef inline int _val(i64 x, int p) nogil:
    cdef int v = 0
    if x == 0:
        return BIGVAL
    if x < 0:
        x = -x
    while x % p == 0:
        x //= p
        v += 1
    return v


cdef struct Ctx:
    int p
    int L
    int pn
    int depth
    i64 guard
    i64 *mats       # pn * L * L
    i64 *scratch    # (depth + 1) * L
    i64 *dec        # bins * (depth + 1)
    i64 *und
    int vbins


cdef int _rec(Ctx *c, i64 *g, int e, int rem) except -1:
    cdef int v0 = _val(g[0], c.p)
    cdef int m1 = BIGVAL
    cdef int i, j, d, v
    cdef i64 acc, mag
    cdef i64 *child
    cdef i64 *mat
    for i in range(1, c.L):
        if g[i] != 0:
            v = _val(g[i], c.p)
            if v < m1:
                m1 = v
    if v0 < BIGVAL and m1 > v0:
        c.dec[v0 * (c.depth + 1) + e] += 1
        return 0
    if rem == 0:
        v = v0 if v0 < m1 else m1
        if v >= c.vbins:
            raise OverflowError("valuation exceeds histogram bins")
        c.und[v * (c.depth + 1) + e] += 1
        return 0
    for i in range(c.L):
        mag = g[i] if g[i] >= 0 else -g[i]
        if mag > c.guard:
            raise OverflowError("int64 headroom exhausted")
    child = c.scratch + (e + 1) * c.L
    for d in range(c.pn):
        mat = c.mats + d * c.L * c.L
        for i in range(c.L):
            acc = 0
            for j in range(c.L):
                if g[j] != 0:
                    acc += mat[i * c.L + j] * g[j]
            child[i] = acc
        _rec(c, child, e + 1, rem - 1)
    return 0


def collect_histogram(int p, int n, mats, coeffs, int depth):
    """int64 twin of _core_fallback.collect_histogram."""
    cdef int L = len(coeffs)
    cdef int pn = len(mats)
    cdef int vbins = 64
    cdef Ctx c
    cdef int i, j, k, e, v
    cdef i64 rowsum, entry, m
    cdef object out_dec, out_und

    c.p = p
    c.L = L
    c.pn = pn
    c.depth = depth
    c.vbins = vbins
    c.mats = <i64 *> malloc(pn * L * L * sizeof(i64))
    c.scratch = <i64 *> malloc((depth + 2) * L * sizeof(i64))
    c.dec = <i64 *> malloc(vbins * (depth + 1) * sizeof(i64))
    c.und = <i64 *> malloc(vbins * (depth + 1) * sizeof(i64))
    if c.mats == NULL or c.scratch == NULL or c.dec == NULL or c.und == NULL:
        if c.mats != NULL:
            free(c.mats)
        if c.scratch != NULL:
            free(c.scratch)
        if c.dec != NULL:
            free(c.dec)
        if c.und != NULL:
            free(c.und)
        raise MemoryError()
    try:
        for i in range(vbins * (depth + 1)):
            c.dec[i] = 0
            c.und[i] = 0
        rowsum = 1
        for k in range(pn):
            row_mat = mats[k]
            for i in range(L):
                row = row_mat[i]
                m = 0
                for j in range(L):
                    entry_obj = row[j]
                    if entry_obj > (<i64> 1 << 62) or entry_obj < -(<i64> 1 << 62):
                        raise OverflowError("shift matrix entry exceeds int64")
                    entry = entry_obj
                    c.mats[k * L * L + i * L + j] = entry
                    m += entry if entry >= 0 else -entry
                if m > rowsum:
                    rowsum = m
        c.guard = ((<i64> 1) << 62) // rowsum
        for i in range(L):
            val_obj = coeffs[i]
            if val_obj > (<i64> 1 << 62) or val_obj < -(<i64> 1 << 62):
                raise OverflowError("coefficient exceeds int64")
            c.scratch[i] = val_obj
        _rec(&c, c.scratch, 0, depth)
        out_dec = {}
        out_und = {}
        for v in range(vbins):
            for e in range(depth + 1):
                if c.dec[v * (depth + 1) + e]:
                    out_dec[(v, e)] = c.dec[v * (depth + 1) + e]
                if c.und[v * (depth + 1) + e]:
                    out_und[(v, e)] = c.und[v * (depth + 1) + e]
        return out_dec, out_und
    finally:
        free(c.mats)
        free(c.scratch)
        free(c.dec)
        free(c.und)

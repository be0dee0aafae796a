# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson product kernel.

Same enumeration as ``_lr_py.lr_product`` (letter-by-letter horizontal
strips with a greedy capacity bound); see that module for the notation.  In
quantum mode the rim-hook reduction runs at each leaf, so shapes that vanish
never reach Python.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef enum:
    MAXN = 64
    INF = 1 << 30

cdef struct State:
    int L
    int m
    int quantum
    int n
    int b[MAXN]
    int lam[MAXN]
    int old[MAXN + 1][MAXN]
    int prefix[MAXN + 1][MAXN]


cdef int _record(State *s, dict result) except -1:
    cdef int r, x, q, d = 0, inv = 0, sign, pos, jj
    cdef int res[MAXN]
    cdef unsigned long long mask = 0, bit
    cdef list row = [0] * s.L
    if not s.quantum:
        for r in range(s.L):
            row[r] = s.lam[r]
        key = tuple(row)
        result[key] = result.get(key, 0) + 1
        return 0
    # rim-hook reduction on beta-numbers
    for r in range(s.L):
        x = s.lam[r] + s.L - 1 - r
        q = x // s.n
        x = x - q * s.n
        bit = (<unsigned long long> 1) << x
        if mask & bit:
            return 0
        mask |= bit
        d += q
        res[r] = x
    for r in range(s.L):
        for jj in range(r + 1, s.L):
            if res[r] < res[jj]:
                inv += 1
    sign = -1 if (inv + (s.L - 1) * d) & 1 else 1
    pos = 0
    for x in range(s.n - 1, -1, -1):
        if mask & ((<unsigned long long> 1) << x):
            row[pos] = x - (s.L - 1 - pos)
            pos += 1
    key = (tuple(row), d)
    result[key] = result.get(key, 0) + sign
    return 0


cdef inline int _greedy(State *s, int j, int i, int acc) nogil:
    cdef int r, cap, lat, x, tot = 0
    cdef int *old = s.old[j]
    cdef int *pp = s.prefix[j - 1]
    for r in range(i, s.L):
        if r:
            cap = old[r - 1] - old[r]
            lat = pp[r - 1] - acc
        else:
            cap = INF
            lat = (INF if j == 1 else 0) - acc
        x = cap if cap < lat else lat
        if x > 0:
            acc += x
            tot += x
    return tot


cdef int _letter(State *s, int j, dict result) except -1:
    cdef int r
    if j > s.m:
        _record(s, result)
        return 0
    for r in range(s.L):
        s.old[j][r] = s.lam[r]
    _row(s, j, 0, s.b[j - 1], 0, result)
    return 0


cdef int _row(State *s, int j, int i, int need, int acc, dict result) except -1:
    cdef int r, cap, lat, hi, x
    cdef int *old = s.old[j]
    if need == 0:
        for r in range(i, s.L):
            s.prefix[j][r] = acc
        _letter(s, j + 1, result)
        return 0
    if i == s.L:
        return 0
    if i:
        cap = old[i - 1] - old[i]
        lat = s.prefix[j - 1][i - 1] - acc
    else:
        cap = INF
        lat = (INF if j == 1 else 0) - acc
    hi = need
    if cap < hi:
        hi = cap
    if lat < hi:
        hi = lat
    x = hi
    while x >= 0:
        if need - x > _greedy(s, j, i + 1, acc + x):
            break
        s.lam[i] = old[i] + x
        s.prefix[j][i] = acc + x
        _row(s, j, i + 1, need - x, acc + x, result)
        x -= 1
    s.lam[i] = old[i]
    return 0


def lr_product(a, b, int maxrows):
    """Expand ``s_a * s_b`` keeping only shapes with at most ``maxrows`` rows."""
    return _expand(a, b, maxrows, 0)


def quantum_expand(a, b, int r, int k):
    """Quantum product ``sigma_a * sigma_b`` in ``QH*(Gr(r, r + k))``.

    Returns ``{(c, d): coefficient}`` with zero entries removed.
    """
    if r + k > MAXN:
        raise ValueError("n too large for the compiled kernel")
    out = _expand(a, b, r, r + k)
    return {key: v for key, v in sorted(out.items()) if v}


cdef dict _expand(a, b, int maxrows, int n):
    cdef list aa = [x for x in a if x]
    cdef list bb = [x for x in b if x]
    cdef int L = maxrows
    cdef int i, j
    cdef State *s
    if len(aa) > L or len(bb) > L:
        return {}
    if L > MAXN:
        raise ValueError("partition too long for the compiled kernel")
    s = <State *> PyMem_Malloc(sizeof(State))
    if s == NULL:
        raise MemoryError()
    try:
        s.L = L
        s.m = len(bb)
        s.quantum = 1 if n > 0 else 0
        s.n = n
        for i in range(L):
            s.lam[i] = aa[i] if i < len(aa) else 0
            s.prefix[0][i] = INF
        for j in range(s.m):
            s.b[j] = bb[j]
        result = {}
        _letter(s, 1, result)
        return result
    finally:
        PyMem_Free(s)

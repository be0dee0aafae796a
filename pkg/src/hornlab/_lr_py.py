"""Pure-Python Littlewood-Richardson product kernel.

Mirror of ``_lr_ext.pyx``; both must enumerate the same tableaux.

An LR tableau of shape ``c/a`` and content ``b`` is built one letter at a
time: the cells holding letter ``j`` form a horizontal strip added to the
shape reached after letters ``1..j-1``.  With ``x[i]`` copies of ``j`` in row
``i``, the strip condition is ``lam[i] + x[i] <= lam[i-1]`` (old shape) and
the lattice condition on the reverse reading word is

    x[0] + ... + x[i] <= P[i-1],

``P`` being the prefix counts of letter ``j - 1`` (no bound for ``j = 1``).
Only rows below ``maxrows`` are ever touched, so truncation is free.  Before a
branch is entered the greedy maximum of what the remaining rows can still
take is compared against the remaining content, which removes almost every
dead end.
"""

from __future__ import annotations

_INF = 1 << 30


def lr_product(a, b, maxrows):
    """Expand ``s_a * s_b`` keeping only shapes with at most ``maxrows`` rows.

    Returns a dict mapping zero-padded shape tuples (length ``maxrows``) to
    positive coefficients.
    """
    a = [x for x in a if x]
    b = [x for x in b if x]
    L = maxrows
    if len(a) > L or len(b) > L:
        return {}
    lam = a + [0] * (L - len(a))
    m = len(b)
    result = {}
    # prefix[j][i]: copies of letter j in rows 0..i
    prefix = [[_INF] * L] + [[0] * L for _ in range(m)]

    def greedy(pp, first, i, s, old):
        tot = 0
        for r in range(i, L):
            cap = old[r - 1] - old[r] if r else _INF
            lat = (pp[r - 1] if r else first) - s
            x = cap if cap < lat else lat
            if x > 0:
                s += x
                tot += x
        return tot

    def letter(j):
        if j > m:
            key = tuple(lam)
            result[key] = result.get(key, 0) + 1
            return
        row(j, 0, b[j - 1], 0, lam[:], prefix[j - 1], _INF if j == 1 else 0)

    def row(j, i, need, s, old, pp, first):
        if need == 0:
            pj = prefix[j]
            for r in range(i, L):
                pj[r] = s
            letter(j + 1)
            return
        if i == L:
            return
        cap = old[i - 1] - old[i] if i else _INF
        lat = (pp[i - 1] if i else first) - s
        hi = min(cap, lat, need)
        for x in range(hi, -1, -1):
            # need - x grows faster than the greedy bound as x drops
            if need - x > greedy(pp, first, i + 1, s + x, old):
                break
            lam[i] = old[i] + x
            prefix[j][i] = s + x
            row(j, i + 1, need - x, s + x, old, pp, first)
        lam[i] = old[i]

    letter(1)
    return result


def rim_hook_reduce(c, r, k):
    """Reduce a shape with at most ``r`` rows into the ``r x k`` rectangle.

    Works on beta-numbers ``c_i + r - i``: each removed ``n``-rim hook lowers
    one of them by ``n``.  Returns ``(sign, partition, degree)``, or ``None``
    when two residues collide and the class vanishes.
    """
    n = r + k
    d = 0
    res = []
    for i in range(r):
        q, m = divmod(c[i] + r - 1 - i, n)
        d += q
        res.append(m)
    if len(set(res)) != r:
        return None
    inversions = sum(1 for i in range(r) for j in range(i + 1, r) if res[i] < res[j])
    sign = -1 if (inversions + (r - 1) * d) % 2 else 1
    res.sort(reverse=True)
    return sign, tuple(res[i] - (r - 1 - i) for i in range(r)), d


def quantum_expand(a, b, r, k):
    """Quantum product ``sigma_a * sigma_b`` in ``QH*(Gr(r, r + k))``.

    Returns ``{(c, d): coefficient}`` with zero entries removed.
    """
    out = {}
    for shape, coeff in lr_product(a, b, r).items():
        red = rim_hook_reduce(shape, r, k)
        if red is None:
            continue
        sign, part, d = red
        out[(part, d)] = out.get((part, d), 0) + sign * coeff
    return {key: v for key, v in sorted(out.items()) if v}

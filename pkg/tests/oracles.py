"""Independent reference implementations used only by the tests.

None of these share code with the package: quantum products come from the
quantum Pieri rule for special classes combined with the determinantal
(Giambelli) formula, partitions and transposes from brute force over cells,
and LP optima from enumerating every basic solution.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# -- partitions ---------------------------------------------------------------

def partitions_brute(r, k):
    return sorted(p for p in itertools.product(range(k + 1), repeat=r) if all(p[i] >= p[i + 1] for i in range(r - 1)))


def transpose_cells(a, k):
    cells = {(i, j) for i, ai in enumerate(a) for j in range(ai)}
    return tuple(sum(1 for i in range(len(a)) if (i, j) in cells) for j in range(k))


# -- quantum products via Pieri + Giambelli -----------------------------------

def _horizontal_strips(lam, p, k):
    """Classical Pieri: mu / lam a horizontal strip of size p inside r x k."""
    r = len(lam)
    out = []

    def rec(i, left, mu):
        if i == r:
            if left == 0:
                out.append(tuple(mu))
            return
        top = k if i == 0 else lam[i - 1]
        for x in range(0, min(left, top - lam[i]) + 1):
            rec(i + 1, left - x, mu + [lam[i] + x])

    rec(0, p, [])
    return out


def _quantum_pieri_terms(lam, p, k):
    """``q``-terms of ``sigma_p * sigma_lam``.

    The ``nu`` interlace the shape with a full first column removed:
    ``lam_1 - 1 >= nu_1 >= lam_2 - 1 >= ... >= lam_r - 1 >= nu_r >= 0``
    with ``|nu| = |lam| + p - n``.  Needs ``lam_r >= 1``.
    """
    r = len(lam)
    n = r + k
    if lam[-1] == 0:
        return []
    size = sum(lam) + p - n
    if size < 0:
        return []
    out = []

    def rec(i, left, nu):
        if i == r:
            if left == 0:
                out.append(tuple(nu))
            return
        hi = lam[i] - 1
        lo = lam[i + 1] - 1 if i + 1 < r else 0
        for x in range(max(lo, 0), hi + 1):
            if x <= left:
                rec(i + 1, left - x, nu + [x])

    rec(0, size, [])
    return out


def special_times(p, vec, r, k):
    """``sigma_p * vec`` where ``vec`` maps ``(lam, d) -> coeff``."""
    if p < 0 or p > k:
        return {}
    out = {}
    for (lam, d), v in vec.items():
        for mu in _horizontal_strips(lam, p, k):
            out[(mu, d)] = out.get((mu, d), 0) + v
        for nu in _quantum_pieri_terms(lam, p, k):
            out[(nu, d + 1)] = out.get((nu, d + 1), 0) + v
    return {key: v for key, v in out.items() if v}


def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def quantum_product_oracle(a, b, r, k):
    """``sigma_a * sigma_b`` via ``sigma_a = det(sigma_{a_i + j - i})``."""
    a = tuple(a)
    length = sum(1 for x in a if x)
    start = {(tuple(b), 0): 1}
    if length == 0:
        return dict(start)
    total = {}
    for perm in itertools.permutations(range(length)):
        parts = [a[i] + perm[i] - i for i in range(length)]
        if any(x < 0 or x > k for x in parts):
            continue
        vec = start
        for x in parts:
            if x:
                vec = special_times(x, vec, r, k)
            if not vec:
                break
        s = _perm_sign(perm)
        for key, v in vec.items():
            total[key] = total.get(key, 0) + s * v
    return {key: v for key, v in sorted(total.items()) if v}


# -- LP by vertex enumeration ---------------------------------------------------

def _solve_square(rows, rhs):
    """Exact Gaussian elimination; None when singular."""
    m = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(rows, rhs)]
    for col in range(m):
        piv = next((i for i in range(col, m) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col] / aug[col][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][m] / aug[i][i] for i in range(m)]


def brute_force_lp(objective, constraints, dim):
    """Minimum over all vertices of ``{form >= 0 / == 0}``.

    ``objective`` and each constraint form are ``(constant, dense coeffs)``;
    constraints are ``(constant, coeffs, is_equality)``.  Returns
    ``(value, point)`` or ``None`` when no vertex is feasible.  Only
    meaningful for pointed, bounded feasible regions.
    """
    best = None
    for sub in itertools.combinations(range(len(constraints)), dim):
        rows = [constraints[i][1] for i in sub]
        rhs = [-constraints[i][0] for i in sub]
        x = _solve_square(rows, rhs)
        if x is None or not _feasible(x, constraints):
            continue
        val = objective[0] + sum(c * v for c, v in zip(objective[1], x))
        if best is None or val < best[0]:
            best = (val, tuple(x))
    return best


def _feasible(x, constraints):
    for const, coeffs, eq in constraints:
        v = const + sum(c * xi for c, xi in zip(coeffs, x))
        if (eq and v != 0) or v < 0:
            return False
    return True

"""Classical and quantum Littlewood-Richardson coefficients.

Quantum products in ``QH*(Gr(r, n))`` are computed by rim-hook reduction:
expand the classical Schur product keeping shapes with at most ``r`` rows,
then bring each shape back into the ``r x k`` rectangle by removing ``n``-rim
hooks.  On beta-numbers ``beta_i = c_i + r - i`` removing a hook subtracts
``n`` from one of them, so the whole reduction is: reduce every beta-number
mod ``n``, give up if two residues collide, and otherwise collect one power of
``q`` and a factor ``(-1)^(r-1)`` per removed hook together with the sign of
the sorting permutation.
"""

from __future__ import annotations

import os
import shelve
import threading
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from . import young
from .kernel import quantum_expand, rim_hook_reduce  # noqa: F401

CACHE_SIZE = int(os.environ.get("HORNLAB_CACHE_SIZE", "200000"))


@dataclass(frozen=True)
class QIndex:
    """``(r, k; a, b, c; d)``; ``d`` may be negative for an invalid orbit image."""

    r: int
    k: int
    a: tuple
    b: tuple
    c: tuple
    d: int

    @property
    def n(self) -> int:
        return self.r + self.k

    @property
    def valid(self) -> bool:
        return self.d >= 0

    @property
    def degree_consistent(self) -> bool:
        return self.n * self.d == sum(self.a) + sum(self.b) - sum(self.c)

    def order_key(self):
        return (self.d, self.r, self.a, self.b, self.c)

    def __str__(self) -> str:
        return format_qindex(self)

    @classmethod
    def make(cls, r, k, a, b, c, d):
        return cls(
            r,
            k,
            young.check_partition(young.pad(a, r), r, k),
            young.check_partition(young.pad(b, r), r, k),
            young.check_partition(young.pad(c, r), r, k),
            int(d),
        )


def format_qindex(t: QIndex) -> str:
    fp = young.format_partition
    return f"{t.r} {t.k} ; {fp(t.a)} ; {fp(t.b)} ; {fp(t.c)} ; {t.d}"


def parse_qindex(text: str) -> QIndex:
    fields = [f.strip() for f in text.strip().split(";")]
    if len(fields) != 5:
        raise ValueError(f"expected 'r k ; a ; b ; c ; d', got {text!r}")
    rk = fields[0].split()
    if len(rk) != 2:
        raise ValueError(f"expected 'r k' in {fields[0]!r}")
    r, k = int(rk[0]), int(rk[1])
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    parts = [young.parse_partition(f, r) for f in fields[1:4]]
    return QIndex.make(r, k, *parts, int(fields[4]))


# -- classical coefficients ---------------------------------------------------

def classical_lr(a, b, c) -> int:
    """Number of LR tableaux of skew shape ``c/a`` and content ``b``.

    Cells are filled one at a time in reverse reading order (rows top to
    bottom, each row right to left) so that semistandardness and the lattice
    condition can be checked on the prefix.  Independent of the row-wise
    kernel used by :func:`quantum_product`.
    """
    a = [x for x in a if x]
    b = [x for x in b if x]
    c = [x for x in c if x]
    if sum(a) + sum(b) != sum(c):
        return 0
    if len(a) > len(c) or any(a[i] > c[i] for i in range(len(a))):
        return 0
    a = a + [0] * (len(c) - len(a))
    cells = [(i, j) for i in range(len(c)) for j in range(c[i] - 1, a[i] - 1, -1)]
    if not cells:
        return 1
    m = len(b)
    filling = {}
    counts = [0] * (m + 1)

    def rec(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        right = filling.get((i, j + 1), m)
        above = filling.get((i - 1, j), 0) if i > 0 and j >= a[i - 1] else 0
        total = 0
        for v in range(above + 1, right + 1):
            if counts[v] >= b[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            total += rec(pos + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return rec(0)


# -- quantum products ---------------------------------------------------------

_spill_lock = threading.Lock()
_spill_db = None


def _spill():
    global _spill_db
    path = os.environ.get("HORNLAB_CACHE_DIR")
    if not path:
        return None
    with _spill_lock:
        if _spill_db is None:
            os.makedirs(path, exist_ok=True)
            _spill_db = shelve.open(os.path.join(path, "products"))
    return _spill_db


@lru_cache(maxsize=CACHE_SIZE)
def _product(r: int, k: int, a: tuple, b: tuple):
    db = _spill()
    key = f"{r} {k} {a} {b}"
    if db is not None:
        with _spill_lock:
            hit = db.get(key)
        if hit is not None:
            return MappingProxyType(hit)
    out = quantum_expand(a, b, r, k)
    if any(v < 0 for v in out.values()):
        raise ArithmeticError(f"negative quantum coefficient in sigma_{a} * sigma_{b}")
    if db is not None:
        with _spill_lock:
            db[key] = out
    return MappingProxyType(out)


def product_unchecked(a: tuple, b: tuple, r: int, k: int):
    """:func:`quantum_product` without input validation, for hot loops."""
    if b < a:
        a, b = b, a
    return _product(r, k, a, b)


def quantum_product(a, b, r: int, k: int):
    """Expansion of ``sigma_a * sigma_b`` in ``QH*(Gr(r, r + k))``.

    Returns a read-only mapping ``(c, d) -> coefficient`` with only positive
    entries.
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != r or len(b) != r:
        raise ValueError(f"partitions must have exactly {r} parts")
    young.check_partition(a, r, k)
    young.check_partition(b, r, k)
    if b < a:
        a, b = b, a
    return _product(r, k, a, b)


def quantum_lr(t: QIndex) -> int:
    if t.d < 0 or not t.degree_consistent:
        return 0
    return quantum_product(t.a, t.b, t.r, t.k).get((t.c, t.d), 0)


def cache_clear():
    _product.cache_clear()

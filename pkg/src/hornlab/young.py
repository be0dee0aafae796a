"""Young diagrams inscribed in an r x k rectangle.

A partition is stored as a plain tuple of exactly ``r`` non-negative integers,
weakly decreasing and bounded by ``k``.  Tuples keep everything hashable and
cheap, which matters once the scanner starts keying caches on them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

Partition = tuple


def is_partition(parts: Iterable[int], r: int, k: int) -> bool:
    parts = tuple(parts)
    if len(parts) != r:
        return False
    if any(p < 0 or p > k for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(r - 1))


def check_partition(parts: Iterable[int], r: int, k: int) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts, r, k):
        raise ValueError(f"{parts} is not a partition in the {r}x{k} rectangle")
    return parts


def pad(parts: Iterable[int], r: int) -> Partition:
    """Zero-pad (or strip trailing zeros) to exactly ``r`` parts."""
    parts = [p for p in parts]
    while len(parts) > r and parts[-1] == 0:
        parts.pop()
    if len(parts) > r:
        raise ValueError(f"{tuple(parts)} has more than {r} non-zero parts")
    return tuple(parts) + (0,) * (r - len(parts))


def weight(a: Partition) -> int:
    return sum(a)


@lru_cache(maxsize=None)
def enumerate_partitions(r: int, k: int) -> tuple[Partition, ...]:
    """All partitions in the r x k rectangle, lexicographically increasing.

    The count is ``binomial(r + k, r)``.
    """
    if r < 1 or k < 1:
        raise ValueError("rectangle dimensions must be positive")
    # combinations_with_replacement yields weakly increasing tuples in
    # lexicographic order; reversing each gives partitions but scrambles order
    out = [tuple(reversed(c)) for c in itertools.combinations_with_replacement(range(k + 1), r)]
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def partition_index(r: int, k: int) -> dict:
    return {a: i for i, a in enumerate(enumerate_partitions(r, k))}


def conjugate(a: Partition, k: int | None = None) -> Partition:
    """Transpose of the diagram, padded to ``k`` parts.

    ``a*_i = max{j : a_j >= i}``.  When ``k`` is omitted the largest part is
    used as the length.
    """
    if k is None:
        k = a[0] if a else 0
    out = []
    for i in range(1, k + 1):
        j = 0
        while j < len(a) and a[j] >= i:
            j += 1
        out.append(j)
    return tuple(out)


def complement(a: Partition, k: int) -> Partition:
    """Complement inside the r x k rectangle: ``(k - a_r, ..., k - a_1)``."""
    return tuple(k - x for x in reversed(a))


def parse_partition(text: str, r: int | None = None) -> Partition:
    """Parse ``6,6,3,3,0,0`` or the compact digit form ``663300``."""
    text = text.strip()
    if not text:
        raise ValueError("empty partition")
    if "," in text:
        parts = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        parts = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse partition {text!r}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{text!r} is not weakly decreasing")
    if r is not None:
        parts = pad(parts, r)
    return parts


def format_partition(a: Partition) -> str:
    return ",".join(str(x) for x in a)

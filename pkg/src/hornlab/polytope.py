"""Half-space forms, alcove/chamber constraints and membership.

Constraint systems are streams of :class:`Row` objects: alcove or chamber rows
first, then one row per facet index.  Nothing here needs the whole system in
memory; membership folds over the stream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from . import symmetry
from .linear import LinearForm, SpectrumTriple
from .schubert import QIndex

MODES = ("delta", "cone", "deltak")


def halfspace_form(t: QIndex) -> LinearForm:
    """``d + sum gamma_{k+i-c_i} - sum alpha_{k+i-a_i} - sum beta_{k+i-b_i}``."""
    n = t.n
    items = []
    for i in range(1, t.r + 1):
        items.append((t.k + i - t.a[i - 1] - 1, -1))
        items.append((n + t.k + i - t.b[i - 1] - 1, -1))
        items.append((2 * n + t.k + i - t.c[i - 1] - 1, 1))
    return LinearForm.from_items(t.d, items, 3 * n)


@dataclass(frozen=True)
class Row:
    """One constraint: ``form == 0`` when ``equality`` else ``form >= 0``.

    ``tag`` is a string naming an alcove row (``"alcove alpha 3"``) or a
    facet index and group element (``"6 9 ; ... ; 1 @ 0,0"``).
    """

    form: LinearForm
    equality: bool
    tag: str
    index: QIndex | None = None
    element: symmetry.GroupElement | None = None


_NAMES = ("alpha", "beta", "gamma")


def _vector_rows(n: int, alcove: bool) -> Iterator[Row]:
    dim = 3 * n
    for b, name in enumerate(_NAMES):
        off = b * n
        yield Row(LinearForm.from_items(0, [(off + i, 1) for i in range(n)], dim), True, f"sum {name}")
        for i in range(n - 1):
            yield Row(
                LinearForm.from_items(0, [(off + i, 1), (off + i + 1, -1)], dim),
                False,
                f"chamber {name} {i + 1}",
            )
        if alcove:
            yield Row(LinearForm.from_items(1, [(off, -1), (off + n - 1, 1)], dim), False, f"alcove {name}")


def chamber_constraints(n: int) -> list:
    if n < 2:
        raise ValueError("n must be at least 2")
    return list(_vector_rows(n, alcove=False))


def alcove_constraints(n: int) -> list:
    if n < 2:
        raise ValueError("n must be at least 2")
    return list(_vector_rows(n, alcove=True))


def generate_system(n: int, mode: str, *, indices: Iterable[QIndex] | None = None) -> Iterator[Row]:
    """Stream the rows of the chosen system in deterministic order.

    ``delta``: alcove plus ``h_t >= 0`` for every ``t`` with coefficient one.
    ``cone``: chamber plus the degree-zero rows.
    ``deltak``: alcove plus ``h_t o g^-1`` for degree-zero ``t`` and every
    ``g`` in ``Z_n x Z_n``.

    ``indices`` overrides the facet index stream (it must already be the
    right set for ``mode``); by default it comes from the scanner.
    """
    from . import scanner

    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if n < 2:
        raise ValueError("n must be at least 2")
    yield from _vector_rows(n, alcove=(mode != "cone"))
    if indices is None:
        indices = scanner.all_coefficient_one(n, degree_zero=(mode != "delta"))
    if mode == "deltak":
        elements = symmetry.group_elements(n, "G")
        for t in indices:
            h = halfspace_form(t)
            for g in elements:
                ginv = g.inverse(n)
                yield Row(symmetry.transport_form(h, ginv), False, f"{t} @ {g}", t, g)
    else:
        for t in indices:
            yield Row(halfspace_form(t), False, str(t), t)


@dataclass
class Verdict:
    status: str  # "inside", "boundary" or "violated"
    tight: list = field(default_factory=list)
    violated: list = field(default_factory=list)  # (tag, value) pairs
    rows_checked: int = 0

    def merge(self, other: "Verdict") -> "Verdict":
        tight = sorted(self.tight + other.tight)
        violated = sorted(self.violated + other.violated)
        return Verdict(_status(tight, violated), tight, violated, self.rows_checked + other.rows_checked)


def _status(tight, violated) -> str:
    if violated:
        return "violated"
    if tight:
        return "boundary"
    return "inside"


def membership(p: SpectrumTriple, rows: Iterable[Row]) -> Verdict:
    """Exact verdict for ``p`` against a stream of rows.

    Tight rows are inequalities evaluating to exactly zero; violated rows are
    negative inequalities and non-zero equalities, reported with their value.
    Both lists come back sorted by tag so any sharding of the stream merges to
    the same verdict.
    """
    x = p.flat()
    tight = []
    violated = []
    count = 0
    for row in rows:
        if row.form.dim != len(x):
            raise ValueError(f"row {row.tag!r} has dimension {row.form.dim}, point has {len(x)}")
        v = row.form(x)
        count += 1
        if row.equality:
            if v != 0:
                violated.append((row.tag, v))
        elif v < 0:
            violated.append((row.tag, v))
        elif v == 0:
            tight.append(row.tag)
    tight.sort()
    violated.sort()
    return Verdict(_status(tight, violated), tight, violated, count)


def membership_mode(p: SpectrumTriple, n: int, mode: str) -> Verdict:
    if p.n != n:
        raise ValueError(f"point has n={p.n}, system has n={n}")
    return membership(p, generate_system(n, mode))


def anchor_points(signs_a, signs_b) -> SpectrumTriple:
    """Spectra of diagonal +-1 matrices ``A``, ``B`` and their product ``AB``."""
    signs_a = tuple(signs_a)
    signs_b = tuple(signs_b)
    if len(signs_a) != len(signs_b):
        raise ValueError("sign patterns must have equal length")
    if any(s not in (1, -1) for s in signs_a + signs_b):
        raise ValueError("sign patterns must consist of +1 and -1")
    prod = tuple(x * y for x, y in zip(signs_a, signs_b))
    return SpectrumTriple(_diag_spectrum(signs_a), _diag_spectrum(signs_b), _diag_spectrum(prod))


def _diag_spectrum(signs) -> tuple:
    minus = sum(1 for s in signs if s == -1)
    if minus % 2:
        raise ValueError("odd number of -1 entries: determinant is not 1")
    m = minus // 2
    n = len(signs)
    half = Fraction(1, 2)
    return (half,) * m + (Fraction(0),) * (n - 2 * m) + (-half,) * m


def lower_bound_vertices(n: int) -> list:
    """The ``n^2`` points ``g O`` for ``g`` in ``Z_n x Z_n``, in (i, j) order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    o = SpectrumTriple.origin(n)
    return [symmetry.act_on_point(symmetry.GroupElement(i, j), o) for i, j in itertools.product(range(n), repeat=2)]


def dedup_rows(rows: Iterable[Row]) -> Iterator[Row]:
    """Drop rows whose form repeats an earlier one (keeps the first tag)."""
    seen = set()
    for row in rows:
        key = (row.equality, row.form)
        if key in seen:
            continue
        seen.add(key)
        yield row


def _convex_combination(points, rng, scale: int):
    weights = [rng.randint(0, scale) for _ in points]
    if not any(weights):
        weights[rng.randrange(len(points))] = 1
    total = sum(weights)
    n = points[0].n
    acc = [Fraction(0)] * (3 * n)
    for w, p in zip(weights, points):
        if w:
            for i, x in enumerate(p.flat()):
                acc[i] += w * x
    return SpectrumTriple.from_flat([v / total for v in acc], n)


def random_hull_point(n: int, rng, scale: int = 9) -> SpectrumTriple:
    """Exact random point of ``conv(GO)``: integer weights in ``[0, scale]``."""
    return _convex_combination(lower_bound_vertices(n), rng, scale)


def random_alcove_point(n: int, rng, scale: int = 9) -> SpectrumTriple:
    """Exact random point of the alcove cubed, each vector drawn independently."""
    verts = [symmetry.omega_power((Fraction(0),) * n, j) for j in range(n)]
    vecs = []
    for _ in range(3):
        weights = [rng.randint(0, scale) for _ in verts]
        if not any(weights):
            weights[rng.randrange(n)] = 1
        total = sum(weights)
        vecs.append(tuple(sum((w * v[i] for w, v in zip(weights, verts)), Fraction(0)) / total for i in range(n)))
    return SpectrumTriple(*vecs)

"""The Z_n x Z_n action and the order-12 symmetry group on points and indices.

A group element is ``(i, j)`` together with an optional word in the letters
``s`` (conjugation/star), ``w`` (swap of the first two slots) and ``p``
(Poincare duality).  It acts by applying the letters left to right and then
shifting by ``(i, j)``.  On points the shift is
``(alpha, beta, gamma) -> (Omega^i alpha, Omega^j beta, Omega^(i+j) gamma)``;
on indices it is multiplication by powers of the special class
``sigma_k`` (quantum Pieri).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import young
from .linear import LinearForm, SpectrumTriple, reverse_negate
from .schubert import QIndex

# the twelve elements of the finite group generated by s, w, p
G0_WORDS = ("", "w", "p", "pp", "wp", "pw", "s", "sw", "sp", "spp", "swp", "spw")

_ELEMENT_RE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*([swp]*)\s*$")


@dataclass(frozen=True)
class GroupElement:
    i: int
    j: int
    word: str = ""

    def reduced(self, n: int) -> "GroupElement":
        return GroupElement(self.i % n, self.j % n, self.word)

    def compose(self, other: "GroupElement", n: int) -> "GroupElement":
        """``self * other`` for pure shifts."""
        if self.word or other.word:
            raise NotImplementedError("composition is only defined for pure shifts")
        return GroupElement((self.i + other.i) % n, (self.j + other.j) % n)

    def inverse(self, n: int) -> "GroupElement":
        if self.word:
            raise NotImplementedError("inverse is only defined for pure shifts")
        return GroupElement((-self.i) % n, (-self.j) % n)

    def __str__(self) -> str:
        return f"{self.i},{self.j}{self.word}"


def parse_element(text: str) -> GroupElement:
    m = _ELEMENT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse group element {text!r}")
    return GroupElement(int(m.group(1)), int(m.group(2)), m.group(3))


def group_elements(n: int, group: str = "G"):
    words = ("",) if group == "G" else G0_WORDS
    return [GroupElement(i, j, w) for w in words for i in range(n) for j in range(n)]


# -- points -------------------------------------------------------------------

def omega(x):
    n = len(x)
    if n < 2:
        raise ValueError("omega needs n >= 2")
    s = Fraction(1, n)
    return tuple(Fraction(v) + s for v in x[1:]) + (Fraction(x[0]) - 1 + s,)


def omega_power(x, e: int):
    e %= len(x)
    for _ in range(e):
        x = omega(x)
    return tuple(Fraction(v) for v in x)


def _point_letter(p: SpectrumTriple, letter: str) -> SpectrumTriple:
    if letter == "s":
        return p.star()
    if letter == "w":
        return SpectrumTriple(p.beta, p.alpha, p.gamma)
    if letter == "p":
        return SpectrumTriple(p.beta, reverse_negate(p.gamma), reverse_negate(p.alpha))
    raise ValueError(f"unknown letter {letter!r}")


def act_on_point(g: GroupElement, p: SpectrumTriple) -> SpectrumTriple:
    for letter in g.word:
        p = _point_letter(p, letter)
    return SpectrumTriple(
        omega_power(p.alpha, g.i),
        omega_power(p.beta, g.j),
        omega_power(p.gamma, g.i + g.j),
    )


# -- forms --------------------------------------------------------------------

def _form_omega(w, const, n):
    """``f o Omega`` for one block of weights ``w``."""
    const = const + sum(w, Fraction(0)) / n - w[-1]
    return [w[-1]] + w[:-1], const


def transport_form(form: LinearForm, g: GroupElement) -> LinearForm:
    """The form ``x -> form(g x)``."""
    n = form.dim // 3
    dense = form.dense()
    blocks = [dense[:n], dense[n : 2 * n], dense[2 * n :]]
    const = form.constant
    for b, e in enumerate((g.i % n, g.j % n, (g.i + g.j) % n)):
        for _ in range(e):
            blocks[b], const = _form_omega(blocks[b], const, n)
    for letter in reversed(g.word):
        wa, wb, wc = blocks
        if letter == "s":
            blocks = [reverse_negate(wa), reverse_negate(wb), reverse_negate(wc)]
        elif letter == "w":
            blocks = [wb, wa, wc]
        elif letter == "p":
            # f(beta, gamma*, alpha*)
            blocks = [reverse_negate(wc), wa, reverse_negate(wb)]
        blocks = [list(x) for x in blocks]
    return LinearForm.from_dense(const, blocks[0] + blocks[1] + blocks[2])


# -- indices ------------------------------------------------------------------

def pieri_step(a, k: int):
    """One multiplication by ``sigma_k``: returns ``(a', q-degree)``."""
    if a[-1] == 0:
        return (k,) + tuple(a[:-1]), 0
    return tuple(x - 1 for x in a), 1


def pieri_shift(a, i: int, k: int):
    """``sigma_k^i * sigma_a = sigma_a' q^d'``.

    Negative ``i`` is brought into range with ``sigma_k^n = q^k``, so the
    returned degree can then be negative.
    """
    n = len(a) + k
    d = 0
    if i < 0:
        m = -(i // n)
        i += m * n
        d -= m * k
    a = tuple(a)
    for _ in range(i):
        a, dd = pieri_step(a, k)
        d += dd
    return a, d


def shift_index(t: QIndex, i: int, j: int) -> QIndex:
    n = t.n
    i %= n
    j %= n
    a2, da = pieri_shift(t.a, i, t.k)
    b2, db = pieri_shift(t.b, j, t.k)
    c2, dc = pieri_shift(t.c, i + j, t.k)
    return QIndex(t.r, t.k, a2, b2, c2, t.d + dc - da - db)


def star(t: QIndex) -> QIndex:
    return QIndex(
        t.k, t.r,
        young.conjugate(t.a, t.k), young.conjugate(t.b, t.k), young.conjugate(t.c, t.k),
        t.d,
    )


def swap_dual(t: QIndex, which: str) -> QIndex:
    if which == "swap":
        return QIndex(t.r, t.k, t.b, t.a, t.c, t.d)
    if which == "dual":
        return QIndex(t.r, t.k, t.b, young.complement(t.c, t.k), young.complement(t.a, t.k), t.d)
    raise ValueError(f"unknown involution {which!r}")


_LETTER_ACTION = {
    "s": star,
    "w": lambda t: swap_dual(t, "swap"),
    "p": lambda t: swap_dual(t, "dual"),
}


def act_on_index(g: GroupElement, t: QIndex) -> QIndex:
    """Image of ``t``; a negative degree marks an image outside the valid set."""
    for letter in g.word:
        t = _LETTER_ACTION[letter](t)
    return shift_index(t, g.i, g.j)


@dataclass(frozen=True)
class Orbit:
    members: frozenset
    has_invalid: bool

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=QIndex.order_key))


def orbit(t: QIndex, group: str = "G") -> Orbit:
    images = set()
    invalid = False
    for w in ("",) if group == "G" else G0_WORDS:
        base = t
        for letter in w:
            base = _LETTER_ACTION[letter](base)
        for i in range(t.n):
            for j in range(t.n):
                img = shift_index(base, i, j)
                if img.valid:
                    images.add(img)
                else:
                    invalid = True
    return Orbit(frozenset(images), invalid)


def canonical_rep(t: QIndex, group: str = "G") -> QIndex:
    """Smallest orbit member under the order ``(d, r, a, b, c)``."""
    return min(orbit(t, group).members, key=QIndex.order_key)

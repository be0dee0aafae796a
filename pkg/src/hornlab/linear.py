"""Exact rational points and affine functionals on (alpha, beta, gamma) space."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' text")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal input {text!r} is not allowed; use p/q")
    return Fraction(text)


def reverse_negate(v):
    """``(x_1, ..., x_n) -> (-x_n, ..., -x_1)``."""
    return tuple(-x for x in reversed(v))


@dataclass(frozen=True)
class SpectrumTriple:
    alpha: tuple
    beta: tuple
    gamma: tuple

    @property
    def n(self) -> int:
        return len(self.alpha)

    @classmethod
    def make(cls, alpha, beta, gamma, *, normalize: bool = True):
        """Build a triple with exact entries.

        With ``normalize`` each vector is sorted into weakly decreasing order;
        a warning is issued when that changed anything.
        """
        vecs = []
        for v in (alpha, beta, gamma):
            v = tuple(to_fraction(x) for x in v)
            if normalize:
                s = tuple(sorted(v, reverse=True))
                if s != v:
                    warnings.warn("spectrum reordered into decreasing order", stacklevel=2)
                v = s
            vecs.append(v)
        if not len(vecs[0]) == len(vecs[1]) == len(vecs[2]):
            raise ValueError("alpha, beta, gamma must have equal length")
        return cls(*vecs)

    @classmethod
    def origin(cls, n: int):
        z = (Fraction(0),) * n
        return cls(z, z, z)

    def flat(self) -> tuple:
        return self.alpha + self.beta + self.gamma

    @classmethod
    def from_flat(cls, x, n: int):
        x = tuple(to_fraction(v) for v in x)
        if len(x) != 3 * n:
            raise ValueError(f"expected {3 * n} coordinates, got {len(x)}")
        return cls(x[:n], x[n : 2 * n], x[2 * n :])

    def star(self):
        return SpectrumTriple(reverse_negate(self.alpha), reverse_negate(self.beta), reverse_negate(self.gamma))

    def in_chamber(self) -> bool:
        return all(_chamber_ok(v) for v in (self.alpha, self.beta, self.gamma))

    def in_alcove(self) -> bool:
        return all(_chamber_ok(v) and v[0] - v[-1] <= 1 for v in (self.alpha, self.beta, self.gamma))


def _chamber_ok(v) -> bool:
    return sum(v) == 0 and all(v[i] >= v[i + 1] for i in range(len(v) - 1))


@dataclass(frozen=True)
class LinearForm:
    """``constant + sum(coeffs[i] * x[i])`` over the flat 3n coordinates.

    ``coeffs`` is a sparse tuple of ``(index, value)`` pairs, 0-based, sorted
    by index, with no zero values.
    """

    constant: Fraction
    coeffs: tuple
    dim: int

    @classmethod
    def from_dense(cls, constant, dense):
        items = tuple((i, to_fraction(v)) for i, v in enumerate(dense) if v)
        return cls(to_fraction(constant), items, len(dense))

    @classmethod
    def from_items(cls, constant, items, dim: int):
        acc = {}
        for i, v in items:
            if not 0 <= i < dim:
                raise ValueError(f"coordinate {i} out of range for dimension {dim}")
            acc[i] = acc.get(i, 0) + to_fraction(v)
        return cls(to_fraction(constant), tuple((i, v) for i, v in sorted(acc.items()) if v), dim)

    def dense(self) -> list:
        out = [Fraction(0)] * self.dim
        for i, v in self.coeffs:
            out[i] = v
        return out

    def __call__(self, x) -> Fraction:
        if isinstance(x, SpectrumTriple):
            x = x.flat()
        if len(x) != self.dim:
            raise ValueError(f"point has dimension {len(x)}, form expects {self.dim}")
        return self.constant + sum((v * x[i] for i, v in self.coeffs), Fraction(0))

    def scale(self, s):
        s = to_fraction(s)
        return LinearForm(self.constant * s, tuple((i, v * s) for i, v in self.coeffs), self.dim)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        return LinearForm.from_items(self.constant + other.constant, self.coeffs + other.coeffs, self.dim)

    def __sub__(self, other):
        return self + (-other)

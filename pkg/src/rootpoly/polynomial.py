"""Exact univariate polynomials and h-polynomials of pure simplicial complexes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Polynomial:
    """Coefficients lowest degree first, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_histogram(cls, counts: Iterable[int]) -> "Polynomial":
        """Sum of x^k over the given exponents."""
        out: dict[int, int] = {}
        for k in counts:
            out[k] = out.get(k, 0) + 1
        return cls([out.get(i, 0) for i in range(max(out, default=-1) + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative_integral(self) -> bool:
        return self.is_integral() and all(c >= 0 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def reflect(self, k: int) -> "Polynomial":
        """x^k p(1/x); requires deg p <= k."""
        if self.degree > k:
            raise ValueError(f"degree {self.degree} exceeds reflection exponent {k}")
        return Polynomial(self[k - i] for i in range(k + 1))

    def shift(self, a) -> "Polynomial":
        """p(x + a)."""
        return self(Polynomial([a, 1]))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(Fraction(x) for x in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def format(self, var: str = "t") -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            coef = str(mag) if (mag != 1 or k == 0) else ""
            body = f"{coef}*{mono}" if coef and mono and mag.denominator != 1 else coef + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()})"


def _lift(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def binomial_poly(d: int, shift: int) -> Polynomial:
    """binom(t + shift, d) as a polynomial in t."""
    p = Polynomial([1])
    for i in range(d):
        p = p * Polynomial([shift - i, 1])
    return p * Fraction(1, factorial(d))


def interpolate(points: Sequence[tuple[int, int]]) -> Polynomial:
    """Lagrange interpolation through (x, y) pairs, exactly."""
    result = Polynomial()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial([yi])
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * Polynomial([Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
        result = result + term
    return result


# -- simplicial complexes -------------------------------------------------------

def complex_from_facets(facets: Iterable[Iterable[int]]) -> frozenset:
    """All faces of the given facets, deduplicated."""
    faces = set()
    for F in facets:
        F = tuple(sorted(F))
        for k in range(len(F) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(F, k))
    return frozenset(faces)


def f_polynomial(faces: Iterable[frozenset], d: int) -> Polynomial:
    """f(y) = sum over faces of y^(d - dim F)."""
    counts: dict[int, int] = {}
    for F in faces:
        k = d - (len(F) - 1)
        counts[k] = counts.get(k, 0) + 1
    return Polynomial([counts.get(i, 0) for i in range(max(counts, default=-1) + 1)])


def h_polynomial_of_faces(faces: Iterable[frozenset], d: int) -> Polynomial:
    """h(x) = f(x - 1)."""
    return f_polynomial(faces, d).shift(-1)


def hstar_from_h(h: Polynomial, d: int) -> Polynomial:
    """sum h*_i t^i = t^(d+1) h(1/t)."""
    return h.reflect(d + 1)


def ehrhart_from_hstar(hstar: Polynomial, d: int) -> Polynomial:
    """sum_k h*_k binom(t + d - k, d)."""
    out = Polynomial()
    for k in range(d + 1):
        if hstar[k]:
            out = out + binomial_poly(d, d - k) * hstar[k]
    return out


# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _trim[T: (int, Fraction)](coeffs: Sequence[T]) -> list[T]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


@dataclass(frozen=True, slots=True)
class Poly:
    """Integer polynomial, coefficients ascending (c0, c1, ..., cd); the zero polynomial is ()."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) for c in self.coeffs])))

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x_minus(cls, root: int) -> Poly:
        return cls((-root, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> Poly:
        result = cls.one()
        for r in roots:
            result = result * cls.x_minus(r)
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __mul__(self, other: Poly) -> Poly:
        if not self or not other:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    def __pow__(self, exponent: int) -> Poly:
        result = Poly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def synthetic_division(self, root: int) -> tuple[Poly, int]:
        """Divide by (x - root); returns the quotient and the remainder p(root)."""
        if not self:
            return Poly(()), 0
        carry = 0
        quot = []
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quot.append(carry)
        remainder = quot.pop()
        return Poly(tuple(reversed(quot))), remainder

    def root_multiplicity(self, root: int) -> int:
        count = 0
        p = self
        while p:
            q, r = p.synthetic_division(root)
            if r:
                break
            count += 1
            p = q
        return count

    def divisible_by_power(self, root: int, power: int) -> bool:
        """True iff (x - root)^power divides this polynomial."""
        return bool(self) and self.root_multiplicity(root) >= power

    def numeric_roots(self) -> list[float]:
        """Real parts of the roots, descending (the polynomials here have real roots)."""
        if self.degree < 1:
            return []
        roots = np.roots(np.array(list(reversed(self.coeffs)), dtype=float))
        return sorted((float(r) for r in np.real(roots)), reverse=True)

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if mag == 1 and i else str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# Rational helpers for the square-free split ------------------------------------------------------

FracPoly = list[Fraction]


def _f(p: Poly) -> FracPoly:
    return [Fraction(c) for c in p.coeffs]


def _fdivmod(a: FracPoly, b: FracPoly) -> tuple[FracPoly, FracPoly]:
    rem = list(a)
    if len(rem) < len(b):
        return [], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for k in range(len(quot) - 1, -1, -1):
        q = rem[k + len(b) - 1] / lead
        quot[k] = q
        if q:
            for i, c in enumerate(b):
                rem[k + i] -= q * c
    return _trim(quot), _trim(rem[: len(b) - 1])


def _fmonic(a: FracPoly) -> FracPoly:
    return [c / a[-1] for c in a] if a else []


def _fgcd(a: FracPoly, b: FracPoly) -> FracPoly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _fdivmod(a, b)[1]
    return _fmonic(a)


def _fsub(a: FracPoly, b: FracPoly) -> FracPoly:
    size = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)])


def _fderiv(a: FracPoly) -> FracPoly:
    return [i * c for i, c in enumerate(a) if i]


def _to_int(a: FracPoly) -> Poly:
    if any(c.denominator != 1 for c in a):
        raise ValueError("square-free factor is not integral")
    return Poly(tuple(int(c) for c in a))


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's square-free split of a monic integer polynomial: p = prod f_i^i, f_i monic, coprime.

    Only the non-trivial factors are returned, ordered by multiplicity.
    """
    if not p.is_monic():
        raise ValueError(f"square-free split needs a monic polynomial, got {p}")
    if p.degree < 1:
        return []
    f = _f(p)
    a = _fgcd(f, _fderiv(f))
    b = _fdivmod(f, a)[0]
    c = _fdivmod(_fderiv(f), a)[0]
    d = _fsub(c, _fderiv(b))
    factors: list[tuple[Poly, int]] = []
    i = 1
    while len(b) > 1:
        a = _fgcd(b, d)
        if len(a) > 1:
            factors.append((_to_int(a), i))
        b = _fdivmod(b, a)[0]
        c = _fdivmod(d, a)[0]
        d = _fsub(c, _fderiv(b))
        i += 1
    return factors

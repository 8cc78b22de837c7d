# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import math
import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from lapmult.errors import LimitExceeded, UnsupportedError
from lapmult.graph import Graph, iter_bits
from lapmult.polynomial import Poly, squarefree_decomposition

MAX_CHARPOLY_ORDER = 64
MAX_GENERAL_CONSTANT = 10**12


@dataclass(frozen=True, slots=True)
class IntMatrix:
    order: int
    entries: tuple[tuple[int, ...], ...]

    def principal(self, rows: Sequence[int]) -> IntMatrix:
        return IntMatrix(len(rows), tuple(tuple(self.entries[i][j] for j in rows) for i in rows))

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i] for i in range(self.order) for j in range(i))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.order, self.order)


def laplacian(g: Graph) -> IntMatrix:
    rows = []
    for v in range(g.order):
        row = [0] * g.order
        for u in iter_bits(g.rows[v]):
            row[u] = -1
        row[v] = g.degree(v)
        rows.append(tuple(row))
    return IntMatrix(g.order, tuple(rows))


def charpoly(m: IntMatrix) -> Poly:
    """det(xI - M), division free (Berkowitz over leading principal submatrices)."""
    n = m.order
    if n > MAX_CHARPOLY_ORDER:
        raise LimitExceeded(f"characteristic polynomial supports at most {MAX_CHARPOLY_ORDER} rows, got {n}")
    if n == 0:
        return Poly.one()
    a = m.entries
    # descending coefficients of the leading k x k block
    poly = [1, -a[0][0]]
    for k in range(1, n):
        row = a[k][:k]
        vec = [a[i][k] for i in range(k)]
        toeplitz = [1, -a[k][k]]
        for _ in range(k):
            toeplitz.append(-sum(map(operator.mul, row, vec)))
            vec = [sum(map(operator.mul, a[i][:k], vec)) for i in range(k)]
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(max(0, i - k - 1), min(i, k) + 1)) for i in range(k + 2)]
    return Poly(tuple(reversed(poly)))


@dataclass(frozen=True, slots=True)
class ExactSpectrum:
    """Integer eigenvalues with multiplicities (descending) plus whatever factor has no integer root."""

    order: int
    integer_part: tuple[tuple[int, int], ...]
    residual: Poly | None = None

    def __post_init__(self) -> None:
        total = sum(mult for _, mult in self.integer_part) + (self.residual.degree if self.residual else 0)
        if total != self.order:
            raise ValueError(f"spectrum accounts for {total} eigenvalues, expected {self.order}")

    @classmethod
    def from_values(cls, order: int, values: Iterable[int], residual: Poly | None = None) -> ExactSpectrum:
        counts = Counter(values)
        return cls(order, tuple(sorted(counts.items(), reverse=True)), residual)

    def integer_values(self) -> list[int]:
        return [value for value, mult in self.integer_part for _ in range(mult)]

    def charpoly(self) -> Poly:
        result = Poly.from_roots(self.integer_values())
        return result * self.residual if self.residual else result

    def multiplicity(self, value: int) -> int:
        return dict(self.integer_part).get(value, 0)

    def residual_factors(self) -> list[tuple[Poly, int]]:
        return squarefree_decomposition(self.residual) if self.residual else []

    def residual_roots(self) -> list[float]:
        roots: list[float] = []
        for factor, mult in self.residual_factors():
            roots.extend(r for r in factor.numeric_roots() for _ in range(mult))
        return sorted(roots, reverse=True)

    def eigenvalues(self) -> list[float]:
        return sorted([float(v) for v in self.integer_values()] + self.residual_roots(), reverse=True)

    def distinct_nonzero(self) -> list[tuple[float, int]]:
        """Distinct nonzero eigenvalues with exact multiplicities, descending by value."""
        pairs = [(float(value), mult) for value, mult in self.integer_part if value]
        for factor, mult in self.residual_factors():
            pairs.extend((root, mult) for root in factor.numeric_roots())
        return sorted(pairs, reverse=True)

    @property
    def distinct_count(self) -> int:
        zero = 1 if self.multiplicity(0) else 0
        return zero + len(self.distinct_nonzero())

    @property
    def is_integral(self) -> bool:
        return self.residual is None

    def __str__(self) -> str:
        parts = [f"{value}^{mult}" if mult > 1 else str(value) for value, mult in self.integer_part]
        if self.residual:
            parts.append(f"roots({self.residual})")
        return "{" + ", ".join(parts) + "}"


def _positive_divisors(value: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(value) + 1):
        if value % d == 0:
            small.append(d)
            if d * d != value:
                large.append(value // d)
    return small + large[::-1]


def extract_spectrum(p: Poly, laplacian: bool = False) -> ExactSpectrum:
    """Split a monic integer polynomial into integer roots (to full multiplicity) and a residual.

    Laplacian eigenvalues of an order-n graph lie in [0, n], so in Laplacian mode the candidate
    roots are the divisors of the trailing nonzero coefficient up to n. The default general mode tests signed
    divisors below the Cauchy root bound.
    """
    if not p.is_monic():
        raise ValueError(f"expected a monic polynomial, got {p}")
    order = p.degree
    counts: dict[int, int] = {}

    zeros = 0
    while zeros < len(p.coeffs) - 1 and p.coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        counts[0] = zeros
        p = Poly(p.coeffs[zeros:])

    if p.degree >= 1:
        constant = abs(p.coeffs[0])
        if laplacian:
            candidates = [r for r in range(1, order + 1) if constant % r == 0]
        else:
            if constant > MAX_GENERAL_CONSTANT:
                raise LimitExceeded(f"constant term {constant} too large for divisor search")
            bound = 1 + max(abs(c) for c in p.coeffs[:-1])
            candidates = [s * d for d in _positive_divisors(constant) if d <= bound for s in (1, -1)]
        for root in candidates:
            while p.degree >= 1 and p.coeffs[0] % root == 0:
                quotient, remainder = p.synthetic_division(root)
                if remainder:
                    break
                counts[root] = counts.get(root, 0) + 1
                p = quotient

    residual = p if p.degree >= 1 else None
    return ExactSpectrum(order, tuple(sorted(counts.items(), reverse=True)), residual)


def spectrum_of(g: Graph) -> ExactSpectrum:
    return extract_spectrum(charpoly(laplacian(g)), laplacian=True)


def multiplicity(s: ExactSpectrum, value: int) -> int:
    return s.multiplicity(value)


def _nontrivial(s: ExactSpectrum, operation: str) -> list[int]:
    if s.residual is not None:
        raise UnsupportedError(f"{operation} needs an all-integer spectrum, residual {s.residual} present")
    values = s.integer_values()
    values.remove(0)
    return values


def complement_spectrum(s: ExactSpectrum) -> ExactSpectrum:
    n = s.order
    return ExactSpectrum.from_values(n, [n - mu for mu in _nontrivial(s, "complement spectrum")] + [0])


def join_spectrum(s_g: ExactSpectrum, s_h: ExactSpectrum) -> ExactSpectrum:
    n, m = s_g.order, s_h.order
    values = [n + m]
    values += [m + mu for mu in _nontrivial(s_g, "join spectrum")]
    values += [n + mu for mu in _nontrivial(s_h, "join spectrum")]
    values.append(0)
    return ExactSpectrum.from_values(n + m, values)


# Principal submatrix checks ----------------------------------------------------------------------


def _require_multiplicity(g: Graph, alpha: int, m: int, spectrum: ExactSpectrum | None) -> ExactSpectrum:
    n = g.order
    if n < 6:
        raise UnsupportedError(f"submatrix checks need n >= 6, got {n}")
    if not 1 <= m <= n - 2:
        raise UnsupportedError(f"m must satisfy 1 <= m <= n-2, got m={m} for n={n}")
    spectrum = spectrum or spectrum_of(g)
    found = spectrum.multiplicity(alpha)
    if found != n - m:
        raise UnsupportedError(f"eigenvalue {alpha} has multiplicity {found}, expected n-m={n - m}")
    return spectrum


def submatrix_divisibility_failures(g: Graph, alpha: int, m: int, spectrum: ExactSpectrum | None = None) -> list[tuple[int, ...]]:
    """Principal (m+2)-subsets whose characteristic polynomial is not divisible by (x - alpha)^2."""
    _require_multiplicity(g, alpha, m, spectrum)
    lap = laplacian(g)
    return [rows for rows in combinations(range(g.order), m + 2) if not charpoly(lap.principal(rows)).divisible_by_power(alpha, 2)]


def submatrix_divisibility_check(g: Graph, alpha: int, m: int, spectrum: ExactSpectrum | None = None) -> bool:
    return not submatrix_divisibility_failures(g, alpha, m, spectrum)


def rational_nullspace(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Basis of {z : M z = 0} by exact row reduction."""
    if not rows:
        return []
    width = len(rows[0])
    work = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][col]
        work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break

    basis = []
    for free in (c for c in range(width) if c not in pivots):
        z = [Fraction(0)] * width
        z[free] = Fraction(1)
        for i, col in enumerate(pivots):
            z[col] = -work[i][free]
        basis.append(z)
    return basis


def lifted_eigenvector_failures(g: Graph, alpha: int, m: int, spectrum: ExactSpectrum | None = None) -> list[tuple[tuple[int, ...], str]]:
    """For every (m+2)-subset S, check the alpha-eigenvectors of L(g) supported on S.

    They must span at least two dimensions, sum to zero, and for each k in S include a nonzero
    vector vanishing at k.
    """
    _require_multiplicity(g, alpha, m, spectrum)
    if alpha == 0:
        raise UnsupportedError("lifted eigenvectors need a nonzero eigenvalue")
    lap = laplacian(g)
    shifted = [[lap.entries[i][j] - (alpha if i == j else 0) for j in range(g.order)] for i in range(g.order)]

    failures = []
    for subset in combinations(range(g.order), m + 2):
        basis = rational_nullspace([[row[j] for j in subset] for row in shifted])
        if len(basis) < 2:
            failures.append((subset, f"only {len(basis)} supported eigenvector(s)"))
            continue
        if any(sum(z) != 0 for z in basis):
            failures.append((subset, "eigenvector with nonzero coordinate sum"))
            continue
        for k in range(len(subset)):
            # vectors with z_k = 0 form a subspace of dimension len(basis) minus (1 if some z_k != 0)
            if len(basis) - (1 if any(z[k] for z in basis) else 0) < 1:
                failures.append((subset, f"no eigenvector vanishing at vertex {subset[k]}"))
                break
    return failures


def lifted_eigenvector_check(g: Graph, alpha: int, m: int, spectrum: ExactSpectrum | None = None) -> bool:
    return not lifted_eigenvector_failures(g, alpha, m, spectrum)

# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from lapmult.errors import LimitExceeded, UnsupportedError
from lapmult.spectrum import IntMatrix

MAX_NUMERIC_ORDER = 64
MAX_SWEEPS = 100
EIGEN_TOLERANCE = 1e-8
INTERLACE_TOLERANCE = 1e-6


def jacobi_eigenvalues(a: np.ndarray) -> list[float]:
    """Cyclic Jacobi rotations on a symmetric float matrix; eigenvalues descending."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(MAX_SWEEPS):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    return sorted((float(x) for x in np.diag(a)), reverse=True)


def numeric_eigenvalues(m: IntMatrix) -> list[float]:
    if m.order > MAX_NUMERIC_ORDER:
        raise LimitExceeded(f"numeric eigenvalues support at most {MAX_NUMERIC_ORDER} rows, got {m.order}")
    if not m.is_symmetric():
        raise UnsupportedError("numeric eigenvalues need a symmetric matrix")
    return jacobi_eigenvalues(m.to_numpy())


@dataclass(frozen=True, slots=True)
class InterlacingReport:
    holds: bool
    full: tuple[float, ...]
    sub: tuple[float, ...]
    upper_equalities: tuple[int, ...]  # 1-based i with mu_i == lambda_i
    lower_equalities: tuple[int, ...]  # 1-based i with mu_i == lambda_{n-k+i}


def interlacing_report(m: IntMatrix, rows: Sequence[int], tolerance: float = INTERLACE_TOLERANCE) -> InterlacingReport:
    chosen = sorted(set(rows))
    if not chosen:
        raise UnsupportedError("interlacing needs a nonempty row subset")
    if chosen[0] < 0 or chosen[-1] >= m.order:
        raise UnsupportedError(f"rows {chosen} outside 0..{m.order - 1}")

    full = numeric_eigenvalues(m)
    sub = numeric_eigenvalues(m.principal(chosen))
    n, k = len(full), len(sub)
    holds = True
    upper, lower = [], []
    for i in range(k):
        if full[i] < sub[i] - tolerance or sub[i] < full[n - k + i] - tolerance:
            holds = False
        if abs(full[i] - sub[i]) <= tolerance:
            upper.append(i + 1)
        if abs(sub[i] - full[n - k + i]) <= tolerance:
            lower.append(i + 1)
    return InterlacingReport(holds, tuple(full), tuple(sub), tuple(upper), tuple(lower))


def interlacing_check(m: IntMatrix, rows: Sequence[int], tolerance: float = INTERLACE_TOLERANCE) -> bool:
    return interlacing_report(m, rows, tolerance).holds


def matches_integer_eigenvalues(integers: Sequence[int], numeric: Sequence[float], tolerance: float = EIGEN_TOLERANCE) -> bool:
    """Every integer eigenvalue shows up numerically with the same count."""
    for value in set(integers):
        expected = sum(1 for v in integers if v == value)
        found = sum(1 for x in numeric if abs(x - value) <= tolerance)
        if found != expected:
            return False
    return True

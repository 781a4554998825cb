"""Characteristic polynomial of the mixed form and the Cayley-Hamilton check."""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from ..algebra.metric import Metric
from ..algebra.tensor import Tensor2, mixed
from ..common.typedef import Matrix
from ..common.utility import max_abs


@dataclass(frozen=True, slots=True)
class CharPoly:
    """phi(x) = x^n + sum_k (-1)^k a_k x^(n-k); a_k is the k-th elementary symmetric value."""
    n: int
    a: Tuple[float, ...]

    def monic(self) -> List[float]:
        """Coefficients of x^n, x^(n-1), ..., x^0."""
        return [1.0] + [(-1.0) ** k * ak for k, ak in enumerate(self.a, start=1)]

    @property
    def det(self) -> float:
        return self.a[-1]


@dataclass(frozen=True, slots=True)
class LeverrierResult:
    poly: CharPoly
    trace_powers: Tuple[float, ...]
    """trace(A^k), k = 1..n, accumulated alongside the recurrence."""
    final_residual: float
    """max|B_n| of the adjugate recurrence, zero by Cayley-Hamilton."""


def faddeev_leverrier(a: Matrix) -> LeverrierResult:
    """Coefficients of det(x I - A) for a square matrix A."""
    n = a.shape[0]
    eye = np.eye(n)
    b = eye
    power = eye
    coeffs: List[float] = []
    traces: List[float] = []
    for k in range(1, n + 1):
        ab = a @ b
        c_k = -float(np.trace(ab)) / k
        coeffs.append(c_k)
        b = ab + c_k * eye
        power = power @ a
        traces.append(float(np.trace(power)))
    # c_k multiplies x^(n-k); a_k = (-1)^k c_k
    a_k = tuple((-1.0) ** k * c for k, c in enumerate(coeffs, start=1))
    return LeverrierResult(CharPoly(n, a_k), tuple(traces), max_abs(b))


def char_poly(t: Tensor2, m: Metric) -> CharPoly:
    """Characteristic polynomial of the UpDown form of t."""
    return faddeev_leverrier(mixed(t, m)).poly


def evaluate(poly: CharPoly, x: complex) -> complex:
    """phi(x) by Horner's rule."""
    acc: complex = 0.0
    for c in poly.monic():
        acc = acc * x + c
    return acc


def matrix_polynomial(poly: CharPoly, a: Matrix) -> Matrix:
    """phi(A) by Horner's rule with A^0 = identity."""
    n = a.shape[0]
    eye = np.eye(n)
    acc = np.zeros_like(a)
    for c in poly.monic():
        acc = acc @ a + c * eye
    return acc


def cayley_hamilton_residual(t: Tensor2, m: Metric) -> float:
    """max|phi(A)| normalized by max(1, max|A|^n)."""
    a = mixed(t, m)
    residual = max_abs(matrix_polynomial(char_poly(t, m), a))
    return residual / max(1.0, max_abs(a) ** m.dim)

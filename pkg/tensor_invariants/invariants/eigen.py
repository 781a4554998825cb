"""Eigenpairs A^i_.j x^j = lambda x^i of the mixed form."""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from ..algebra.metric import Metric
from ..algebra.tensor import Tensor2, mixed
from ..common.typedef import ComplexVector, Matrix
from ..common.utility import max_abs
from .charpoly import faddeev_leverrier
from .roots import polynomial_roots

PIVOT_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class EigenPair:
    value: complex
    vector: Tuple[complex, ...]
    """Unit contravariant components x^j."""
    multiplicity: int
    """Algebraic multiplicity of the value."""
    geometric: int
    """Dimension of the computed null space of (lambda delta - A)."""


@dataclass(frozen=True, slots=True)
class EigenDecomp:
    pairs: Tuple[EigenPair, ...]

    @property
    def values(self) -> List[complex]:
        return [p.value for p in self.pairs]

    @property
    def vectors(self) -> List[Tuple[complex, ...]]:
        return [p.vector for p in self.pairs]


def null_space(b: np.ndarray, tol: float) -> List[ComplexVector]:
    """Basis of the null space of square b by elimination with complete pivoting.

    Pivots at or below tol count as zero; at least one null vector is always
    returned, so the rank is capped at n - 1.
    """
    work = np.array(b, dtype=np.complex128)
    n = work.shape[0]
    cols = list(range(n))
    rank = 0
    for k in range(n - 1):
        sub = np.abs(work[k:, k:])
        r, c = np.unravel_index(int(np.argmax(sub)), sub.shape)
        if sub[r, c] <= tol:
            break
        r, c = r + k, c + k
        work[[k, r]] = work[[r, k]]
        work[:, [k, c]] = work[:, [c, k]]
        cols[k], cols[c] = cols[c], cols[k]
        work[k + 1:] -= np.outer(work[k + 1:, k] / work[k, k], work[k])
        rank += 1

    basis: List[ComplexVector] = []
    for free in range(rank, n):
        y = np.zeros(n, dtype=np.complex128)
        y[free] = 1.0
        for k in range(rank - 1, -1, -1):
            y[k] = -(work[k, k + 1:] @ y[k + 1:]) / work[k, k]
        x = np.zeros(n, dtype=np.complex128)
        x[cols] = y
        basis.append(x / np.linalg.norm(x))
    return basis


def eigen(t: Tensor2, m: Metric) -> EigenDecomp:
    """All n eigenvalues with multiplicity, each paired with a unit eigenvector."""
    a: Matrix = mixed(t, m)
    poly = faddeev_leverrier(a).poly
    tol = PIVOT_TOL * max_abs(a)
    eye = np.eye(m.dim)
    pairs: List[EigenPair] = []
    for root in polynomial_roots(poly.monic()):
        vectors = null_space(root.value * eye - a, tol)
        for j in range(root.multiplicity):
            v = vectors[min(j, len(vectors) - 1)]
            pairs.append(EigenPair(root.value, tuple(complex(x) for x in v),
                                   root.multiplicity, len(vectors)))
    return EigenDecomp(tuple(pairs))

"""Minimal integrity bases of symmetric, symmetric traceless and antisymmetric tensors."""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple
import numpy as np
from ..algebra.metric import Metric
from ..algebra.tensor import (DEFAULT_CLASSIFY_TOL, Tensor2, TensorClass, Variance,
                              classify, mixed, new_tensor)
from ..common.errors import InvariantsError, PreconditionError, check_dims
from .charpoly import faddeev_leverrier
from .newton import traces_to_coeffs

PHI_CONVENTION = "phi(x) = x^n + sum_k (-1)^k a_k x^(n-k) = det(x delta - A^i_.j)"


class UnsupportedClassError(InvariantsError):
    code = "UnsupportedClass"


class Representation(Enum):
    TRACE_POWERS = "TracePowers"
    COEFFICIENTS = "Coefficients"


@dataclass(frozen=True, slots=True)
class BasisEntry:
    name: str
    degree: int
    value: float


@dataclass(frozen=True, slots=True)
class IntegrityBasis:
    tensor_class: TensorClass
    entries: Tuple[BasisEntry, ...]
    representation: Representation
    convention: str = PHI_CONVENTION

    @property
    def degrees(self) -> List[int]:
        return [e.degree for e in self.entries]


def basis_degrees(tensor_class: TensorClass, n: int) -> List[int]:
    """Degrees of the minimal integrity basis for a supported class."""
    match tensor_class:
        case TensorClass.SYMMETRIC:
            return list(range(1, n + 1))
        case TensorClass.SYMMETRIC_TRACELESS:
            return list(range(2, n + 1))
        case TensorClass.ANTISYMMETRIC:
            return list(range(2, n + 1, 2))
        case _:
            raise UnsupportedClassError(f"No minimal integrity basis for {tensor_class.value} tensors")


def minimal_integrity_basis(
    t: Tensor2,
    m: Metric,
    rep: Representation = Representation.TRACE_POWERS,
    tol: float = DEFAULT_CLASSIFY_TOL,
) -> IntegrityBasis:
    """Basis invariants of t, as trace powers or as characteristic coefficients."""
    tensor_class = classify(t, m, tol)
    degrees = basis_degrees(tensor_class, m.dim)
    result = faddeev_leverrier(mixed(t, m))
    if rep == Representation.TRACE_POWERS:
        entries = tuple(BasisEntry(f"trace(A^{k})", k, result.trace_powers[k - 1]) for k in degrees)
    else:
        entries = tuple(BasisEntry(f"a_{k}", k, result.poly.a[k - 1]) for k in degrees)
    return IntegrityBasis(tensor_class, entries, rep)


@dataclass(frozen=True, slots=True)
class BasisExpression:
    """trace(A^k) computed directly and rebuilt from the basis values."""
    k: int
    direct: float
    reduced: float
    abs_diff: float
    rel_diff: float
    reduction: Tuple[float, ...]
    """r_0..r_(n-1) with A^k = sum_i r_i A^i modulo phi."""


def reduce_power(a: List[float], k: int) -> List[float]:
    """Coefficients of x^k modulo phi(x), for basis x^0..x^(n-1)."""
    n = len(a)
    # x^n = sum_{j=1..n} (-1)^(j-1) a_j x^(n-j)
    top = [0.0] * n
    for j in range(1, n + 1):
        top[n - j] = (-1.0) ** (j - 1) * a[j - 1]
    r = [0.0] * n
    if k < n:
        r[k] = 1.0
        return r
    r = list(top)
    for _ in range(k - n):
        carry = r[-1]
        r = [0.0] + r[:-1]
        r = [ri + carry * ti for ri, ti in zip(r, top)]
    return r


def express_in_basis(
    t: Tensor2,
    m: Metric,
    k: int,
    tol: float = DEFAULT_CLASSIFY_TOL,
) -> BasisExpression:
    """Rebuild trace(A^k), k > n, from the basis values by Cayley-Hamilton reduction."""
    n = m.dim
    check_dims(t.dim, n)
    if k <= n:
        raise PreconditionError(f"k must exceed the dimension {n}, got {k}")
    basis = minimal_integrity_basis(t, m, Representation.TRACE_POWERS, tol)
    p = [0.0] * n
    for entry in basis.entries:
        p[entry.degree - 1] = entry.value
    a = traces_to_coeffs(p)
    r = reduce_power(a, k)
    reduced = r[0] * n + sum(r[i] * p[i - 1] for i in range(1, n))
    direct = float(np.trace(np.linalg.matrix_power(mixed(t, m), k)))
    diff = abs(direct - reduced)
    return BasisExpression(k, direct, reduced, diff, diff / max(1.0, abs(direct)), tuple(r))


def independence_witness() -> Tuple[Tuple[Tensor2, Tensor2], Tuple[Tensor2, Tensor2]]:
    """Antisymmetric 4x4 pairs separating trace(A^2) and trace(A^4) in the Euclidean metric.

    The first pair shares trace(A^2) but not trace(A^4); the second shares
    trace(A^4) but not trace(A^2).
    """
    def planes(x: float, y: float) -> Tensor2:
        c = np.zeros((4, 4))
        c[0, 1], c[1, 0] = x, -x
        c[2, 3], c[3, 2] = y, -y
        return new_tensor(c, Variance.UP_UP)

    # trace(A^2) = -2(x^2 + y^2), trace(A^4) = 2(x^4 + y^4)
    same_p2 = (planes(1.0, 1.0), planes(np.sqrt(2.0), 0.0))
    same_p4 = (planes(1.0, 1.0), planes(2.0 ** 0.25, 0.0))
    return same_p2, same_p4

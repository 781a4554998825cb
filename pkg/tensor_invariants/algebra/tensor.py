"""Second-order tensors in four variance forms.

All arithmetic is done on the UpDown mixed form A^i_.j; the other forms are
reached by contracting with g or g^-1 at the operation boundary.
"""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple
import numpy as np
import numpy.typing as npt
from ..common.errors import PreconditionError, check_dims
from ..common.typedef import Matrix
from ..common.utility import frozen, max_abs
from .metric import Metric

DEFAULT_CLASSIFY_TOL = 1e-9


class Variance(Enum):
    """Index placement; the value is the JSON tag."""
    UP_UP = "uu"
    DOWN_DOWN = "dd"
    DOWN_UP = "du"
    UP_DOWN = "ud"


class TensorClass(Enum):
    SYMMETRIC = "Symmetric"
    SYMMETRIC_TRACELESS = "SymmetricTraceless"
    ANTISYMMETRIC = "Antisymmetric"
    GENERAL = "General"


@dataclass(frozen=True, slots=True, eq=False)
class Tensor2:
    """Components c[i, j], row index = first index, in the given variance."""
    dim: int
    variance: Variance
    c: Matrix

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Tensor2) and self.variance == other.variance
                and np.array_equal(self.c, other.c))

    def __hash__(self) -> int:
        return hash((self.variance, self.c.tobytes()))


def new_tensor(c: npt.ArrayLike, variance: Variance) -> Tensor2:
    arr = np.array(c, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise PreconditionError(f"Tensor components must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("Tensor has non-finite components")
    return Tensor2(arr.shape[0], variance, frozen(arr))


def _to_mixed(c: Matrix, variance: Variance, m: Metric) -> Matrix:
    match variance:
        case Variance.UP_DOWN:
            return c
        case Variance.UP_UP:
            return c @ m.g
        case Variance.DOWN_DOWN:
            return m.g_inv @ c
        case Variance.DOWN_UP:
            return m.g_inv @ c @ m.g


def _from_mixed(mixed_c: Matrix, variance: Variance, m: Metric) -> Matrix:
    match variance:
        case Variance.UP_DOWN:
            return mixed_c
        case Variance.UP_UP:
            return mixed_c @ m.g_inv
        case Variance.DOWN_DOWN:
            return m.g @ mixed_c
        case Variance.DOWN_UP:
            return m.g @ mixed_c @ m.g_inv


def mixed(t: Tensor2, m: Metric) -> Matrix:
    """Components of the UpDown form A^i_.j."""
    check_dims(t.dim, m.dim)
    return _to_mixed(t.c, t.variance, m)


def from_mixed(mixed_c: npt.ArrayLike, m: Metric, variance: Variance) -> Tensor2:
    arr = np.asarray(mixed_c, dtype=np.float64)
    check_dims(arr.shape[0], m.dim)
    return new_tensor(_from_mixed(arr, variance, m), variance)


def convert(t: Tensor2, m: Metric, target: Variance) -> Tensor2:
    """Re-express t in the target variance."""
    check_dims(t.dim, m.dim)
    if t.variance == target:
        return t
    return from_mixed(mixed(t, m), m, target)


def identity(m: Metric, variance: Variance = Variance.UP_DOWN) -> Tensor2:
    """The Kronecker delta in the requested variance."""
    return from_mixed(np.eye(m.dim), m, variance)


def transpose(t: Tensor2) -> Tensor2:
    """Transpose components; mixed forms swap between UpDown and DownUp."""
    match t.variance:
        case Variance.UP_DOWN:
            variance = Variance.DOWN_UP
        case Variance.DOWN_UP:
            variance = Variance.UP_DOWN
        case _:
            variance = t.variance
    return new_tensor(t.c.T, variance)


def classify(t: Tensor2, m: Metric, tol: float = DEFAULT_CLASSIFY_TOL) -> TensorClass:
    """Symmetry class, decided on the UpUp form.

    The zero tensor is both symmetric and antisymmetric and is reported as
    SymmetricTraceless.
    """
    a = convert(t, m, Variance.UP_UP).c
    scale = max_abs(a)
    if max_abs(a - a.T) <= tol * scale:
        if abs(trace(t, m)) <= tol * m.dim * scale:
            return TensorClass.SYMMETRIC_TRACELESS
        return TensorClass.SYMMETRIC
    if max_abs(a + a.T) <= tol * scale:
        return TensorClass.ANTISYMMETRIC
    return TensorClass.GENERAL


def compose(a: Tensor2, b: Tensor2, m: Metric) -> Tensor2:
    """Metric-contracted product a·b, returned in the variance of a."""
    check_dims(a.dim, b.dim, m.dim)
    return from_mixed(mixed(a, m) @ mixed(b, m), m, a.variance)


def power(t: Tensor2, m: Metric, k: int) -> Tensor2:
    """t composed with itself k times (k >= 1)."""
    if k < 1:
        raise PreconditionError(f"Power must be positive, got {k}")
    check_dims(t.dim, m.dim)
    return from_mixed(np.linalg.matrix_power(mixed(t, m), k), m, t.variance)


def trace(t: Tensor2, m: Metric) -> float:
    """A^i_.i; the same value for every variance form."""
    return float(np.trace(mixed(t, m)))


def trace_power(t: Tensor2, m: Metric, k: int) -> float:
    """trace(A^k)."""
    if k < 1:
        raise PreconditionError(f"Power must be positive, got {k}")
    return float(np.trace(np.linalg.matrix_power(mixed(t, m), k)))


def contraction_patterns(t: Tensor2, m: Metric) -> Tuple[float, float, float]:
    """The three degree-2 contractions of A with itself.

    Returns (A^ij g_jk A^kl g_li, A^ij g_jk A^lk g_li, A^ji g_jk A^lk g_li);
    the first is trace(A^2).
    """
    a = convert(t, m, Variance.UP_UP).c
    g = m.g
    first = float(np.einsum("ij,jk,kl,li->", a, g, a, g))
    second = float(np.einsum("ij,jk,lk,li->", a, g, a, g))
    third = float(np.einsum("ji,jk,lk,li->", a, g, a, g))
    return first, second, third


def tensor_to_json(t: Tensor2) -> Dict[str, Any]:
    return {"variance": t.variance.value, "c": t.c.tolist()}

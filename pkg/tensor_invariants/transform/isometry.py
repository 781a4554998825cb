"""Linear maps preserving the metric, and the tensor transformation law."""
from __future__ import annotations
import logging
from dataclasses import dataclass
import numpy as np
import numpy.typing as npt
from ..algebra.metric import Metric
from ..algebra.tensor import Tensor2, Variance, new_tensor
from ..common.errors import PreconditionError, check_dims
from ..common.typedef import Matrix
from ..common.utility import frozen, max_abs

logger = logging.getLogger(__name__)

TAYLOR_ORDER = 12
SCALED_NORM = 0.5


@dataclass(frozen=True, slots=True, eq=False)
class Isometry:
    """Lambda with Lambda^T g Lambda = g; `generator` is g^-1 S for proper elements."""
    dim: int
    L: Matrix
    L_inv: Matrix
    generator: Matrix
    det_sign: int


def expm(x: npt.ArrayLike) -> Matrix:
    """Matrix exponential by scaling and squaring a truncated Taylor series."""
    a = np.asarray(x, dtype=np.float64)
    n = a.shape[0]
    norm = float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0
    squarings = 0
    while norm / 2.0 ** squarings > SCALED_NORM:
        squarings += 1
    scaled = a / 2.0 ** squarings
    result = np.eye(n)
    for k in range(TAYLOR_ORDER, 0, -1):
        result = np.eye(n) + scaled @ result / k
    for _ in range(squarings):
        result = result @ result
    logger.debug("expm: norm=%.3g squarings=%d", norm, squarings)
    return result


def _make(L: Matrix, generator: Matrix, det_sign: int) -> Isometry:
    return Isometry(L.shape[0], frozen(L), frozen(np.linalg.inv(L)), frozen(generator), det_sign)


def isometry_from_generator(m: Metric, s: npt.ArrayLike) -> Isometry:
    """Lambda = exp(g^-1 S) for an antisymmetric S."""
    s_arr = np.asarray(s, dtype=np.float64)
    check_dims(s_arr.shape[0], m.dim)
    if max_abs(s_arr + s_arr.T) > 1e-12 * max(1.0, max_abs(s_arr)):
        raise PreconditionError("Generator S must be antisymmetric")
    x = m.g_inv @ s_arr
    return _make(expm(x), x, 1)


def random_isometry(m: Metric, seed: int, scale: float, improper: bool = False) -> Isometry:
    """A proper isometry from a random antisymmetric generator with entries in [-scale, scale].

    With improper=True the result is composed with `reflection(m)`.
    """
    if not scale > 0.0:
        raise PreconditionError(f"scale must be positive, got {scale}")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.uniform(-scale, scale, size=(m.dim, m.dim)), k=1)
    iso = isometry_from_generator(m, upper - upper.T)
    return compose_isometries(iso, reflection(m)) if improper else iso


def reflection(m: Metric) -> Isometry:
    """Reflection along the eigenvector of g with the most negative eigenvalue.

    Falls back to the largest eigenvalue for a positive-definite metric.
    """
    w, v = np.linalg.eigh(m.g)
    axis = v[:, 0] if w[0] < 0 else v[:, -1]
    gv = m.g @ axis
    L = np.eye(m.dim) - 2.0 * np.outer(axis, gv) / float(axis @ gv)
    return _make(L, np.zeros((m.dim, m.dim)), -1)


def compose_isometries(first: Isometry, second: Isometry) -> Isometry:
    """first ∘ second, i.e. L = L_first @ L_second."""
    check_dims(first.dim, second.dim)
    L = first.L @ second.L
    return Isometry(first.dim, frozen(L), frozen(second.L_inv @ first.L_inv),
                    first.generator, first.det_sign * second.det_sign)


def apply(iso: Isometry, t: Tensor2) -> Tensor2:
    """Transform components: upper indices by Lambda, lower indices by Lambda^-T."""
    check_dims(iso.dim, t.dim)
    L, L_inv = iso.L, iso.L_inv
    match t.variance:
        case Variance.UP_UP:
            c = L @ t.c @ L.T
        case Variance.DOWN_DOWN:
            c = L_inv.T @ t.c @ L_inv
        case Variance.UP_DOWN:
            c = L @ t.c @ L_inv
        case Variance.DOWN_UP:
            c = L_inv.T @ t.c @ L.T
    return new_tensor(c, t.variance)


def metric_defect(iso: Isometry, m: Metric) -> float:
    """max|Lambda^T g Lambda - g|."""
    return max_abs(iso.L.T @ m.g @ iso.L - m.g)

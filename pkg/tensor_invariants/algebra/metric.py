"""The metric tensor of a flat pseudo-Riemannian space."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple
import numpy as np
import numpy.typing as npt
from ..common.errors import InvariantsError, PreconditionError
from ..common.typedef import Matrix
from ..common.utility import frozen, max_abs

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
DEGENERACY_TOL = 1e-10
INVERSE_TOL = 1e-10


class MetricError(InvariantsError):
    code = "MetricError"


class AsymmetricMetricError(MetricError):
    code = "AsymmetricMetric"


class DegenerateMetricError(MetricError):
    code = "DegenerateMetric"


@dataclass(frozen=True, slots=True, eq=False)
class Metric:
    """Covariant components g_ij, contravariant inverse g^ij and signature (p, q)."""
    dim: int
    g: Matrix
    g_inv: Matrix
    sig: Tuple[int, int]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Metric) and np.array_equal(self.g, other.g)

    def __hash__(self) -> int:
        return hash(self.g.tobytes())


def new_metric(g: npt.ArrayLike) -> Metric:
    """Validate g and build a Metric with its inverse and signature."""
    arr = np.array(g, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise PreconditionError(f"Metric must be a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2:
        raise PreconditionError(f"Metric dimension must be at least 2, got {n}")
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("Metric has non-finite entries")

    scale = max_abs(arr)
    if max_abs(arr - arr.T) > SYMMETRY_TOL * scale:
        raise AsymmetricMetricError(
            f"Metric is not symmetric: max|g - g^T| = {max_abs(arr - arr.T):.3e}")

    row_norm = float(np.max(np.linalg.norm(arr, axis=1)))
    det = float(np.linalg.det(arr))
    if scale == 0.0 or abs(det) < DEGENERACY_TOL * row_norm ** n:
        raise DegenerateMetricError(f"Metric is degenerate: det g = {det:.3e}")

    eigenvalues = np.linalg.eigvalsh(arr)
    band = DEGENERACY_TOL * float(np.max(np.abs(eigenvalues)))
    if np.any(np.abs(eigenvalues) <= band):
        raise DegenerateMetricError("Metric has an eigenvalue in the zero band")
    sig = (int(np.sum(eigenvalues > 0)), int(np.sum(eigenvalues < 0)))

    inv = np.linalg.inv(arr)
    inv = 0.5 * (inv + inv.T)
    if max_abs(inv @ arr - np.eye(n)) > INVERSE_TOL:
        raise DegenerateMetricError("Metric is too ill-conditioned to invert reliably")

    logger.debug("metric dim=%d sig=%s det=%.6g", n, sig, det)
    return Metric(n, frozen(arr), frozen(inv), sig)


def minkowski() -> Metric:
    """diag(1, -1, -1, -1); index 0 is time."""
    return new_metric(np.diag([1.0, -1.0, -1.0, -1.0]))


def euclidean(n: int) -> Metric:
    """The n-dimensional identity metric."""
    if n < 2:
        raise PreconditionError(f"Euclidean dimension must be at least 2, got {n}")
    return new_metric(np.eye(n))


def is_minkowski(m: Metric) -> bool:
    return m.dim == 4 and np.array_equal(m.g, np.diag([1.0, -1.0, -1.0, -1.0]))


def metric_to_json(m: Metric) -> Dict[str, Any]:
    return {"dim": m.dim, "g": m.g.tolist()}

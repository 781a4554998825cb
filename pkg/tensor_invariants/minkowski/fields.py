"""Electromagnetic field tensor in Minkowski space."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple
import numpy as np
import numpy.typing as npt
from ..algebra.metric import Metric
from ..algebra.tensor import Tensor2, Variance, convert, new_tensor
from ..common.errors import PreconditionError, check_dims

Vector3 = Tuple[float, float, float]


def as_vector3(v: npt.ArrayLike, what: str) -> Vector3:
    arr = np.asarray(v, dtype=np.float64).reshape(-1)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise PreconditionError(f"{what} must be a finite 3-vector, got {v!r}")
    return float(arr[0]), float(arr[1]), float(arr[2])


@dataclass(frozen=True, slots=True)
class EMField:
    """Electric (e) and magnetic (b) 3-vectors."""
    e: Vector3
    b: Vector3

    @classmethod
    def of(cls, e: npt.ArrayLike, b: npt.ArrayLike) -> EMField:
        return cls(as_vector3(e, "e"), as_vector3(b, "b"))


@dataclass(frozen=True, slots=True)
class EMInvariants:
    a2: float
    """b.b - e.e"""
    a4: float
    """-(e.b)^2, the determinant of the mixed form"""
    pseudoscalar: float
    """e.b"""
    det_contravariant: float
    """(e.b)^2, the determinant of the contravariant components"""


def em_tensor(f: EMField) -> Tensor2:
    """Contravariant field tensor A^{ab}."""
    e1, e2, e3 = f.e
    b1, b2, b3 = f.b
    return new_tensor([
        [0.0, -e1, -e2, -e3],
        [e1, 0.0, -b3, b2],
        [e2, b3, 0.0, -b1],
        [e3, -b2, b1, 0.0],
    ], Variance.UP_UP)


def em_invariants(f: EMField) -> EMInvariants:
    """Closed forms of the characteristic coefficients and the pseudoscalar."""
    e, b = np.array(f.e), np.array(f.b)
    eb = float(e @ b)
    return EMInvariants(
        a2=float(b @ b) - float(e @ e),
        a4=0.0 - eb * eb,
        pseudoscalar=eb,
        det_contravariant=eb * eb,
    )


def em_field_from_tensor(t: Tensor2, m: Metric) -> EMField:
    """Read (e, b) back from the UpUp components of a 4x4 tensor."""
    check_dims(t.dim, m.dim, 4)
    c = convert(t, m, Variance.UP_UP).c
    return EMField((float(c[1, 0]), float(c[2, 0]), float(c[3, 0])),
                   (float(c[3, 2]), float(c[1, 3]), float(c[2, 1])))


def pseudoscalar(t: Tensor2, m: Metric) -> float:
    """Pfaffian of the UpUp components; e.b for a field tensor."""
    check_dims(t.dim, m.dim, 4)
    c = convert(t, m, Variance.UP_UP).c
    return float(c[0, 1] * c[2, 3] - c[0, 2] * c[1, 3] + c[0, 3] * c[1, 2])

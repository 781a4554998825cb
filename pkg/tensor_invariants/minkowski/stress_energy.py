"""Symmetric Minkowski tensors in (d, p, T) block form."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple
import numpy as np
import numpy.typing as npt
from ..algebra.tensor import Tensor2, Variance, new_tensor
from ..common.errors import InvariantsError
from ..common.typedef import Matrix
from ..common.utility import frozen, max_abs
from .fields import EMField, Vector3, as_vector3

BLOCK_SYMMETRY_TOL = 1e-12


class AsymmetricBlockError(InvariantsError):
    code = "AsymmetricBlock"


@dataclass(frozen=True, slots=True, eq=False)
class StressEnergyBlocks:
    """A^{ab} = [[d, p^T], [p, -T]]."""
    d: float
    p: Vector3
    T: Matrix

    @classmethod
    def of(cls, d: float, p: npt.ArrayLike, T: npt.ArrayLike) -> StressEnergyBlocks:
        t_arr = np.asarray(T, dtype=np.float64).reshape(3, 3)
        if max_abs(t_arr - t_arr.T) > BLOCK_SYMMETRY_TOL * max(1.0, max_abs(t_arr)):
            raise AsymmetricBlockError(
                f"Stress block T is not symmetric: max|T - T^T| = {max_abs(t_arr - t_arr.T):.3e}")
        return cls(float(d), as_vector3(p, "p"), frozen(t_arr))

    @property
    def scale(self) -> float:
        return max(abs(self.d), max_abs(self.p), max_abs(self.T))


@dataclass(frozen=True, slots=True)
class BlockScalars:
    """Scalars the block expansions are written in."""
    d: float
    pp: float
    """p^T p"""
    pTp: float
    """p^T T p"""
    pT2p: float
    """p^T T^2 p"""
    tr1: float
    tr2: float
    tr3: float
    tr4: float
    """trace(T^k)"""


def block_scalars(s: StressEnergyBlocks) -> BlockScalars:
    p = np.array(s.p)
    T = np.asarray(s.T)
    T2 = T @ T
    return BlockScalars(
        d=s.d,
        pp=float(p @ p),
        pTp=float(p @ T @ p),
        pT2p=float(p @ T2 @ p),
        tr1=float(np.trace(T)),
        tr2=float(np.trace(T2)),
        tr3=float(np.trace(T2 @ T)),
        tr4=float(np.trace(T2 @ T2)),
    )


def symmetric_tensor(s: StressEnergyBlocks) -> Tensor2:
    """UpUp 4x4 tensor in the block layout (note the minus sign on T)."""
    c = np.zeros((4, 4))
    c[0, 0] = s.d
    c[0, 1:] = s.p
    c[1:, 0] = s.p
    c[1:, 1:] = -np.asarray(s.T)
    return new_tensor(c, Variance.UP_UP)


def block_trace_powers(s: StressEnergyBlocks) -> Tuple[float, float, float, float]:
    """trace(A^k), k = 1..4, from the mixed form [[d, -p^T], [p, T]]."""
    x = block_scalars(s)
    d, pp, q, r = x.d, x.pp, x.pTp, x.pT2p
    return (
        d + x.tr1,
        d ** 2 - 2.0 * pp + x.tr2,
        d ** 3 - 3.0 * d * pp - 3.0 * q + x.tr3,
        d ** 4 - 4.0 * d ** 2 * pp + 2.0 * pp ** 2 - 4.0 * d * q - 4.0 * r + x.tr4,
    )


def em_stress_energy(f: EMField) -> StressEnergyBlocks:
    """Stress-energy blocks of a field: d = (e.e + b.b)/2, p = e x b, T = e e^T + b b^T - d I."""
    e, b = np.array(f.e), np.array(f.b)
    d = 0.5 * float(e @ e + b @ b)
    T = np.outer(e, e) + np.outer(b, b) - d * np.eye(3)
    return StressEnergyBlocks.of(d, np.cross(e, b), T)

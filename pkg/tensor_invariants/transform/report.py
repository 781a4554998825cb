"""Empirical invariance certification over sampled isometries."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple
import numpy as np
from ..algebra.metric import Metric, is_minkowski
from ..algebra.tensor import Tensor2, TensorClass, classify, mixed
from ..common.errors import PreconditionError, check_dims
from ..common.utility import relative_deviation
from ..invariants.charpoly import faddeev_leverrier
from ..minkowski.fields import em_field_from_tensor, pseudoscalar
from .isometry import apply, random_isometry

logger = logging.getLogger(__name__)

INVARIANCE_TOL = 1e-8


class Verdict(Enum):
    INVARIANT = "invariant"
    PSEUDOSCALAR = "pseudoscalar"
    NOT_INVARIANT = "not invariant"


@dataclass(frozen=True, slots=True)
class InvarianceRow:
    name: str
    max_invariance_dev: float
    """max over samples of |after - before| / max(1, |before|)"""
    max_pseudo_dev: float
    """the same against det_sign * before"""
    verdict: Verdict


@dataclass(frozen=True, slots=True)
class InvarianceReport:
    samples: int
    seed: int
    scale: float
    improper: bool
    tol: float
    rows: Tuple[InvarianceRow, ...]

    def row(self, name: str) -> InvarianceRow:
        return next(r for r in self.rows if r.name == name)


def scalars(x: Tensor2, m: Metric, antisymmetric: bool) -> Dict[str, float]:
    """Every candidate scalar of x, in report order.

    The pseudoscalar needs n = 4 and an antisymmetric tensor; the field scalars
    additionally need the Minkowski metric.
    """
    result = faddeev_leverrier(mixed(x, m))
    found: Dict[str, float] = {}
    for k, p in enumerate(result.trace_powers, start=1):
        found[f"trace(A^{k})"] = p
    for k, a in enumerate(result.poly.a, start=1):
        found[f"a_{k}"] = a
    if antisymmetric and m.dim == 4:
        found["pseudoscalar"] = pseudoscalar(x, m)
        if is_minkowski(m):
            f = em_field_from_tensor(x, m)
            e, b = np.array(f.e), np.array(f.b)
            found["e.e"] = float(e @ e)
            found["b.b"] = float(b @ b)
            found["e.e - b.b"] = float(e @ e - b @ b)
            found["(e.b)^2"] = float(e @ b) ** 2
            found["e.b"] = float(e @ b)
    return found


def _verdict(invariance_dev: float, pseudo_dev: float, tol: float) -> Verdict:
    if invariance_dev <= tol:
        return Verdict.INVARIANT
    if pseudo_dev <= tol:
        return Verdict.PSEUDOSCALAR
    return Verdict.NOT_INVARIANT


def invariance_report(
    t: Tensor2,
    m: Metric,
    samples: int,
    seed: int,
    scale: float = 1.0,
    improper: bool = False,
    tol: float = INVARIANCE_TOL,
    classify_tol: float = 1e-9,
) -> InvarianceReport:
    """Evaluate every candidate scalar before and after `samples` random isometries.

    Sample i uses seed + i. With improper=True every sample is composed with the
    fixed reflection, so pseudoscalars are told apart from invariants.
    """
    check_dims(t.dim, m.dim)
    if samples < 1:
        raise PreconditionError(f"samples must be at least 1, got {samples}")
    antisymmetric = classify(t, m, classify_tol) == TensorClass.ANTISYMMETRIC
    before = scalars(t, m, antisymmetric)
    inv_dev = dict.fromkeys(before, 0.0)
    pseudo_dev = dict.fromkeys(before, 0.0)
    for i in range(samples):
        iso = random_isometry(m, seed + i, scale, improper)
        after = scalars(apply(iso, t), m, antisymmetric)
        for name, value in before.items():
            inv_dev[name] = max(inv_dev[name], relative_deviation(value, after[name]))
            pseudo_dev[name] = max(pseudo_dev[name],
                                   relative_deviation(iso.det_sign * value, after[name]))
        logger.debug("sample %d (seed %d): worst deviation %.3e",
                     i, seed + i, max(inv_dev.values()))
    rows: List[InvarianceRow] = [
        InvarianceRow(name, inv_dev[name], pseudo_dev[name],
                      _verdict(inv_dev[name], pseudo_dev[name], tol))
        for name in before
    ]
    return InvarianceReport(samples, seed, scale, improper, tol, tuple(rows))

"""Audit of closed-form Minkowski expansions against the generic pipeline.

The generic Faddeev-LeVerrier pipeline is authoritative. The published
expansions are transcribed as-is, including the terms known to be wrong, and
are only ever evaluated to produce a verdict.
"""
from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Sequence, Tuple
import numpy as np
from ..algebra.metric import minkowski
from ..algebra.tensor import Variance, convert, mixed
from ..common.errors import InvariantsError
from ..invariants.charpoly import faddeev_leverrier
from ..invariants.newton import traces_to_coeffs
from .fields import EMField, em_invariants, em_tensor
from .stress_energy import BlockScalars, StressEnergyBlocks, block_scalars, symmetric_tensor

logger = logging.getLogger(__name__)

AUDIT_TOL = 1e-9
TRACELESS_TOL = 1e-9


class NotTracelessError(InvariantsError):
    code = "NotTraceless"


class Verdict(Enum):
    MATCH = "match"
    MISMATCH = "mismatch"


@dataclass(frozen=True, slots=True)
class DiscrepancyRecord:
    k: int
    formula: str
    """"block" (in d, p, T), "trace_identity" (in trace powers), or a named variant."""
    expression: str
    closed_form_value: float
    generic_value: float
    abs_diff: float
    verdict: Verdict
    note: str = ""


@dataclass(frozen=True, slots=True)
class DiscrepancyReport:
    records: Tuple[DiscrepancyRecord, ...]

    @property
    def mismatches(self) -> List[DiscrepancyRecord]:
        return [r for r in self.records if r.verdict == Verdict.MISMATCH]

    def verdict(self, k: int, formula: str) -> Verdict:
        return next(r.verdict for r in self.records if r.k == k and r.formula == formula)


def _bound(tol: float, scale: float, k: int) -> float:
    try:
        return tol * max(1.0, scale ** k)
    except OverflowError:
        return math.inf


def _record(k: int, formula: str, expression: str, closed: float, generic: float,
            scale: float, tol: float, note: str = "") -> DiscrepancyRecord:
    diff = abs(closed - generic)
    ok = math.isfinite(diff) and diff <= _bound(tol, scale, k)
    return DiscrepancyRecord(k, formula, expression, closed, generic, diff,
                             Verdict.MATCH if ok else Verdict.MISMATCH, note)


Traces = Sequence[float]
BlockFormula = Tuple[int, str, str, Callable[[BlockScalars, Traces], float], str]

DEGREE_NOTE = "contains degree-2 terms 12 p^T p and 24 p^T p inside a degree-4 invariant"
SIGN_NOTE = "direct contraction of the block matrix gives trace(A) = d + trace(T)"

TRACELESS_EXPANSIONS: Tuple[BlockFormula, ...] = (
    (1, "block", "a_1 = trace(A) = 0", lambda x, p: 0.0, ""),
    (1, "trace_relation", "trace(A) = d - trace(T)", lambda x, p: x.d - x.tr1, SIGN_NOTE),
    (2, "block", "-1/2 [d^2 - 2 p^T p + trace(T^2)]",
     lambda x, p: -0.5 * (x.d ** 2 - 2.0 * x.pp + x.tr2), ""),
    (2, "trace_identity", "-1/2 trace(A^2)", lambda x, p: -0.5 * p[1], ""),
    (3, "block", "1/3 [d^3 - 3 d p^T p - 3 p^T T p + trace(T^3)]",
     lambda x, p: (x.d ** 3 - 3.0 * x.d * x.pp - 3.0 * x.pTp + x.tr3) / 3.0, ""),
    (3, "trace_identity", "1/3 trace(A^3)", lambda x, p: p[2] / 3.0, ""),
    (4, "block",
     "-d^4 + 12 p^T p - 4 d^2 p^T p - 2 (p^T p)^2 + (trace(T^2))^2 + 2 d^2 trace(T^2)"
     " - 4 p^T p trace(T^2) + 8 d p^T T p + 4 p^T T^2 p - trace(T^4)",
     lambda x, p: (-x.d ** 4 + 12.0 * x.pp - 4.0 * x.d ** 2 * x.pp - 2.0 * x.pp ** 2
                   + x.tr2 ** 2 + 2.0 * x.d ** 2 * x.tr2 - 4.0 * x.pp * x.tr2
                   + 8.0 * x.d * x.pTp + 4.0 * x.pT2p - x.tr4),
     DEGREE_NOTE),
    (4, "trace_identity", "1/8 (trace(A^2))^2 - 1/4 trace(A^4)",
     lambda x, p: p[1] ** 2 / 8.0 - p[3] / 4.0, ""),
)

GENERAL_EXPANSIONS: Tuple[BlockFormula, ...] = (
    (1, "block", "d - trace(T)", lambda x, p: x.d - x.tr1, SIGN_NOTE),
    (1, "trace_identity", "trace(A)", lambda x, p: p[0], ""),
    (2, "block", "1/2 [2 p^T p - 2 d trace(T) + (trace(T))^2 - trace(T^2)]",
     lambda x, p: 0.5 * (2.0 * x.pp - 2.0 * x.d * x.tr1 + x.tr1 ** 2 - x.tr2), SIGN_NOTE),
    (2, "trace_identity", "1/2 [(trace(A))^2 - trace(A^2)]",
     lambda x, p: 0.5 * (p[0] ** 2 - p[1]), ""),
    (3, "block",
     "1/6 [-3 d (trace(T))^2 - (trace(T))^3 - 3 d trace(T^2) + 6 p^T p trace(T)"
     " - 3 trace(T) trace(T^2) - 6 p^T T p + 2 trace(T^3)]",
     lambda x, p: (-3.0 * x.d * x.tr1 ** 2 - x.tr1 ** 3 - 3.0 * x.d * x.tr2
                   + 6.0 * x.pp * x.tr1 - 3.0 * x.tr1 * x.tr2 - 6.0 * x.pTp
                   + 2.0 * x.tr3) / 6.0,
     SIGN_NOTE),
    (3, "trace_identity", "1/6 [(trace(A))^3 - 3 trace(A) trace(A^2) + 2 trace(A^3)]",
     lambda x, p: (p[0] ** 3 - 3.0 * p[0] * p[1] + 2.0 * p[2]) / 6.0, ""),
    (4, "block",
     "1/24 [4 d (trace(T))^3 + (trace(T))^4 - 12 d trace(T) trace(T^2) + 12 p^T p (trace(T))^2"
     " - 6 (trace(T))^2 trace(T^2) + 8 d trace(T^3) - 24 p^T T p trace(T)"
     " + 8 trace(T) trace(T^3) + 3 (trace(T^2))^2 - 12 d^2 p^T p + 24 p^T p"
     " - 12 p^T p trace(T^2) - 12 (p^T p)^2 + 24 p^T T^2 p - 6 trace(T^4)]",
     lambda x, p: (4.0 * x.d * x.tr1 ** 3 + x.tr1 ** 4 - 12.0 * x.d * x.tr1 * x.tr2
                   + 12.0 * x.pp * x.tr1 ** 2 - 6.0 * x.tr1 ** 2 * x.tr2 + 8.0 * x.d * x.tr3
                   - 24.0 * x.pTp * x.tr1 + 8.0 * x.tr1 * x.tr3 + 3.0 * x.tr2 ** 2
                   - 12.0 * x.d ** 2 * x.pp + 24.0 * x.pp - 12.0 * x.pp * x.tr2
                   - 12.0 * x.pp ** 2 + 24.0 * x.pT2p - 6.0 * x.tr4) / 24.0,
     DEGREE_NOTE),
    (4, "trace_identity",
     "1/24 (trace(A))^4 + 3/8 trace(A) trace(A^3) - 1/4 (trace(A))^2 trace(A^2)"
     " + 1/8 (trace(A^2))^2 - 1/4 trace(A^4)",
     lambda x, p: (p[0] ** 4 / 24.0 + 3.0 / 8.0 * p[0] * p[2] - 0.25 * p[0] ** 2 * p[1]
                   + p[1] ** 2 / 8.0 - 0.25 * p[3]),
     "Newton's identities give 1/3, not 3/8, for trace(A) trace(A^3)"),
)


@dataclass(frozen=True, slots=True)
class StressEnergyInvariants:
    a: Tuple[float, float, float, float]
    """Authoritative coefficients from the generic trace powers."""
    trace_powers: Tuple[float, float, float, float]
    report: DiscrepancyReport


def stress_energy_invariants(
    s: StressEnergyBlocks,
    assume_traceless: bool = False,
    tol: float = AUDIT_TOL,
    traceless_tol: float = TRACELESS_TOL,
) -> StressEnergyInvariants:
    """a_1..a_4 of the block tensor, with an audit of the closed-form expansions."""
    m = minkowski()
    result = faddeev_leverrier(mixed(symmetric_tensor(s), m))
    p = result.trace_powers
    a = traces_to_coeffs(p)
    scale = s.scale
    if assume_traceless and abs(p[0]) > traceless_tol * m.dim * scale:
        raise NotTracelessError(f"trace(A) = {p[0]:.6g} is not zero")
    x = block_scalars(s)
    table = TRACELESS_EXPANSIONS if assume_traceless else GENERAL_EXPANSIONS
    records = []
    for k, formula, expression, evaluate, note in table:
        generic = p[0] if formula == "trace_relation" else a[k - 1]
        records.append(_record(k, formula, expression, evaluate(x, p), generic, scale, tol, note))
    report = DiscrepancyReport(tuple(records))
    for r in report.mismatches:
        logger.debug("audit mismatch k=%d %s: |diff| = %.3e", r.k, r.formula, r.abs_diff)
    return StressEnergyInvariants(
        (a[0], a[1], a[2], a[3]), (p[0], p[1], p[2], p[3]), report)


def em_audit(f: EMField, tol: float = AUDIT_TOL) -> DiscrepancyReport:
    """Audit the field-tensor closed forms against the generic coefficients."""
    m = minkowski()
    t = em_tensor(f)
    result = faddeev_leverrier(mixed(t, m))
    a, p = result.poly.a, result.trace_powers
    closed = em_invariants(f)
    eb = closed.pseudoscalar
    det_uu = float(np.linalg.det(convert(t, m, Variance.UP_UP).c))
    scale = max(max(abs(v) for v in f.e), max(abs(v) for v in f.b))
    return DiscrepancyReport((
        _record(2, "closed_form", "b.b - e.e", closed.a2, a[1], scale, tol),
        _record(2, "trace_identity", "-1/2 trace(A^2)", -0.5 * p[1], a[1], scale, tol),
        _record(4, "closed_form", "(e.b)^2", eb * eb, a[3], scale, tol,
                "det(A^ab) = (e.b)^2, but a_4 = det(A^a_.b) = det(A^ab) det(g) with det g = -1"),
        _record(4, "signed_closed_form", "-(e.b)^2", closed.a4, a[3], scale, tol),
        _record(4, "det_contravariant", "det(A^ab) = (e.b)^2", closed.det_contravariant,
                det_uu, scale, tol),
    ))

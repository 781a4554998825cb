"""The property suite behind the `selftest` command."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple
import numpy as np
from .algebra.metric import minkowski
from .algebra.sampling import random_metric, random_tensor
from .algebra.tensor import TensorClass, Variance, mixed
from .common.utility import max_abs
from .invariants.basis import express_in_basis
from .invariants.charpoly import cayley_hamilton_residual, faddeev_leverrier
from .invariants.newton import coeffs_to_traces, traces_to_coeffs
from .minkowski.audit import Verdict as AuditVerdict, em_audit, stress_energy_invariants
from .minkowski.fields import EMField, em_tensor
from .minkowski.stress_energy import StressEnergyBlocks
from .transform.report import Verdict, invariance_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Check:
    name: str
    passed: bool
    worst: float
    limit: float


@dataclass(frozen=True, slots=True)
class SelftestResult:
    checks: Tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _random_field(rng: np.random.Generator, bound: float = 10.0) -> EMField:
    return EMField.of(rng.uniform(-bound, bound, 3), rng.uniform(-bound, bound, 3))


def check_em_closed_forms(rng: np.random.Generator) -> float:
    worst = 0.0
    for _ in range(200):
        f = _random_field(rng)
        a = faddeev_leverrier(mixed(em_tensor(f), minkowski())).poly.a
        e, b = np.array(f.e), np.array(f.b)
        scale = max(1.0, max_abs(e), max_abs(b))
        worst = max(worst,
                    abs(a[1] - (b @ b - e @ e)) / scale ** 2,
                    abs(a[3] + (e @ b) ** 2) / scale ** 4)
    return worst


def check_antisymmetric_vanishing(rng: np.random.Generator) -> float:
    worst = 0.0
    for i in range(100):
        n = 2 + i % 5
        m = random_metric(rng, n)
        t = random_tensor(rng, m, TensorClass.ANTISYMMETRIC)
        result = faddeev_leverrier(mixed(t, m))
        scale = max(1.0, max_abs(mixed(t, m)))
        for k in range(1, n + 1, 2):
            worst = max(worst, abs(result.trace_powers[k - 1]) / scale ** k,
                        abs(result.poly.a[k - 1]) / scale ** k)
    return worst


def check_cayley_hamilton(rng: np.random.Generator) -> float:
    worst = 0.0
    for i in range(100):
        n = 2 + i % 5
        m = random_metric(rng, n)
        variance = list(Variance)[i % 4]
        worst = max(worst, cayley_hamilton_residual(random_tensor(rng, m, variance=variance), m))
    return worst


def check_newton_round_trip(rng: np.random.Generator) -> float:
    worst = 0.0
    for i in range(200):
        a = rng.uniform(-1.0, 1.0, size=1 + i % 8)
        p = coeffs_to_traces(a)
        back = np.array(traces_to_coeffs(p))
        worst = max(worst, max_abs(back - a) / max(1.0, max_abs(p)))
    return worst


def check_isometry_invariance(rng: np.random.Generator) -> float:
    worst = 0.0
    for m in (minkowski(), random_metric(rng, 3), random_metric(rng, 5)):
        t = random_tensor(rng, m)
        report = invariance_report(t, m, samples=10, seed=int(rng.integers(1 << 31)), scale=0.5)
        worst = max(worst, max(r.max_invariance_dev for r in report.rows))
    return worst


def check_pseudoscalar(rng: np.random.Generator) -> float:
    """Counts rows of an improper-sampled EM report with the wrong verdict."""
    f = EMField.of(rng.uniform(-1.0, 1.0, 3), rng.uniform(-1.0, 1.0, 3))
    report = invariance_report(em_tensor(f), minkowski(), samples=10,
                               seed=int(rng.integers(1 << 31)), scale=0.5, improper=True)
    expected = {"e.b": Verdict.PSEUDOSCALAR, "pseudoscalar": Verdict.PSEUDOSCALAR,
                "(e.b)^2": Verdict.INVARIANT, "e.e - b.b": Verdict.INVARIANT,
                "e.e": Verdict.NOT_INVARIANT, "b.b": Verdict.NOT_INVARIANT}
    return float(sum(report.row(name).verdict != v for name, v in expected.items()))


def check_basis_reduction(rng: np.random.Generator) -> float:
    worst = 0.0
    classes = (TensorClass.SYMMETRIC, TensorClass.SYMMETRIC_TRACELESS, TensorClass.ANTISYMMETRIC)
    for n in (3, 4, 5):
        m = random_metric(rng, n)
        for tensor_class in classes:
            t = random_tensor(rng, m, tensor_class)
            for k in (n + 1, n + 2):
                worst = max(worst, express_in_basis(t, m, k).rel_diff)
    return worst


def check_audit_verdicts(rng: np.random.Generator) -> float:
    """Counts audit rows whose verdict differs from the expected set."""
    f = _random_field(rng, 1.0)
    em = em_audit(f)
    wrong = sum(em.verdict(k, name) != v for k, name, v in (
        (2, "closed_form", AuditVerdict.MATCH),
        (2, "trace_identity", AuditVerdict.MATCH),
        (4, "signed_closed_form", AuditVerdict.MATCH),
        (4, "det_contravariant", AuditVerdict.MATCH),
    ))
    t = rng.uniform(-1.0, 1.0, size=(3, 3))
    t = 0.5 * (t + t.T)
    # generic trace d + trace(T) vanishes
    blocks = StressEnergyBlocks.of(-float(np.trace(t)), rng.uniform(-1.0, 1.0, 3), t)
    audit = stress_energy_invariants(blocks, assume_traceless=True).report
    wrong += sum(audit.verdict(k, name) != v for k, name, v in (
        (2, "block", AuditVerdict.MATCH),
        (3, "block", AuditVerdict.MATCH),
        (4, "block", AuditVerdict.MISMATCH),
        (4, "trace_identity", AuditVerdict.MATCH),
    ))
    return float(wrong)


CHECKS: Tuple[Tuple[str, Callable[[np.random.Generator], float], float], ...] = (
    ("em_closed_forms", check_em_closed_forms, 1e-10),
    ("antisymmetric_vanishing", check_antisymmetric_vanishing, 1e-9),
    ("cayley_hamilton", check_cayley_hamilton, 1e-9),
    ("newton_round_trip", check_newton_round_trip, 1e-12),
    ("isometry_invariance", check_isometry_invariance, 1e-8),
    ("pseudoscalar_verdicts", check_pseudoscalar, 0.0),
    ("basis_reduction", check_basis_reduction, 1e-8),
    ("audit_verdicts", check_audit_verdicts, 0.0),
)


def run_selftest(seed: int = 0) -> SelftestResult:
    """Run every check with its own generator derived from seed."""
    checks: List[Check] = []
    for index, (name, check, limit) in enumerate(CHECKS):
        worst = check(np.random.default_rng(seed + index))
        passed = worst <= limit
        logger.info("selftest %s: worst %.3e (limit %.1e) %s",
                    name, worst, limit, "ok" if passed else "FAILED")
        checks.append(Check(name, passed, worst, limit))
    return SelftestResult(tuple(checks))

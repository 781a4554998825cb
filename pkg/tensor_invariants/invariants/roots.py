"""Durand-Kerner (Weierstrass) root finding for monic real polynomials."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import numpy as np
from ..common.errors import InvariantsError
from ..common.typedef import ComplexVector

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 500
ROTATION = 0.4
UPDATE_TOL = 1e-13
SNAP_TOL = 1e-14
POLISH_ITERATIONS = 20
MULTIPLE_ROOT_TOL = 1e-8
EPS = float(np.finfo(np.float64).eps)


class ConvergenceError(InvariantsError):
    code = "ConvergenceFailure"


@dataclass(frozen=True, slots=True)
class Root:
    value: complex
    multiplicity: int


def _horner(monic: Sequence[float], z: ComplexVector) -> Tuple[ComplexVector, ComplexVector]:
    """Values and rounding-error bounds of the polynomial at every z."""
    value = np.zeros_like(z)
    bound = np.zeros(z.shape, dtype=np.float64)
    absz = np.abs(z)
    for c in monic:
        value = value * z + c
        bound = bound * absz + abs(c)
    return value, bound


def start_radius(monic: Sequence[float]) -> float:
    """1 + max |a_k|^(1/k); every root lies inside this circle."""
    coeffs = monic[1:]
    if not coeffs:
        return 1.0
    return 1.0 + max(abs(c) ** (1.0 / k) for k, c in enumerate(coeffs, start=1))


def durand_kerner(monic: Sequence[float]) -> Tuple[ComplexVector, float]:
    """All roots of x^n + c_1 x^(n-1) + ... + c_n, with the start radius.

    Stops when every update is below UPDATE_TOL times the radius or when every
    residual is at the rounding floor of its evaluation.
    """
    n = len(monic) - 1
    radius = start_radius(monic)
    if n == 0:
        return np.zeros(0, dtype=np.complex128), radius
    angles = 2.0 * np.pi * np.arange(n) / n + ROTATION
    z = radius * np.exp(1j * angles)
    off_diagonal = ~np.eye(n, dtype=bool)
    for iteration in range(1, MAX_ITERATIONS + 1):
        value, bound = _horner(monic, z)
        if np.all(np.abs(value) <= 8.0 * n * EPS * bound):
            logger.debug("durand-kerner: residual floor after %d iterations", iteration)
            return z, radius
        diffs = z[:, None] - z[None, :]
        denom = np.prod(np.where(off_diagonal, diffs, 1.0), axis=1)
        if np.any(denom == 0):
            # coincident approximations; nudge them apart deterministically
            z = z + UPDATE_TOL * radius * np.exp(1j * (angles + iteration))
            continue
        update = value / denom
        z = z - update
        if np.max(np.abs(update)) <= UPDATE_TOL * radius:
            logger.debug("durand-kerner: converged after %d iterations", iteration)
            return z, radius
    raise ConvergenceError(f"Durand-Kerner did not converge in {MAX_ITERATIONS} iterations")


def _cluster_radius(n: int, m: int, radius: float) -> float:
    """Largest spread expected from an m-fold root computed in double precision."""
    return 10.0 * (16.0 * n * EPS) ** (1.0 / m) * radius


def cluster_roots(z: ComplexVector, radius: float) -> List[Root]:
    """Merge approximations that together look like one multiple root.

    Larger multiplicities are tried first: a point and its m-1 nearest free
    neighbours merge into their centroid when their spread fits an m-fold root.
    """
    n = len(z)
    free = list(range(n))
    roots: List[Root] = []
    for m in range(n, 1, -1):
        i = 0
        while i < len(free) and len(free) >= m:
            anchor = free[i]
            nearest = sorted(free, key=lambda j: (abs(z[j] - z[anchor]), j))[:m]
            members = z[nearest]
            centre = complex(np.mean(members))
            spread = float(np.max(np.abs(members - centre)))
            if spread <= _cluster_radius(n, m, radius):
                logger.debug("merged %d roots near %s (spread %.3e)", m, centre, spread)
                roots.append(Root(centre, m))
                free = [j for j in free if j not in nearest]
            else:
                i += 1
    roots.extend(Root(complex(z[j]), 1) for j in free)
    return roots


def derivative(coeffs: Sequence[float], order: int) -> List[float]:
    """Coefficients of the order-th derivative, highest power first."""
    out = list(coeffs)
    for _ in range(order):
        degree = len(out) - 1
        out = [c * (degree - i) for i, c in enumerate(out[:-1])]
    return out


def _at(coeffs: Sequence[float], z: complex) -> Tuple[complex, float]:
    value, bound = _horner(coeffs, np.array([z], dtype=np.complex128))
    return complex(value[0]), float(bound[0])


def _exact_root(monic: Sequence[float], value: complex, m: int, reach: float) -> Optional[complex]:
    """0 or the nearest integer, when the polynomial and its first m-1 derivatives vanish there."""
    if not np.isfinite(value):
        return None
    for candidate in (0.0, float(round(value.real))):
        if abs(value - candidate) > reach:
            continue
        if all(_at(derivative(monic, j), candidate)[0] == 0 for j in range(m)):
            return complex(candidate, 0.0)
    return None


def polish_root(monic: Sequence[float], root: Root, radius: float) -> Root:
    """Refine a clustered root with Newton steps on the (m-1)-th derivative.

    An m-fold root is a simple root of that derivative. The refined value is
    kept only when it stays inside the cluster and the (m-2)-th derivative
    also vanishes there.
    """
    n = len(monic) - 1
    m = root.multiplicity
    reach = _cluster_radius(n, m, radius)
    exact = _exact_root(monic, root.value, m, reach)
    if exact is not None:
        return Root(exact, m)
    if m == 1:
        return root
    target = derivative(monic, m - 1)
    slope = derivative(target, 1)
    z = root.value
    for _ in range(POLISH_ITERATIONS):
        value, _ = _at(target, z)
        d, _ = _at(slope, z)
        if d == 0:
            break
        step = value / d
        z -= step
        if abs(step) <= 4.0 * EPS * abs(z):
            break
    if not abs(z - root.value) <= reach:
        logger.debug("polishing left the cluster at %s; keeping the centroid", root.value)
        return root
    residual, bound = _at(derivative(monic, m - 2), z)
    if abs(residual) > MULTIPLE_ROOT_TOL * bound:
        logger.debug("no %d-fold root near %s; keeping the centroid", m, root.value)
        return root
    return Root(z, m)


def _snap(monic: Sequence[float], value: complex, radius: float) -> complex:
    """Drop the imaginary part when it is noise or the real part is itself a root to rounding."""
    if abs(value.imag) <= SNAP_TOL * radius:
        return complex(value.real, 0.0)
    n = len(monic) - 1
    real = np.array([complex(value.real, 0.0)])
    residual, bound = _horner(monic, real)
    if abs(residual[0]) <= 8.0 * n * EPS * bound[0]:
        return complex(value.real, 0.0)
    return value


def _pair_conjugates(roots: List[Root]) -> List[Root]:
    """Make the non-real roots of a real polynomial exact conjugate pairs."""
    upper = [r for r in roots if r.value.imag > 0]
    lower = [r for r in roots if r.value.imag < 0]
    if len(upper) != len(lower):
        logger.warning("unpaired complex roots: %d above, %d below the real axis",
                       len(upper), len(lower))
        return roots
    paired = [r for r in roots if r.value.imag == 0]
    for u in upper:
        partner = min(lower, key=lambda r: abs(r.value - u.value.conjugate()))
        lower.remove(partner)
        value = complex(0.5 * (u.value.real + partner.value.real),
                        0.5 * (u.value.imag - partner.value.imag))
        paired.append(Root(value, u.multiplicity))
        paired.append(Root(value.conjugate(), partner.multiplicity))
    return paired


def polynomial_roots(monic: Sequence[float]) -> List[Root]:
    """Roots with multiplicities, sorted by (real desc, imag desc)."""
    z, radius = durand_kerner(monic)
    polished = [polish_root(monic, r, radius) for r in cluster_roots(z, radius)]
    roots = [Root(_snap(monic, r.value, radius), r.multiplicity) for r in polished]
    roots = _pair_conjugates(roots)
    return sorted(roots, key=lambda r: (-r.value.real, -r.value.imag))

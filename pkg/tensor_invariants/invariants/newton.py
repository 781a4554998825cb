"""Newton's identities between power sums p_k and elementary symmetric values a_k."""
from typing import List, Sequence
import numpy as np
import numpy.typing as npt
from ..common.errors import PreconditionError


def traces_to_coeffs(p: Sequence[float]) -> List[float]:
    """a_1..a_n from p_1..p_n, via k a_k = sum_{i=1..k} (-1)^(i-1) a_(k-i) p_i with a_0 = 1."""
    if len(p) < 1:
        raise PreconditionError("Need at least one power sum")
    a = [1.0]
    for k in range(1, len(p) + 1):
        acc = sum((-1.0) ** (i - 1) * a[k - i] * p[i - 1] for i in range(1, k + 1))
        a.append(acc / k)
    return a[1:]


def coeffs_to_traces(a: Sequence[float]) -> List[float]:
    """p_1..p_n from a_1..a_n; the same recurrence solved for p_k."""
    if len(a) < 1:
        raise PreconditionError("Need at least one coefficient")
    full = [1.0, *a]
    p: List[float] = []
    for k in range(1, len(a) + 1):
        rest = sum((-1.0) ** (i - 1) * full[k - i] * p[i - 1] for i in range(1, k))
        p.append((-1.0) ** (k - 1) * (k * full[k] - rest))
    return p


def elementary_symmetric(values: npt.ArrayLike) -> List[complex]:
    """e_1..e_n of the given (possibly complex) values."""
    e = np.zeros(len(np.atleast_1d(values)) + 1, dtype=np.complex128)
    e[0] = 1.0
    for j, x in enumerate(np.atleast_1d(values), start=1):
        e[1:j + 1] = e[1:j + 1] + x * e[0:j]
    return [complex(v) for v in e[1:]]

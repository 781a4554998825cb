import numpy as np
import numpy.typing as npt
from .typedef import Matrix


def frozen(arr: npt.ArrayLike, dtype: type = np.float64) -> Matrix:
    """Return a read-only copy of arr."""
    out = np.array(arr, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


def max_abs(arr: npt.ArrayLike) -> float:
    """Largest absolute entry, 0.0 for an empty array."""
    a = np.asarray(arr)
    return float(np.max(np.abs(a))) if a.size else 0.0


def relative_deviation(before: float, after: float) -> float:
    """|after - before| / max(1, |before|)."""
    return abs(after - before) / max(1.0, abs(before))

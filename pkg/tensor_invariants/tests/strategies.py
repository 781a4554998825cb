import numpy as np
from hypothesis.extra.numpy import arrays
from hypothesis.strategies import floats

components = floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False,
                    allow_subnormal=False)

vectors3 = arrays(np.float64, 3, elements=components)

unit_vectors3 = arrays(np.float64, 3, elements=floats(min_value=-1, max_value=1, allow_subnormal=False))


def rel_close(a: float, b: float, tol: float) -> bool:
    """|a - b| <= tol * max(1, |b|)."""
    return abs(a - b) <= tol * max(1.0, abs(b))

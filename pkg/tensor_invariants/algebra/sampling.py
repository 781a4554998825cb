"""Seeded random metrics and tensors for property checks."""
from typing import Optional
import numpy as np
from .metric import Metric, new_metric
from .tensor import Tensor2, TensorClass, Variance, convert, new_tensor


def random_metric(rng: np.random.Generator, n: int, negative: Optional[int] = None) -> Metric:
    """Q^T D Q with Q orthogonal and |D| uniform in [0.5, 2]; `negative` fixes q."""
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    if negative is None:
        negative = int(rng.integers(0, n + 1))
    signs = np.where(np.arange(n) < negative, -1.0, 1.0)
    d = signs * rng.uniform(0.5, 2.0, size=n)
    g = q.T @ np.diag(d) @ q
    return new_metric(0.5 * (g + g.T))


def random_tensor(
    rng: np.random.Generator,
    m: Metric,
    tensor_class: TensorClass = TensorClass.GENERAL,
    variance: Variance = Variance.UP_UP,
    scale: float = 1.0,
) -> Tensor2:
    """Components uniform in [-scale, scale], shaped to the requested class in UpUp form."""
    n = m.dim
    c = rng.uniform(-scale, scale, size=(n, n))
    match tensor_class:
        case TensorClass.SYMMETRIC:
            c = 0.5 * (c + c.T)
        case TensorClass.SYMMETRIC_TRACELESS:
            c = 0.5 * (c + c.T)
            # remove the metric trace: A^ij g_ij = trace(A g)
            c = c - (np.trace(c @ m.g) / n) * m.g_inv
        case TensorClass.ANTISYMMETRIC:
            c = 0.5 * (c - c.T)
        case TensorClass.GENERAL:
            pass
    t = new_tensor(c, Variance.UP_UP)
    return convert(t, m, variance)


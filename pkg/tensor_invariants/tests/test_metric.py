import numpy as np
import pytest
from ..algebra.metric import (AsymmetricMetricError, DegenerateMetricError, euclidean,
                              is_minkowski, metric_to_json, minkowski, new_metric)
from ..algebra.sampling import random_metric
from ..common.errors import PreconditionError


def test_identity_metric():
    m = new_metric(np.eye(3))
    assert m.dim == 3
    assert m.sig == (3, 0)
    assert np.array_equal(m.g_inv, np.eye(3))


def test_minkowski():
    m = minkowski()
    assert m.sig == (1, 3)
    assert np.array_equal(m.g, np.diag([1.0, -1.0, -1.0, -1.0]))
    assert np.array_equal(m.g_inv, np.diag([1.0, -1.0, -1.0, -1.0]))
    assert is_minkowski(m)
    assert not is_minkowski(euclidean(4))


def test_minkowski_from_matrix():
    m = new_metric(np.diag([1.0, -1.0, -1.0, -1.0]))
    assert m.sig == (1, 3)
    assert m == minkowski()


def test_degenerate_metric():
    with pytest.raises(DegenerateMetricError):
        new_metric(np.diag([1.0, 0.0]))


def test_nearly_degenerate_metric():
    with pytest.raises(DegenerateMetricError):
        new_metric([[1.0, 1.0], [1.0, 1.0 + 1e-14]])


def test_asymmetric_metric():
    with pytest.raises(AsymmetricMetricError):
        new_metric([[1.0, 0.5], [0.0, 1.0]])


@pytest.mark.parametrize("g", [
    [[1.0]],
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
    [[1.0, float("nan")], [float("nan"), 1.0]],
])
def test_malformed_metric(g):
    with pytest.raises(PreconditionError):
        new_metric(g)


def test_euclidean():
    assert np.array_equal(euclidean(2).g, np.eye(2))
    m = euclidean(4)
    assert m.sig == (4, 0)
    with pytest.raises(PreconditionError):
        euclidean(1)


def test_inverse_contract():
    rng = np.random.default_rng(7)
    for i in range(200):
        m = random_metric(rng, 2 + i % 7)
        assert np.max(np.abs(m.g_inv @ m.g - np.eye(m.dim))) <= 1e-10


def test_signature_is_congruence_invariant():
    rng = np.random.default_rng(11)
    for i in range(100):
        n = 2 + i % 4
        negative = int(rng.integers(0, n + 1))
        m = random_metric(rng, n, negative)
        assert m.sig == (n - negative, negative)
        q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
        q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
        p = q1 @ np.diag(rng.uniform(0.8, 1.25, size=n)) @ q2
        congruent = p.T @ m.g @ p
        assert new_metric(0.5 * (congruent + congruent.T)).sig == m.sig


def test_new_metric_is_deterministic():
    g = [[2.0, 0.3, 0.0], [0.3, -1.0, 0.1], [0.0, 0.1, 0.5]]
    a, b = new_metric(g), new_metric(g)
    assert np.array_equal(a.g, b.g)
    assert np.array_equal(a.g_inv, b.g_inv)
    assert a.sig == b.sig


def test_metric_is_read_only():
    m = minkowski()
    with pytest.raises(ValueError):
        m.g[0, 0] = 2.0


def test_metric_to_json():
    assert metric_to_json(euclidean(2)) == {"dim": 2, "g": [[1.0, 0.0], [0.0, 1.0]]}

import numpy as np
import pytest
from ..algebra.metric import euclidean, minkowski
from ..algebra.sampling import random_metric, random_tensor
from ..algebra.tensor import (TensorClass, Variance, convert, identity, mixed, new_tensor,
                              trace_power)
from ..invariants.basis import (Representation, UnsupportedClassError, basis_degrees,
                                express_in_basis, independence_witness, minimal_integrity_basis,
                                reduce_power)
from ..invariants.charpoly import (CharPoly, cayley_hamilton_residual, char_poly, evaluate,
                                   faddeev_leverrier, matrix_polynomial)
from ..invariants.eigen import eigen, null_space
from ..invariants.newton import coeffs_to_traces, elementary_symmetric, traces_to_coeffs
from ..invariants.roots import (Root, cluster_roots, derivative, polish_root, polynomial_roots,
                                start_radius)
from ..common.errors import PreconditionError
from ..minkowski.fields import EMField, em_tensor


def _scale(t, m) -> float:
    return max(1.0, float(np.max(np.abs(mixed(t, m)))))


def test_char_poly_of_identity():
    m = euclidean(3)
    poly = char_poly(identity(m), m)
    assert poly.a == (3.0, 3.0, 1.0)
    assert poly.monic() == [1.0, -3.0, 3.0, -1.0]
    assert poly.det == 1.0
    assert evaluate(poly, 1.0) == 0.0


def test_char_poly_of_em_tensor():
    poly = char_poly(em_tensor(EMField.of([1.0, 0.0, 0.0], [0.0, 0.0, 0.0])), minkowski())
    np.testing.assert_allclose(poly.a, [0.0, -1.0, 0.0, 0.0], atol=1e-15)


def test_char_poly_matches_newton_identities():
    rng = np.random.default_rng(20)
    for i in range(200):
        n = 2 + i % 5
        m = random_metric(rng, n)
        t = random_tensor(rng, m, variance=list(Variance)[i % 4])
        poly = char_poly(t, m)
        via_traces = traces_to_coeffs([trace_power(t, m, k) for k in range(1, n + 1)])
        scale = _scale(t, m)
        for k, (a, b) in enumerate(zip(poly.a, via_traces), start=1):
            assert abs(a - b) <= 1e-9 * max(abs(b), scale ** k)


def test_leverrier_by_products():
    rng = np.random.default_rng(21)
    m = random_metric(rng, 5)
    t = random_tensor(rng, m)
    result = faddeev_leverrier(mixed(t, m))
    for k in range(1, 6):
        assert result.trace_powers[k - 1] == pytest.approx(trace_power(t, m, k), rel=1e-12, abs=1e-9)
    assert result.final_residual <= 1e-9 * _scale(t, m) ** 5


def test_cayley_hamilton():
    rng = np.random.default_rng(22)
    for i in range(500):
        n = 2 + i % 5
        m = random_metric(rng, n)
        t = random_tensor(rng, m, variance=list(Variance)[i % 4])
        assert cayley_hamilton_residual(t, m) <= 1e-9


def test_cayley_hamilton_edge_cases():
    m = euclidean(4)
    assert cayley_hamilton_residual(new_tensor(np.zeros((4, 4)), Variance.UP_UP), m) == 0.0
    assert cayley_hamilton_residual(identity(m), m) <= 1e-14


def test_matrix_polynomial():
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.array_equal(matrix_polynomial(CharPoly(2, (0.0, 0.0)), a), a @ a)
    expected = a @ a - 3.0 * a + 2.0 * np.eye(2)
    assert np.array_equal(matrix_polynomial(CharPoly(2, (3.0, 2.0)), a), expected)
    poly = char_poly(new_tensor(a, Variance.UP_DOWN), euclidean(2))
    assert poly.a == (5.0, -2.0)
    assert np.array_equal(matrix_polynomial(poly, a), np.zeros((2, 2)))


def test_odd_coefficients_of_antisymmetric_tensors_vanish():
    rng = np.random.default_rng(23)
    for i in range(500):
        n = 2 + i % 5
        m = random_metric(rng, n)
        t = random_tensor(rng, m, TensorClass.ANTISYMMETRIC, list(Variance)[i % 4])
        result = faddeev_leverrier(mixed(t, m))
        scale = _scale(t, m)
        for k in range(1, n + 1, 2):
            assert abs(result.poly.a[k - 1]) <= 1e-9 * scale ** k
            assert abs(result.trace_powers[k - 1]) <= 1e-9 * scale ** k


@pytest.mark.parametrize("p, a", [
    ([3.0, 3.0, 3.0], [3.0, 3.0, 1.0]),
    ([0.0, 2.0, 0.0, 2.0], [0.0, -1.0, 0.0, 0.0]),
    ([2.5, 6.25], [2.5, 0.0]),
])
def test_newton_identities(p, a):
    assert traces_to_coeffs(p) == pytest.approx(a, abs=1e-15)
    assert coeffs_to_traces(a) == pytest.approx(p, abs=1e-15)


def test_newton_round_trip():
    rng = np.random.default_rng(24)
    for i in range(1000):
        a = rng.uniform(-1.0, 1.0, size=1 + i % 8)
        p = coeffs_to_traces(a)
        back = traces_to_coeffs(p)
        np.testing.assert_allclose(back, a, rtol=0, atol=1e-12 * max(1.0, np.max(np.abs(p))))


def test_newton_needs_input():
    with pytest.raises(PreconditionError):
        traces_to_coeffs([])
    with pytest.raises(PreconditionError):
        coeffs_to_traces([])


def test_elementary_symmetric():
    assert elementary_symmetric([1.0, 2.0, 3.0]) == [6.0, 11.0, 6.0]
    np.testing.assert_allclose(elementary_symmetric([1j, -1j]), [0.0, 1.0], atol=1e-15)


def test_polynomial_roots():
    roots = polynomial_roots([1.0, -6.0, 11.0, -6.0])
    assert [r.multiplicity for r in roots] == [1, 1, 1]
    np.testing.assert_allclose([r.value for r in roots], [3.0, 2.0, 1.0], atol=1e-10)
    assert all(r.value.imag == 0.0 for r in roots)


def test_polynomial_roots_multiple():
    roots = polynomial_roots([1.0, -6.0, 12.0, -8.0])
    assert len(roots) == 1
    assert roots[0].multiplicity == 3
    assert roots[0].value == 2.0


def test_polynomial_roots_complex_pairs_sorted():
    roots = polynomial_roots([1.0, -1.0, 1.0, -1.0])
    values = [r.value for r in roots]
    np.testing.assert_allclose(values, [1.0, 1j, -1j], atol=1e-10)
    assert values[1] == values[2].conjugate()


def test_start_radius():
    assert start_radius([1.0, -6.0, 12.0, -8.0]) == pytest.approx(7.0)
    assert start_radius([1.0]) == 1.0
    assert polynomial_roots([1.0]) == []
    (root,) = polynomial_roots([1.0, -2.5])
    assert root.multiplicity == 1
    assert abs(root.value - 2.5) <= 1e-14


def test_derivative():
    assert derivative([1.0, -6.0, 12.0, -8.0], 0) == [1.0, -6.0, 12.0, -8.0]
    assert derivative([1.0, -6.0, 12.0, -8.0], 1) == [3.0, -12.0, 12.0]
    assert derivative([1.0, -6.0, 12.0, -8.0], 2) == [6.0, -12.0]


def test_cluster_roots_merges_a_triple_root():
    spread = 1e-5 * np.exp(2j * np.pi * np.arange(3) / 3)
    roots = cluster_roots(np.concatenate([1.0 + spread, [5.0]]), 6.0)
    assert sorted(r.multiplicity for r in roots) == [1, 3]
    triple = next(r for r in roots if r.multiplicity == 3)
    assert abs(triple.value - 1.0) <= 1e-12
    single = next(r for r in roots if r.multiplicity == 1)
    assert single.value == 5.0


def test_cluster_roots_keeps_close_distinct_roots():
    roots = cluster_roots(np.array([1.0, 1.001, 3.0], dtype=np.complex128), 4.0)
    assert [r.multiplicity for r in roots] == [1, 1, 1]
    assert [r.value.real for r in roots] == [1.0, 1.001, 3.0]


def test_polish_root_snaps_to_an_exact_multiple_root():
    # (x - 1)^3 (x - 1.5)
    monic = [1.0, -4.5, 7.5, -5.5, 1.5]
    assert polish_root(monic, Root(1.0 + 1e-4, 3), start_radius(monic)) == Root(1.0, 3)


def test_polish_root_refines_a_double_root():
    monic = list(np.poly([0.3, 0.3, -2.0]))
    polished = polish_root(monic, Root(0.3 + 1e-7, 2), start_radius(monic))
    assert polished.multiplicity == 2
    assert abs(polished.value - 0.3) <= 1e-14


def test_polish_root_keeps_a_centroid_of_distinct_roots():
    # (x - 1)(x - 1.001) has no double root at the midpoint
    root = Root(1.0005, 2)
    assert polish_root([1.0, -2.001, 1.001], root, start_radius([1.0, -2.001, 1.001])) == root


def test_eigen_of_identity():
    decomp = eigen(identity(euclidean(2)), euclidean(2))
    assert decomp.values == [1.0, 1.0]
    assert decomp.pairs[0].multiplicity == 2
    assert decomp.pairs[0].geometric == 2


def test_eigen_of_em_tensor():
    decomp = eigen(em_tensor(EMField.of([1.0, 0.0, 0.0], [0.0, 0.0, 0.0])), minkowski())
    np.testing.assert_allclose(decomp.values, [1.0, 0.0, 0.0, -1.0], atol=1e-6)


def test_eigen_with_minkowski_conversion():
    t = new_tensor(np.diag([3.0, -1.0, -1.0, -1.0]), Variance.UP_UP)
    decomp = eigen(t, minkowski())
    np.testing.assert_allclose(decomp.values, [3.0, 1.0, 1.0, 1.0], rtol=0, atol=1e-12)
    assert [p.multiplicity for p in decomp.pairs] == [1, 3, 3, 3]


def _checked_eigen(t, m):
    """eigen(t, m) after asserting the pair residuals and the coefficient reconstruction."""
    a = mixed(t, m)
    norm = np.linalg.norm(a, 2)
    decomp = eigen(t, m)
    assert len(decomp.pairs) == m.dim
    for pair in decomp.pairs:
        x = np.array(pair.vector)
        assert np.linalg.norm(a @ x - pair.value * x) <= 1e-8 * norm * np.linalg.norm(x)
    scale = _scale(t, m)
    for k, (ek, ak) in enumerate(zip(elementary_symmetric(decomp.values), char_poly(t, m).a),
                                 start=1):
        assert abs(ek - ak) <= 1e-7 * max(abs(ak), scale ** k)
    return decomp


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_eigen_of_zero_tensor(n):
    decomp = _checked_eigen(new_tensor(np.zeros((n, n)), Variance.UP_DOWN), euclidean(n))
    assert decomp.values == [0.0] * n
    assert decomp.pairs[0].geometric == n


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_eigen_of_identity_in_higher_dimensions(n):
    m = euclidean(n)
    decomp = _checked_eigen(identity(m), m)
    assert decomp.values == [1.0] * n
    assert decomp.pairs[0].multiplicity == n
    assert decomp.pairs[0].geometric == n


def test_eigen_with_a_fourfold_value():
    t = new_tensor(np.diag([2.0, 2.0, -1.0, 2.0, 2.0]), Variance.UP_DOWN)
    decomp = _checked_eigen(t, euclidean(5))
    assert decomp.values == [2.0, 2.0, 2.0, 2.0, -1.0]
    assert [p.multiplicity for p in decomp.pairs] == [4, 4, 4, 4, 1]
    assert [p.geometric for p in decomp.pairs] == [4, 4, 4, 4, 1]


@pytest.mark.parametrize("n", [5, 6])
def test_eigen_of_a_jordan_block(n):
    t = new_tensor(0.5 * np.eye(n) + np.eye(n, k=1), Variance.UP_DOWN)
    decomp = _checked_eigen(t, euclidean(n))
    np.testing.assert_allclose(decomp.values, [0.5] * n, rtol=0, atol=1e-12)
    assert decomp.pairs[0].multiplicity == n
    assert decomp.pairs[0].geometric == 1


def test_repeated_values_under_random_metrics():
    rng = np.random.default_rng(30)
    for n in (3, 4, 5, 6):
        m = random_metric(rng, n)
        p = np.eye(n) + 0.3 * rng.uniform(-1.0, 1.0, size=(n, n))
        a = p @ np.diag([2.0] * (n - 1) + [-1.0]) @ np.linalg.inv(p)
        t = convert(new_tensor(a, Variance.UP_DOWN), m, Variance.UP_UP)
        decomp = _checked_eigen(t, m)
        np.testing.assert_allclose(decomp.values, [2.0] * (n - 1) + [-1.0], rtol=0, atol=1e-9)
        assert decomp.pairs[0].multiplicity == n - 1


def test_eigenpair_residuals():
    rng = np.random.default_rng(25)
    for i in range(60):
        n = 2 + i % 4
        m = euclidean(n) if i % 2 else random_metric(rng, n)
        tensor_class = TensorClass.SYMMETRIC if i % 3 else TensorClass.GENERAL
        t = random_tensor(rng, m, tensor_class)
        a = mixed(t, m)
        norm = np.linalg.norm(a, 2)
        decomp = eigen(t, m)
        assert len(decomp.pairs) == n
        for pair in decomp.pairs:
            x = np.array(pair.vector)
            assert np.linalg.norm(a @ x - pair.value * x) <= 1e-8 * norm * np.linalg.norm(x)
        reals = [v.real for v in decomp.values]
        assert reals == sorted(reals, reverse=True)


def test_eigenvalues_reproduce_coefficients():
    rng = np.random.default_rng(26)
    for i in range(100):
        n = 2 + i % 5
        m = random_metric(rng, n)
        t = random_tensor(rng, m, variance=list(Variance)[i % 4])
        poly = char_poly(t, m)
        e = elementary_symmetric(eigen(t, m).values)
        scale = _scale(t, m)
        for k, (ek, ak) in enumerate(zip(e, poly.a), start=1):
            assert abs(ek - ak) <= 1e-7 * max(abs(ak), scale ** k)


def test_null_space():
    b = np.array([[1.0, 2.0], [2.0, 4.0]])
    (x,) = null_space(b, 1e-10)
    np.testing.assert_allclose(b @ x, 0.0, atol=1e-14)
    assert np.linalg.norm(x) == pytest.approx(1.0)
    assert len(null_space(np.zeros((3, 3)), 1e-10)) == 3


def test_basis_degrees():
    assert basis_degrees(TensorClass.SYMMETRIC, 4) == [1, 2, 3, 4]
    assert basis_degrees(TensorClass.SYMMETRIC_TRACELESS, 4) == [2, 3, 4]
    assert basis_degrees(TensorClass.ANTISYMMETRIC, 5) == [2, 4]
    with pytest.raises(UnsupportedClassError):
        basis_degrees(TensorClass.GENERAL, 3)


def test_em_minimal_basis():
    e, b = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 3.0])
    basis = minimal_integrity_basis(em_tensor(EMField.of(e, b)), minkowski(), Representation.COEFFICIENTS)
    assert basis.tensor_class == TensorClass.ANTISYMMETRIC
    assert [entry.name for entry in basis.entries] == ["a_2", "a_4"]
    assert basis.degrees == [2, 4]
    assert basis.entries[0].value == pytest.approx(b @ b - e @ e, rel=1e-12)
    assert basis.entries[1].value == pytest.approx(-(e @ b) ** 2, rel=1e-12)
    assert "det" in basis.convention


def test_minimal_basis_by_class():
    rng = np.random.default_rng(27)
    m = random_metric(rng, 4)
    traceless = minimal_integrity_basis(random_tensor(rng, m, TensorClass.SYMMETRIC_TRACELESS), m)
    assert traceless.degrees == [2, 3, 4]
    assert traceless.representation == Representation.TRACE_POWERS
    assert [entry.name for entry in traceless.entries] == ["trace(A^2)", "trace(A^3)", "trace(A^4)"]
    symmetric = minimal_integrity_basis(random_tensor(rng, m, TensorClass.SYMMETRIC), m)
    assert symmetric.degrees == [1, 2, 3, 4]
    with pytest.raises(UnsupportedClassError):
        minimal_integrity_basis(random_tensor(rng, m), m)


def test_both_bases_share_degrees():
    rng = np.random.default_rng(28)
    for n in (3, 4, 5):
        m = random_metric(rng, n)
        for tensor_class in (TensorClass.SYMMETRIC, TensorClass.SYMMETRIC_TRACELESS,
                             TensorClass.ANTISYMMETRIC):
            t = random_tensor(rng, m, tensor_class)
            traces = minimal_integrity_basis(t, m, Representation.TRACE_POWERS)
            coeffs = minimal_integrity_basis(t, m, Representation.COEFFICIENTS)
            assert traces.degrees == coeffs.degrees


def test_reduce_power():
    # x^2 = 3x - 2 for phi = (x - 1)(x - 2): a = (3, 2)
    assert reduce_power([3.0, 2.0], 1) == [0.0, 1.0]
    assert reduce_power([3.0, 2.0], 2) == [-2.0, 3.0]
    assert reduce_power([3.0, 2.0], 3) == [-6.0, 7.0]


def test_express_in_basis():
    rng = np.random.default_rng(29)
    for n in (3, 4, 5):
        m = random_metric(rng, n)
        for tensor_class in (TensorClass.SYMMETRIC, TensorClass.SYMMETRIC_TRACELESS,
                             TensorClass.ANTISYMMETRIC):
            t = random_tensor(rng, m, tensor_class)
            for k in (n + 1, n + 2):
                record = express_in_basis(t, m, k)
                assert record.k == k
                assert record.rel_diff <= 1e-8
                assert len(record.reduction) == n


def test_express_in_basis_em_tensor():
    f = EMField.of([0.3, -1.2, 0.8], [1.1, 0.4, -0.6])
    record = express_in_basis(em_tensor(f), minkowski(), 6)
    assert record.rel_diff <= 1e-8


def test_express_in_basis_identity():
    m = euclidean(3)
    record = express_in_basis(identity(m), m, 5)
    assert record.direct == pytest.approx(3.0, abs=1e-12)
    assert record.reduced == pytest.approx(3.0, abs=1e-12)


def test_express_in_basis_rejects():
    m = euclidean(3)
    with pytest.raises(PreconditionError):
        express_in_basis(identity(m), m, 3)
    with pytest.raises(UnsupportedClassError):
        express_in_basis(new_tensor([[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
                                    Variance.UP_UP), m, 4)


def test_independence_witness():
    m = euclidean(4)
    (a, b), (c, d) = independence_witness()
    assert trace_power(a, m, 2) == pytest.approx(trace_power(b, m, 2))
    assert trace_power(a, m, 4) != pytest.approx(trace_power(b, m, 4))
    assert trace_power(c, m, 4) == pytest.approx(trace_power(d, m, 4))
    assert trace_power(c, m, 2) != pytest.approx(trace_power(d, m, 2))
    for t in (a, b, c, d):
        assert minimal_integrity_basis(t, m).degrees == [2, 4]

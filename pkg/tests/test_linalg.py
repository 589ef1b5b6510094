import numpy as np
import pytest
from scipy.linalg import logm

from steering_analysis.core.errors import MatrixDomainError, NotHermitianError, SupportError
from steering_analysis.core.linalg import (
    apply_kraus,
    conditional_mutual_information,
    eig_hermitian,
    log_frechet_apply,
    matrix_function,
    partial_trace,
    relative_entropy,
    trace_norm,
    von_neumann_entropy,
)
from steering_analysis.models import DensityOperator, HermitianOperator
from steering_analysis.pipeline import random_density, random_hermitian, random_instrument


def _logm2(m):
    return np.real_if_close(logm(m)) / np.log(2.0)


@pytest.mark.parametrize("dim", [1, 2, 3, 5])
def test_eig_methods_agree(rng, dim):
    m = random_hermitian(dim, rng)
    lapack = eig_hermitian(m)
    jacobi = eig_hermitian(m, method="jacobi")

    assert np.allclose(lapack.eigenvalues, jacobi.eigenvalues, atol=1e-10)
    assert np.allclose(jacobi.reconstruct(), m, atol=1e-9)
    v = jacobi.eigenvectors
    assert np.allclose(v.conj().T @ v, np.eye(dim), atol=1e-10)
    assert np.all(np.diff(jacobi.eigenvalues) >= -1e-12)


def test_not_hermitian_rejected():
    with pytest.raises(NotHermitianError):
        HermitianOperator(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_matrix_function_domain_error():
    m = np.diag([1.0, -1.0])
    with pytest.raises(MatrixDomainError):
        matrix_function(m, np.log)

    # 支撑限制下零本征值被映射为 0
    restricted = matrix_function(np.diag([0.5, 0.0]), np.log2, support_restricted=True)
    assert np.allclose(restricted.matrix, np.diag([-1.0, 0.0]))


def test_relative_entropy_matches_logm(rng):
    for dim in (2, 3, 4):
        rho = random_density(dim, None, rng).matrix
        sigma = random_density(dim, None, rng).matrix
        expected = np.real(np.trace(rho @ (_logm2(rho) - _logm2(sigma))))

        value = relative_entropy(rho, sigma)
        assert value.is_finite
        assert float(value) == pytest.approx(expected, abs=1e-9)


def test_relative_entropy_support():
    zero = DensityOperator.pure([1.0, 0.0])
    one = DensityOperator.pure([0.0, 1.0])
    mixed = DensityOperator.maximally_mixed(2)

    assert not relative_entropy(zero, one).is_finite
    assert float(relative_entropy(zero, one)) == float('inf')
    assert float(relative_entropy(zero, mixed)) == pytest.approx(1.0, abs=1e-12)
    assert float(relative_entropy(mixed, mixed)) == pytest.approx(0.0, abs=1e-12)
    # 支撑包含时有限
    assert relative_entropy(zero, np.diag([0.3, 0.7])).is_finite


def test_klein_inequality(rng):
    for _ in range(5):
        rho = random_density(3, int(rng.integers(1, 4)), rng)
        sigma = random_density(3, None, rng)
        assert float(relative_entropy(rho, sigma)) >= 0.0


def test_apply_kraus_channel(rng):
    instrument = random_instrument(3, 2, 2, rng)
    kraus = [k for branch in instrument.branches for k in branch]
    rho = random_density(3, None, rng).matrix
    sigma = random_density(3, None, rng).matrix

    out = apply_kraus(rho, kraus)
    assert out.shape == (2, 2)
    assert np.allclose(out, instrument.apply_sum(rho))
    assert np.trace(out).real == pytest.approx(1.0)
    assert float(relative_entropy(out, apply_kraus(sigma, kraus))) <= float(relative_entropy(rho, sigma)) + 1e-8

    batch = np.stack([rho, sigma])
    assert np.allclose(apply_kraus(batch, kraus)[1], apply_kraus(sigma, kraus))


def test_partial_trace_against_reshape(rng):
    dims = (2, 3, 2)
    m = random_density(12, None, rng).matrix
    t = m.reshape(dims + dims)

    expected_b = np.einsum('ibjicj->bc', t)
    assert np.allclose(partial_trace(m, dims, [1]).matrix, expected_b)

    expected_ac = np.einsum('abcdbf->acdf', t).reshape(4, 4)
    assert np.allclose(partial_trace(m, dims, [0, 2]).matrix, expected_ac)

    assert partial_trace(m, dims, []).matrix.shape == (1, 1)
    assert partial_trace(m, dims, []).trace() == pytest.approx(1.0)


def test_entropy_values():
    assert von_neumann_entropy(DensityOperator.maximally_mixed(4)) == pytest.approx(2.0)
    assert von_neumann_entropy(DensityOperator.pure([1.0, 1.0j])) == pytest.approx(0.0, abs=1e-12)
    assert trace_norm(np.diag([1.0, -2.0])) == pytest.approx(3.0)


def test_conditional_mutual_information():
    # K、L 经典完全相关，M 平凡
    rho = np.diag([0.5, 0.0, 0.0, 0.5])
    assert conditional_mutual_information(rho, (2, 2, 1)) == pytest.approx(1.0)

    # 乘积态
    product = np.kron(np.diag([0.3, 0.7]), np.diag([0.6, 0.4]))
    assert conditional_mutual_information(product, (2, 2, 1)) == pytest.approx(0.0, abs=1e-12)


def test_log_frechet_finite_difference(rng):
    sigma = random_density(3, None, rng).matrix
    h = random_hermitian(3, rng)
    t = 1e-6
    numeric = (_logm2(sigma + t * h) - _logm2(sigma - t * h)) / (2.0 * t)

    analytic = log_frechet_apply(sigma, h).matrix
    assert np.allclose(analytic, numeric, atol=1e-5 * max(1.0, np.max(np.abs(numeric))))


def test_log_frechet_commuting_direction():
    sigma = np.diag([0.25, 0.75])
    h = np.diag([1.0, -1.0])
    expected = np.diag([1.0 / 0.25, -1.0 / 0.75]) / np.log(2.0)
    assert np.allclose(log_frechet_apply(sigma, h).matrix, expected)


def test_log_frechet_support():
    sigma = np.diag([0.5, 0.5, 0.0])
    inside = np.zeros((3, 3))
    inside[0, 1] = inside[1, 0] = 1.0
    assert np.allclose(log_frechet_apply(sigma, inside).matrix, inside / (0.5 * np.log(2.0)))

    outside = np.zeros((3, 3))
    outside[2, 2] = 1.0
    with pytest.raises(SupportError):
        log_frechet_apply(sigma, outside)

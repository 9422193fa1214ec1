import math

import numpy as np
import pytest
from scipy.linalg import expm as scipy_expm

from conftest import random_model_params
from tfdcx.generators import Mode, evolution_generator
from tfdcx.params import DerivedParams, derive
from tfdcx.propagator import (
    affine_expm,
    circuit_unitary,
    conjugated_covariance,
    reference_covariance,
    target_covariance,
    vacuum_covariance,
    vacuum_covariance_pair,
)

LN4 = math.log(4.0)


def _d(alpha=0.5, lam=1.0, lambda_ref=1.0, d_tilde=0.0):
    return DerivedParams(alpha=alpha, lam=lam, lambda_ref=lambda_ref, d_tilde=d_tilde)


class TestAffineExpm:
    def test_zero_matrix(self):
        assert np.array_equal(affine_expm(np.zeros((3, 3))), np.eye(3))

    def test_minus_flow_at_theta_zero(self):
        # generator block squares to alpha^2, so the exponential is diagonal
        d = _d(alpha=0.8, lam=1.7)
        u = affine_expm(evolution_generator(Mode.MINUS, d, 0.0))
        expected = np.diag([math.exp(-0.8), math.exp(0.8), 1.0])
        assert np.allclose(u, expected, rtol=1e-12, atol=1e-12)

    def test_inverse_identity(self, rng):
        for _ in range(30):
            k = np.vstack([rng.uniform(-3, 3, (2, 3)), np.zeros(3)])
            prod = affine_expm(k) @ affine_expm(-k)
            assert np.allclose(prod, np.eye(3), atol=1e-10)

    def test_against_scipy(self, rng):
        # scipy's Pade route does not keep the affine row exactly zero, so
        # compare with tolerances scaled to the result magnitude
        for scale in (0.1, 1.0, 10.0, 60.0):
            for _ in range(10):
                k = np.vstack([rng.uniform(-scale, scale, (2, 3)), np.zeros(3)])
                mine = affine_expm(k)
                ref = scipy_expm(k)
                assert np.allclose(mine, ref, rtol=1e-11, atol=1e-12 * np.abs(ref).max())

    def test_third_row_exact(self, rng):
        k = np.vstack([rng.uniform(-2, 2, (2, 3)), np.zeros(3)])
        assert np.array_equal(affine_expm(k)[2], [0.0, 0.0, 1.0])


class TestCircuitUnitary:
    def test_identity_at_zero_squeezing(self):
        for mode in Mode:
            u = circuit_unitary(mode, _d(alpha=0.0, lam=0.3, d_tilde=0.7), 1.1)
            assert np.allclose(u, np.eye(3), atol=1e-15)

    def test_minus_diagonal_at_theta_zero(self):
        d = _d(alpha=0.6, lam=2.2)
        u = circuit_unitary(Mode.MINUS, d, 0.0)
        expected = np.diag([math.exp(-0.6), math.exp(0.6), 1.0])
        assert np.allclose(u, expected, rtol=1e-15, atol=1e-15)

    def test_block_determinant_one(self, rng):
        for _ in range(30):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 4 * math.pi)
            for mode in Mode:
                u = circuit_unitary(mode, d, theta)
                det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
                assert det == pytest.approx(1.0, rel=1e-12)

    def test_matches_exponential_oracle(self, rng):
        for _ in range(100):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 4 * math.pi)
            for mode in Mode:
                closed = circuit_unitary(mode, d, theta)
                oracle = affine_expm(evolution_generator(mode, d, theta))
                assert np.allclose(closed, oracle, rtol=1e-10, atol=1e-10)


class TestCovariances:
    def test_vacuum_minus_unit_scale(self):
        g = vacuum_covariance(Mode.MINUS, _d(lam=1.0))
        assert np.array_equal(g, np.diag([1.0, 1.0, 2.0]))

    def test_vacuum_plus_reduces_at_zero_displacement(self):
        d = _d(lam=0.7)
        assert np.array_equal(
            vacuum_covariance(Mode.PLUS, d), vacuum_covariance(Mode.MINUS, d)
        )

    def test_vacuum_plus_determinant(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng))
            g = vacuum_covariance(Mode.PLUS, d)
            assert np.linalg.det(g) == pytest.approx(2.0, rel=1e-12)

    def test_reference_examples(self):
        assert np.array_equal(
            reference_covariance(_d(lambda_ref=1.0)), np.diag([1.0, 1.0, 2.0])
        )
        assert np.array_equal(
            reference_covariance(_d(lambda_ref=4.0)), np.diag([0.25, 4.0, 2.0])
        )

    def test_target_minus_at_theta_zero(self):
        d = _d(alpha=0.5493061443340548, lam=0.25)
        g = target_covariance(Mode.MINUS, d, 0.0)
        expected = np.diag([math.exp(-2 * d.alpha) / 0.25, 0.25 * math.exp(2 * d.alpha), 2.0])
        assert np.allclose(g, expected, rtol=1e-13, atol=1e-14)

    def test_target_equals_vacuum_for_trivial_circuit(self):
        d = _d(alpha=0.0, lam=0.4, d_tilde=0.0)
        for mode in Mode:
            assert np.allclose(
                target_covariance(mode, d, 2.1), vacuum_covariance(mode, d), atol=1e-15
            )

    def test_target_plus_affine_entries_constant_in_theta(self, rng):
        d = derive(random_model_params(rng))
        expected = 2 * math.sqrt(2) * d.d_tilde
        for theta in np.linspace(0, 4 * math.pi, 17):
            g = target_covariance(Mode.PLUS, d, float(theta))
            assert g[0, 2] == pytest.approx(expected, rel=1e-15)
            assert g[2, 0] == pytest.approx(expected, rel=1e-15)
            assert g[2, 2] == 2.0

    def test_conjugation_consistency(self, rng):
        for _ in range(100):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 4 * math.pi)
            for mode in Mode:
                closed = target_covariance(mode, d, theta)
                oracle = conjugated_covariance(mode, d, theta)
                assert np.allclose(closed, oracle, rtol=1e-10, atol=1e-10)

    def test_target_determinant_and_periodicity(self, rng):
        for _ in range(25):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 2 * math.pi)
            for mode in Mode:
                g = target_covariance(mode, d, theta)
                assert np.linalg.det(g) == pytest.approx(2.0, rel=1e-9)
                g_next = target_covariance(mode, d, theta + 2 * math.pi)
                assert np.allclose(g, g_next, rtol=1e-12, atol=1e-12)

    def test_block_positive_definite(self, rng):
        for _ in range(25):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 4 * math.pi)
            for mode in Mode:
                for g in (
                    vacuum_covariance(mode, d),
                    target_covariance(mode, d, theta),
                    reference_covariance(d),
                ):
                    assert g[0, 0] > 0
                    assert g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0] > 0

    def test_pure_state_pair_invariant(self, rng):
        d = derive(random_model_params(rng))
        pair = vacuum_covariance_pair(d)
        for g in pair:
            assert g[2, 2] == 2.0
            assert np.linalg.det(g) == pytest.approx(2.0, rel=1e-9)

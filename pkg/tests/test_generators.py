import math

import numpy as np

from conftest import random_model_params
from tfdcx.generators import Mode, evolution_generator, gate_generator, symplectic_form
from tfdcx.params import DerivedParams, derive


def _d(alpha=1.0, lam=2.0, lambda_ref=1.0, d_tilde=0.0):
    return DerivedParams(alpha=alpha, lam=lam, lambda_ref=lambda_ref, d_tilde=d_tilde)


class TestSymplecticForm:
    def test_square_is_minus_identity_on_block(self):
        omega = symplectic_form()
        sq = omega @ omega
        assert np.array_equal(sq[:2, :2], -np.eye(2))

    def test_antisymmetric_block(self):
        omega = symplectic_form()
        assert np.array_equal(omega[:2, :2].T, -omega[:2, :2])

    def test_affine_row_and_column_zero(self):
        omega = symplectic_form()
        assert not omega[2].any()
        assert not omega[:, 2].any()


class TestGateGenerator:
    def test_zero_squeezing(self):
        k = gate_generator(Mode.MINUS, _d(alpha=0.0), 1.3)
        assert np.array_equal(k, np.zeros((3, 3)))

    def test_plus_is_minus_negated_at_zero_field(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng, with_field=False))
            theta = rng.uniform(0, 2 * math.pi)
            plus = gate_generator(Mode.PLUS, d, theta)
            minus = gate_generator(Mode.MINUS, d, theta)
            assert np.allclose(plus, -minus, atol=1e-15)

    def test_minus_at_theta_zero(self):
        k = gate_generator(Mode.MINUS, _d(alpha=1.0, lam=2.0), 0.0)
        expected = np.array([[0.0, -1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
        assert np.array_equal(k, expected)

    def test_block_symmetry(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng))
            theta = rng.uniform(-10, 10)
            for mode in Mode:
                k = gate_generator(mode, d, theta)
                assert np.array_equal(k, k.T)


class TestEvolutionGenerator:
    def test_defining_identity(self, rng):
        omega = symplectic_form()
        for _ in range(30):
            d = derive(random_model_params(rng))
            theta = rng.uniform(-10, 10)
            for mode in Mode:
                explicit = evolution_generator(mode, d, theta)
                product = omega @ gate_generator(mode, d, theta)
                assert np.allclose(explicit, product, atol=1e-14)

    def test_minus_block_squares_to_alpha_sq(self, rng):
        for _ in range(30):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 2 * math.pi)
            block = evolution_generator(Mode.MINUS, d, theta)[:2, :2]
            assert np.allclose(block @ block, d.alpha**2 * np.eye(2), atol=1e-12)

    def test_plus_block_negates_minus_at_zero_field(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng, with_field=False))
            theta = rng.uniform(0, 2 * math.pi)
            plus = evolution_generator(Mode.PLUS, d, theta)[:2, :2]
            minus = evolution_generator(Mode.MINUS, d, theta)[:2, :2]
            assert np.allclose(plus, -minus, atol=1e-15)

    def test_traceless_and_zero_third_row(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng))
            theta = rng.uniform(-10, 10)
            for mode in Mode:
                k = evolution_generator(mode, d, theta)
                assert abs(k[0, 0] + k[1, 1]) < 1e-12
                assert not k[2].any()

    def test_two_pi_periodicity(self, rng):
        for _ in range(20):
            d = derive(random_model_params(rng))
            theta = rng.uniform(0, 2 * math.pi)
            for mode in Mode:
                a = evolution_generator(mode, d, theta)
                b = evolution_generator(mode, d, theta + 2 * math.pi)
                assert np.allclose(a, b, atol=1e-12)

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfdcx.errors import ClampedSqueezingWarning, NonFiniteParameter
from tfdcx.params import (
    ModelParams,
    PhysicalOscillator,
    derive,
    energy_level,
    from_physical,
    partition_function,
    squeezing_parameter,
)

LN4 = math.log(4.0)


class TestDerive:
    def test_deep_gap_limit(self):
        d = derive(ModelParams(beta_omega=700.0, beta_omega_ref=1.0))
        assert abs(d.alpha) < 1e-12

    def test_ln4_point(self):
        d = derive(ModelParams(beta_omega=LN4, beta_omega_ref=10.0, lambda_ref=1.0))
        # alpha = log(3)/2; cross-checked via tanh(alpha) = 1/2
        assert d.alpha == pytest.approx(0.5493061443340548, rel=1e-14)
        assert math.tanh(d.alpha) == pytest.approx(0.5, abs=1e-15)
        assert d.lam == pytest.approx(0.13862943611198906, rel=1e-14)
        assert d.d_tilde == 0.0

    def test_field_over_lam(self):
        d = derive(ModelParams(beta_omega=1.0, beta_omega_ref=10.0, field_ratio=0.01))
        assert d.lam == pytest.approx(0.1, rel=1e-15)
        assert d.d_tilde == pytest.approx(0.1, rel=1e-12)

    def test_underflow_guard(self):
        with pytest.raises(NonFiniteParameter):
            squeezing_parameter(1e-17)

    def test_clamp_warns(self):
        with pytest.warns(ClampedSqueezingWarning):
            d = derive(ModelParams(beta_omega=701.0, beta_omega_ref=1.0))
        assert d.alpha == 0.0
        assert d.clamped

    @given(st.floats(min_value=1e-3, max_value=30.0))
    def test_cosh_identity(self, beta_omega):
        d = derive(ModelParams(beta_omega=beta_omega, beta_omega_ref=1.0))
        residual = math.cosh(d.alpha) ** 2 * -math.expm1(-beta_omega) - 1.0
        assert abs(residual) < 1e-10

    @given(st.floats(min_value=0.05, max_value=50.0))
    def test_tanh_identity(self, beta_omega):
        d = derive(ModelParams(beta_omega=beta_omega, beta_omega_ref=1.0))
        assert abs(math.tanh(d.alpha) - math.exp(-beta_omega / 2)) < 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            ModelParams(beta_omega=0.0, beta_omega_ref=1.0)
        with pytest.raises(ValueError):
            ModelParams(beta_omega=1.0, beta_omega_ref=1.0, field_ratio=-0.1)
        with pytest.raises(ValueError):
            ModelParams(beta_omega=1.0, beta_omega_ref=1.0, lambda_ref=0.0)
        with pytest.raises(ValueError):
            ModelParams(beta_omega=math.inf, beta_omega_ref=1.0)


class TestFromPhysical:
    def test_zero_field(self):
        osc = PhysicalOscillator(
            mass=1.2, omega=0.7, omega_ref=2.0, charge=1.0, field=0.0, gate_scale=0.9, beta=3.0
        )
        p, d = from_physical(osc)
        assert osc.displacement == 0.0
        assert osc.energy_shift == 0.0
        assert p.field_ratio == 0.0
        assert d.d_tilde == 0.0

    def test_direct_substitution(self):
        osc = PhysicalOscillator(
            mass=1.0, omega=1.0, omega_ref=1.0, charge=1.0, field=2.0, gate_scale=1.0, beta=1.0
        )
        assert osc.displacement == pytest.approx(2.0)
        assert osc.energy_shift == pytest.approx(2.0)

    def test_identity_scales(self):
        osc = PhysicalOscillator(
            mass=1.0, omega=1.0, omega_ref=1.0, charge=0.0, field=0.0, gate_scale=1.0, beta=1.0
        )
        p, d = from_physical(osc)
        assert d.lam == 1.0
        assert d.lambda_ref == 1.0

    def test_shift_displacement_identity(self, rng):
        for _ in range(25):
            osc = PhysicalOscillator(
                mass=rng.uniform(0.2, 5.0),
                omega=rng.uniform(0.2, 5.0),
                omega_ref=rng.uniform(0.2, 5.0),
                charge=rng.uniform(-3.0, 3.0),
                field=rng.uniform(-3.0, 3.0),
                gate_scale=rng.uniform(0.3, 3.0),
                beta=rng.uniform(0.2, 5.0),
            )
            expected = 0.5 * osc.mass * osc.omega**2 * osc.displacement**2
            assert osc.energy_shift == pytest.approx(expected, rel=1e-12)

    def test_round_trip(self, rng):
        for _ in range(25):
            osc = PhysicalOscillator(
                mass=rng.uniform(0.2, 5.0),
                omega=rng.uniform(0.2, 5.0),
                omega_ref=rng.uniform(0.2, 5.0),
                charge=rng.uniform(-2.0, 2.0),
                field=rng.uniform(-2.0, 2.0),
                gate_scale=rng.uniform(0.3, 3.0),
                beta=rng.uniform(0.2, 5.0),
            )
            p, direct = from_physical(osc)
            rederived = derive(p)
            for field in ("alpha", "lam", "lambda_ref", "d_tilde"):
                assert getattr(direct, field) == pytest.approx(
                    getattr(rederived, field), rel=1e-12, abs=1e-12
                )


class TestPartitionFunction:
    def test_ln4(self):
        assert partition_function(LN4, 1.0) == pytest.approx(2.0 / 3.0, rel=1e-14)

    def test_gap_suppression(self):
        assert partition_function(600.0, 1.0) < 1e-120
        assert partition_function(3000.0, 1.0) == 0.0  # underflows, not overflows

    def test_shifted(self):
        # e/(e^{1/2} - e^{-1/2}), evaluated at 40 digits and frozen
        assert partition_function(1.0, 1.0, 1.0) == pytest.approx(
            2.608238646367600, rel=1e-14
        )

    def test_overflow(self):
        with pytest.raises(NonFiniteParameter):
            partition_function(1.0, 1.0, 1e9)

    @given(
        st.floats(min_value=0.2, max_value=4.0),
        st.floats(min_value=0.2, max_value=4.0),
        st.floats(min_value=-2.0, max_value=2.0),
    )
    def test_shift_factorizes(self, beta, omega, shift):
        lhs = partition_function(beta, omega, shift)
        rhs = math.exp(beta * shift) * partition_function(beta, omega)
        assert lhs == pytest.approx(rhs, rel=1e-12)


class TestEnergyLevel:
    @pytest.mark.parametrize(
        "n, omega, shift, expected",
        [(0, 1.0, 0.0, 0.5), (3, 2.0, 0.0, 7.0), (0, 1.0, 2.0, -1.5)],
    )
    def test_examples(self, n, omega, shift, expected):
        assert energy_level(n, omega, shift) == expected

    def test_gap_is_shift_independent(self):
        for shift in (0.0, 1.25, -3.5):
            for n in range(8):
                gap = energy_level(n + 1, 2.0, shift) - energy_level(n, 2.0, shift)
                assert gap == 2.0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            energy_level(-1, 1.0)

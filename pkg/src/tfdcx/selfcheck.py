"""Named invariant suite behind the ``selftest`` command and endpoint.

Each check mirrors one documented module invariant. Checks are deterministic
(fixed-seed RNG) and fast; a failure carries the measured numbers in its
detail string.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import su11
from .complexity import complexity_at
from .generators import Mode, evolution_generator, gate_generator
from .params import (
    DerivedParams,
    ModelParams,
    PhysicalOscillator,
    derive,
    energy_level,
    from_physical,
    partition_function,
)
from .propagator import (
    conjugated_covariance,
    reference_covariance,
    target_covariance,
    vacuum_covariance,
)
from .spectrum import (
    eigen_minus_closed,
    eigen_plus_numeric,
    half_trace_minus,
    relative_covariance,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


_CHECKS: list[tuple[str, Callable[[np.random.Generator], str]]] = []


def _check(name: str):
    def register(fn):
        _CHECKS.append((name, fn))
        return fn

    return register


def _random_params(rng: np.random.Generator) -> ModelParams:
    return ModelParams(
        beta_omega=rng.uniform(0.1, 20.0),
        beta_omega_ref=rng.uniform(0.1, 20.0),
        field_ratio=rng.uniform(0.0, 2.0),
        lambda_ref=rng.uniform(0.1, 10.0),
    )


def _spectra(d: DerivedParams, theta: float):
    return eigen_plus_numeric(d, theta), eigen_minus_closed(d, theta)


@_check("params.squeezing-identity")
def _squeezing_identity(rng):
    worst = 0.0
    for bw in np.concatenate(([0.1, 0.5, 1.0, 2.0, 20.0], rng.uniform(0.1, 30.0, 40))):
        d = derive(ModelParams(beta_omega=float(bw), beta_omega_ref=1.0))
        worst = max(worst, abs(math.cosh(d.alpha) ** 2 * -math.expm1(-bw) - 1.0))
    assert worst < 1e-10, f"identity residual {worst:.3e}"
    return f"worst residual {worst:.3e}"


@_check("params.physical-round-trip")
def _physical_round_trip(rng):
    worst = 0.0
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
            a, b = getattr(direct, field), getattr(rederived, field)
            worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    assert worst < 1e-12, f"round-trip residual {worst:.3e}"
    return f"worst residual {worst:.3e}"


@_check("params.level-spacing")
def _level_spacing(rng):
    # Dyadic values keep the float arithmetic exact, so the gap identity can
    # be asserted with ==; non-dyadic draws are checked to one part in 1e15.
    for omega in (0.5, 1.0, 2.0):
        for shift in (0.0, 1.25):
            for n in range(6):
                gap = energy_level(n + 1, omega, shift) - energy_level(n, omega, shift)
                assert gap == omega, f"gap {gap} != {omega}"
    for _ in range(10):
        omega, shift, n = rng.uniform(0.1, 5.0), rng.uniform(-2.0, 2.0), int(rng.integers(0, 9))
        gap = energy_level(n + 1, omega, shift) - energy_level(n, omega, shift)
        assert abs(gap - omega) < 1e-15 * (1 + n) * omega, f"gap {gap} != {omega}"
    return "gap equals omega, exactly on dyadic inputs"


@_check("params.partition-shift")
def _partition_shift(rng):
    worst = 0.0
    for _ in range(20):
        beta, omega = rng.uniform(0.2, 4.0), rng.uniform(0.2, 4.0)
        shift = rng.uniform(-2.0, 2.0)
        lhs = partition_function(beta, omega, shift)
        rhs = math.exp(beta * shift) * partition_function(beta, omega, 0.0)
        worst = max(worst, abs(lhs - rhs) / rhs)
    assert worst < 1e-12, f"shift residual {worst:.3e}"
    return f"worst relative residual {worst:.3e}"


@_check("generators.gate-block-symmetry")
def _gate_symmetry(rng):
    for _ in range(30):
        d = derive(_random_params(rng))
        theta = rng.uniform(-10, 10)
        for mode in Mode:
            k = gate_generator(mode, d, theta)
            assert k[0, 1] == k[1, 0], "2x2 block not symmetric"
            assert k[0, 2] == k[2, 0] and k[1, 2] == k[2, 1], "affine row/col asymmetric"
    return "gate quadratic forms symmetric"


@_check("generators.flow-trace-free")
def _flow_traceless(rng):
    worst = 0.0
    for _ in range(30):
        d = derive(_random_params(rng))
        for mode in Mode:
            k = evolution_generator(mode, d, rng.uniform(-10, 10))
            worst = max(worst, abs(k[0, 0] + k[1, 1]))
            assert not k[2].any(), "third row not zero"
    assert worst < 1e-12, f"trace {worst:.3e}"
    return f"worst block trace {worst:.3e}"


@_check("generators.phase-periodicity")
def _generator_periodicity(rng):
    worst = 0.0
    for _ in range(20):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 2 * math.pi)
        for mode in Mode:
            for build in (gate_generator, evolution_generator):
                delta = np.abs(build(mode, d, theta) - build(mode, d, theta + 2 * math.pi))
                worst = max(worst, float(delta.max()))
    assert worst < 1e-12, f"periodicity residual {worst:.3e}"
    return f"worst entry change over a period {worst:.3e}"


@_check("propagator.conjugation-consistency")
def _conjugation(rng):
    worst = 0.0
    for _ in range(100):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 4 * math.pi)
        for mode in Mode:
            closed = target_covariance(mode, d, theta)
            oracle = conjugated_covariance(mode, d, theta)
            scale = np.maximum(1.0, np.abs(closed))
            worst = max(worst, float((np.abs(closed - oracle) / scale).max()))
    assert worst < 1e-10, f"conjugation residual {worst:.3e}"
    return f"worst scaled entry deviation {worst:.3e}"


@_check("propagator.determinant-two")
def _det_two(rng):
    worst = 0.0
    for _ in range(40):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 4 * math.pi)
        mats = [reference_covariance(d)]
        for mode in Mode:
            mats += [vacuum_covariance(mode, d), target_covariance(mode, d, theta)]
        for g in mats:
            worst = max(worst, abs(np.linalg.det(g) - 2.0) / 2.0)
    assert worst < 1e-9, f"determinant residual {worst:.3e}"
    return f"worst relative det deviation {worst:.3e}"


@_check("propagator.phase-periodicity")
def _covariance_periodicity(rng):
    worst = 0.0
    for _ in range(20):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 2 * math.pi)
        for mode in Mode:
            a = target_covariance(mode, d, theta)
            b = target_covariance(mode, d, theta + 2 * math.pi)
            worst = max(worst, float((np.abs(a - b) / np.maximum(1.0, np.abs(a))).max()))
    assert worst < 1e-12, f"periodicity residual {worst:.3e}"
    return f"worst scaled entry change over a period {worst:.3e}"


@_check("propagator.positive-definite-block")
def _positive_block(rng):
    for _ in range(40):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 4 * math.pi)
        for mode in Mode:
            for g in (vacuum_covariance(mode, d), target_covariance(mode, d, theta)):
                assert g[0, 0] > 0, "leading minor 1 not positive"
                assert g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0] > 0, "leading minor 2 not positive"
    return "leading minors positive on all sampled covariances"


@_check("spectrum.unit-determinant")
def _unit_determinant(rng):
    worst_det, worst_log = 0.0, 0.0
    for _ in range(50):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 4 * math.pi)
        for mode in Mode:
            worst_det = max(
                worst_det, abs(np.linalg.det(relative_covariance(mode, d, theta)) - 1.0)
            )
        for spec in _spectra(d, theta):
            worst_log = max(worst_log, abs(sum(math.log(v) for v in spec.eigenvalues)))
    assert worst_det < 1e-8, f"det residual {worst_det:.3e}"
    assert worst_log < 1e-8, f"log-sum residual {worst_log:.3e}"
    return f"worst det deviation {worst_det:.3e}, worst log-sum {worst_log:.3e}"


@_check("spectrum.phase-evenness")
def _spectrum_evenness(rng):
    worst = 0.0
    for _ in range(30):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 2 * math.pi)
        for builder in (eigen_plus_numeric, eigen_minus_closed):
            base = np.array(builder(d, theta).eigenvalues)
            for mirrored in (-theta, 2 * math.pi - theta):
                other = np.array(builder(d, mirrored).eigenvalues)
                worst = max(
                    worst, float((np.abs(base - other) / np.maximum(1.0, base)).max())
                )
    assert worst < 1e-9, f"evenness residual {worst:.3e}"
    return f"worst scaled eigenvalue deviation {worst:.3e}"


@_check("spectrum.zero-field-duality")
def _duality(rng):
    worst = 0.0
    for _ in range(50):
        p = _random_params(rng)
        d = derive(ModelParams(p.beta_omega, p.beta_omega_ref, 0.0, p.lambda_ref))
        theta = rng.uniform(0, 4 * math.pi)
        plus = np.array(eigen_plus_numeric(d, theta).eigenvalues)
        mirrored = DerivedParams(
            alpha=-d.alpha, lam=d.lam, lambda_ref=d.lambda_ref, d_tilde=0.0
        )
        minus = np.array(eigen_minus_closed(mirrored, theta).eigenvalues)
        worst = max(worst, float((np.abs(plus - minus) / np.maximum(1.0, plus)).max()))
    assert worst < 1e-9, f"duality residual {worst:.3e}"
    return f"worst scaled eigenvalue deviation {worst:.3e}"


@_check("spectrum.minus-eigensolver-oracle")
def _minus_oracle(rng):
    worst = 0.0
    for _ in range(50):
        d = derive(_random_params(rng))
        theta = rng.uniform(0, 4 * math.pi)
        closed = np.array(eigen_minus_closed(d, theta).eigenvalues)
        generic = np.sort(np.linalg.eigvals(relative_covariance(Mode.MINUS, d, theta)).real)
        worst = max(worst, float((np.abs(closed - generic) / np.maximum(1.0, closed)).max()))
    assert worst < 1e-9, f"oracle residual {worst:.3e}"
    return f"worst scaled deviation from generic eigensolver {worst:.3e}"


@_check("spectrum.simple-limit-convergence")
def _simple_limit_convergence(rng):
    devs = []
    for bwr in (10.0, 20.0, 40.0):
        p = ModelParams(beta_omega=1.0, beta_omega_ref=bwr, field_ratio=0.0, lambda_ref=1.0)
        d = derive(p)
        c2, s2 = math.cosh(2 * d.alpha), math.sinh(2 * d.alpha)
        worst = 0.0
        for theta in np.linspace(0, 2 * math.pi, 201):
            approx = (d.lambda_ref / d.lam) * (c2 - math.cos(theta) * s2)
            h = half_trace_minus(d, theta)
            exact = h + math.sqrt(h * h - 1.0)
            worst = max(worst, abs(approx / exact - 1.0))
        devs.append(worst)
    assert devs[0] > devs[1] > devs[2], f"not monotone: {devs}"
    return "deviation at lam = 0.1 / 0.05 / 0.025: " + ", ".join(f"{v:.3e}" for v in devs)


@_check("complexity.nonnegative-and-identity-zero")
def _nonnegative(rng):
    identical = ModelParams(beta_omega=700.0, beta_omega_ref=700.0, field_ratio=0.0)
    flat = complexity_at(identical, rng.uniform(0, 4 * math.pi))
    assert flat.c_total < 1e-200, f"identical states cost {flat.c_total!r}"
    for _ in range(20):
        s = complexity_at(_random_params(rng), rng.uniform(0, 4 * math.pi))
        assert s.c_total >= 0.0, f"negative cost {s.c_total!r}"
    return "cost nonnegative; zero when reference and target coincide"


@_check("complexity.phase-periodicity")
def _complexity_periodicity(rng):
    worst = 0.0
    for _ in range(15):
        p = _random_params(rng)
        theta = rng.uniform(0, 2 * math.pi)
        a = complexity_at(p, theta).c_total
        b = complexity_at(p, theta + 2 * math.pi).c_total
        worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    assert worst < 1e-9, f"periodicity residual {worst:.3e}"
    return f"worst scaled change over a period {worst:.3e}"


@_check("complexity.phase-evenness")
def _complexity_evenness(rng):
    worst = 0.0
    for _ in range(15):
        p = _random_params(rng)
        theta = rng.uniform(0, 2 * math.pi)
        a = complexity_at(p, theta).c_total
        b = complexity_at(p, 2 * math.pi - theta).c_total
        worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    assert worst < 1e-9, f"evenness residual {worst:.3e}"
    return f"worst scaled asymmetry {worst:.3e}"


@_check("complexity.gate-rescaling")
def _gate_rescaling(rng):
    worst = 0.0
    for bw in (0.5, 1.0, 2.0):
        for theta in np.linspace(0, 2 * math.pi, 9):
            base = ModelParams(beta_omega=bw, beta_omega_ref=10.0, field_ratio=0.0)
            scaled = ModelParams(
                beta_omega=bw, beta_omega_ref=10.0, field_ratio=0.0, lambda_ref=2.0
            )
            a = complexity_at(base, float(theta)).c_total
            b = complexity_at(scaled, float(theta)).c_total
            worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    assert worst < 1e-9, f"zero-drive rescaling residual {worst:.3e}"
    driven = ModelParams(beta_omega=0.5, beta_omega_ref=10.0, field_ratio=1.0)
    driven_scaled = ModelParams(
        beta_omega=0.5, beta_omega_ref=10.0, field_ratio=1.0, lambda_ref=2.0
    )
    gap = abs(
        complexity_at(driven, math.pi).c_total - complexity_at(driven_scaled, math.pi).c_total
    )
    assert gap > 1e-3, f"driven rescaling gap only {gap:.3e}"
    return f"zero-drive invariance {worst:.3e}; driven sensitivity {gap:.3e}"


@_check("complexity.mode-split")
def _mode_split(rng):
    for _ in range(20):
        s = complexity_at(_random_params(rng), rng.uniform(0, 4 * math.pi))
        assert s.c_total == s.c_plus + s.c_minus, "stored total differs from mode sum"
    return "stored totals equal mode sums exactly"


@_check("su11.commutator-table")
def _commutators(rng):
    lower, upper, neutral = su11.LOWERING, su11.RAISING, su11.NEUTRAL
    assert np.array_equal(lower @ upper - upper @ lower, 2 * neutral)
    assert np.array_equal(neutral @ upper - upper @ neutral, upper)
    assert np.array_equal(neutral @ lower - lower @ neutral, -lower)
    return "integer commutator table holds exactly"


@_check("su11.factorization-oracle")
def _factorization_oracle(rng):
    worst = 0.0
    for _ in range(100):
        a = rng.uniform(-3.0, 3.0)
        a0 = rng.uniform(-3.0, 3.0)
        coeffs = su11.decompose(a, -a, a0)
        worst = max(worst, su11.verify_in_fundamental_rep(coeffs, a, -a, a0))
    assert worst < 1e-10, f"factorization residual {worst:.3e}"
    return f"worst 2x2 deviation {worst:.3e}"


@_check("su11.zero-neutral-special-case")
def _zero_neutral(rng):
    for a in (-2.0, -0.7, 0.3, 1.5):
        c = su11.decompose(a, -a, 0.0)
        tol = 4e-16
        assert abs(c.gamma_plus - math.tanh(a)) <= tol * abs(math.tanh(a)), "raising coeff"
        assert abs(c.gamma_minus + math.tanh(a)) <= tol * abs(math.tanh(a)), "lowering coeff"
        assert abs(c.gamma_zero - math.cosh(a) ** -2) <= tol * c.gamma_zero, "neutral coeff"
    return "reduces to (tanh, sech^2, -tanh) at zero neutral exponent"


@_check("su11.width-product")
def _width_product(rng):
    worst = 0.0
    for _ in range(20):
        d = derive(_random_params(rng))
        m_omega = rng.uniform(0.2, 5.0)
        w = su11.tfd_wavefunction(d, m_omega)
        worst = max(worst, abs(w.width_plus * w.width_minus / m_omega**2 - 1.0))
    assert worst < 1e-12, f"width product residual {worst:.3e}"
    return f"worst relative width-product deviation {worst:.3e}"


def run_all(seed: int = 20240817) -> list[CheckResult]:
    """Run every registered check with a deterministic RNG."""
    results = []
    for name, fn in _CHECKS:
        rng = np.random.default_rng(seed)
        try:
            detail = fn(rng)
            results.append(CheckResult(name, True, detail))
        except Exception as exc:  # noqa: BLE001 - report, don't crash the suite
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results

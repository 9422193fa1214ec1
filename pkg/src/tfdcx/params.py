"""Model parameters and the scalar oscillator formulas.

The physics is steered by four dimensionless knobs:

* ``beta_omega``      -- inverse temperature times oscillator frequency,
* ``beta_omega_ref``  -- inverse temperature times reference frequency,
* ``field_ratio``     -- drive strength q*E divided by omega*g_s,
* ``lambda_ref``      -- reference coupling m*omega_ref/g_s**2.

Everything else is derived: the two-mode squeezing parameter
``alpha = atanh(exp(-beta_omega/2))`` (equivalently
``acosh(1/sqrt(1 - exp(-beta_omega)))``, the atanh form keeps full relative
precision when beta_omega is large), the target coupling
``lam = lambda_ref * beta_omega / beta_omega_ref`` and the dimensionless
displacement ``d_tilde = field_ratio / lam``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ClampedSqueezingWarning, NonFiniteParameter

# Above this, exp(-beta_omega) is indistinguishable from 0 in float64 and we
# pin alpha = 0 instead of letting rounding decide.
BETA_OMEGA_CLAMP = 700.0


def _require_finite_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class ModelParams:
    """The four dimensionless knobs selecting a physical configuration.

    ``field_ratio`` is a magnitude: flipping the sign of the electric field
    only flips the sign of the displacement, which enters the spectra through
    its square and through off-diagonal pairs whose products are even in it,
    so the complexity is unchanged.
    """

    beta_omega: float
    beta_omega_ref: float
    field_ratio: float = 0.0
    lambda_ref: float = 1.0

    def __post_init__(self):
        _require_finite_positive("beta_omega", self.beta_omega)
        _require_finite_positive("beta_omega_ref", self.beta_omega_ref)
        _require_finite_positive("lambda_ref", self.lambda_ref)
        if not math.isfinite(self.field_ratio) or self.field_ratio < 0:
            raise ValueError(f"field_ratio must be finite and >= 0, got {self.field_ratio!r}")


@dataclass(frozen=True)
class DerivedParams:
    """Quantities the circuit formulas actually consume.

    ``clamped`` records that beta_omega exceeded BETA_OMEGA_CLAMP and alpha
    was pinned to zero.
    """

    alpha: float
    lam: float
    lambda_ref: float
    d_tilde: float
    clamped: bool = False


@dataclass(frozen=True)
class PhysicalOscillator:
    """Dimensionful description of the driven oscillator (hbar = 1).

    The constant drive shifts the equilibrium by ``displacement`` and lowers
    the spectrum by ``energy_shift``; the two satisfy
    energy_shift = m*omega**2*displacement**2/2 identically.
    """

    mass: float
    omega: float
    omega_ref: float
    charge: float
    field: float
    gate_scale: float
    beta: float

    def __post_init__(self):
        for name in ("mass", "omega", "omega_ref", "gate_scale", "beta"):
            _require_finite_positive(name, getattr(self, name))
        for name in ("charge", "field"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def displacement(self) -> float:
        return self.charge * self.field / (self.mass * self.omega**2)

    @property
    def energy_shift(self) -> float:
        return (self.charge * self.field) ** 2 / (2 * self.mass * self.omega**2)


def squeezing_parameter(beta_omega: float) -> float:
    """Two-mode squeezing angle building the thermal state from the vacua.

    Computed as atanh(exp(-beta_omega/2)); identical to the
    acosh(1/sqrt(1 - exp(-beta_omega))) form but stable for all arguments.

    Raises NonFiniteParameter when beta_omega is so small that the formula
    overflows (exp(-beta_omega/2) rounds to 1 in float64).
    """
    y = math.exp(-beta_omega / 2)
    if y >= 1.0:
        raise NonFiniteParameter(
            f"beta_omega={beta_omega!r} too small: squeezing parameter overflows",
            params={"beta_omega": beta_omega},
        )
    return math.atanh(y)


def derive(p: ModelParams) -> DerivedParams:
    """Resolve the knobs into (alpha, lam, lambda_ref, d_tilde)."""
    clamped = p.beta_omega > BETA_OMEGA_CLAMP
    if clamped:
        warnings.warn(
            f"beta_omega={p.beta_omega:g} beyond {BETA_OMEGA_CLAMP:g}; "
            "squeezing parameter clamped to 0",
            ClampedSqueezingWarning,
            stacklevel=2,
        )
        alpha = 0.0
    else:
        alpha = squeezing_parameter(p.beta_omega)
    lam = p.lambda_ref * p.beta_omega / p.beta_omega_ref
    return DerivedParams(
        alpha=alpha,
        lam=lam,
        lambda_ref=p.lambda_ref,
        d_tilde=p.field_ratio / lam,
        clamped=clamped,
    )


def from_physical(o: PhysicalOscillator) -> tuple[ModelParams, DerivedParams]:
    """Reduce a dimensionful oscillator to knobs plus derived quantities.

    The sign of the drive is dropped (see ModelParams); the returned
    DerivedParams agrees with derive() of the returned ModelParams.
    """
    lam = o.mass * o.omega / o.gate_scale**2
    params = ModelParams(
        beta_omega=o.beta * o.omega,
        beta_omega_ref=o.beta * o.omega_ref,
        field_ratio=abs(o.charge * o.field) / (o.omega * o.gate_scale),
        lambda_ref=o.mass * o.omega_ref / o.gate_scale**2,
    )
    derived = DerivedParams(
        alpha=squeezing_parameter(params.beta_omega),
        lam=lam,
        lambda_ref=params.lambda_ref,
        d_tilde=o.gate_scale * abs(o.displacement),
    )
    return params, derived


def partition_function(beta: float, omega: float, energy_shift: float = 0.0) -> float:
    """Canonical partition function exp(beta*shift)/(2*sinh(beta*omega/2)).

    Evaluated as exp(beta*shift - beta*omega/2)/(1 - exp(-beta*omega)), which
    underflows gracefully to 0 in the deep-gap limit instead of overflowing
    the sinh.
    """
    if beta * omega <= 0:
        raise ValueError("beta*omega must be > 0")
    try:
        z = math.exp(beta * energy_shift - beta * omega / 2) / -math.expm1(-beta * omega)
    except OverflowError:
        z = math.inf
    if not math.isfinite(z):
        raise NonFiniteParameter(
            "partition function overflowed",
            params={"beta": beta, "omega": omega, "energy_shift": energy_shift},
        )
    return z


def energy_level(n: int, omega: float, energy_shift: float = 0.0) -> float:
    """n-th oscillator level omega*(n + 1/2) minus the drive-induced shift."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return omega * (n + 0.5) - energy_shift

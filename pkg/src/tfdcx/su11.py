"""Normal-ordering factorization of su(1,1) exponentials and the pair wavefunction.

exp(a_plus*K_plus + a_minus*K_minus + a_zero*K_zero) is rewritten as
exp(g_plus*K_plus) exp(log(g_zero)*K_zero) exp(g_minus*K_minus). The
coefficients depend on the exponents only through
t2 = a_zero**2/4 - a_plus*a_minus, and the formulas are analytic in t2, so
the t2 < 0 branch is evaluated through the even functions cosh/cos and
sinh/sin without ever forming an imaginary number.

The factorization is checked in the 2x2 defining representation, where the
three generators are integer matrices and the exponentials can be taken by a
general-purpose routine (scipy) independent of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import SingularDecomposition
from .params import DerivedParams

# Defining 2x2 representation: [lower, raise] = 2*neutral, [neutral, raise] = raise.
RAISING = np.array([[0.0, 1.0], [0.0, 0.0]])
LOWERING = np.array([[0.0, 0.0], [-1.0, 0.0]])
NEUTRAL = np.array([[0.5, 0.0], [0.0, -0.5]])


@dataclass(frozen=True)
class SU11Coefficients:
    """Normal-ordered factor coefficients.

    ``theta_sq`` stores the squared factorization angle; a negative value
    tags the trigonometric (imaginary-angle) branch.
    """

    gamma_plus: float
    gamma_zero: float
    gamma_minus: float
    theta_sq: float


@dataclass(frozen=True)
class GaussianWavefunction:
    """Quadratic-form data of the two-mode thermal wavefunction.

    In decoupled coordinates: exp(-(width_plus*x_plus**2 + width_minus*x_minus**2)/2).
    In site coordinates: exp(-c_diag*((x_l-center)**2 + (x_r-center)**2)/2
    - c_cross*(x_l-center)*(x_r-center)).
    """

    width_plus: float
    width_minus: float
    c_diag: float
    c_cross: float
    center: float


def _even_cosh_and_sinc(t2: float) -> tuple[float, float]:
    """(cosh t, sinh(t)/t) as functions of t**2, valid for either sign."""
    if t2 > 0.0:
        t = math.sqrt(t2)
        return math.cosh(t), math.sinh(t) / t
    if t2 < 0.0:
        w = math.sqrt(-t2)
        return math.cos(w), math.sin(w) / w
    return 1.0, 1.0


def decompose(alpha_plus: float, alpha_minus: float, alpha_zero: float) -> SU11Coefficients:
    """Factor exp(a+*K+ + a-*K- + a0*K0) into normal-ordered exponentials."""
    t2 = alpha_zero**2 / 4.0 - alpha_plus * alpha_minus
    ch, snc = _even_cosh_and_sinc(t2)
    den = 2.0 * ch - alpha_zero * snc
    if abs(den) < 1e-12:
        raise SingularDecomposition(
            "normal-ordering denominator vanished",
            params={
                "alpha_plus": alpha_plus,
                "alpha_minus": alpha_minus,
                "alpha_zero": alpha_zero,
            },
        )
    return SU11Coefficients(
        gamma_plus=2.0 * alpha_plus * snc / den,
        gamma_zero=(ch - alpha_zero * snc / 2.0) ** -2,
        gamma_minus=2.0 * alpha_minus * snc / den,
        theta_sq=t2,
    )


def verify_in_fundamental_rep(
    c: SU11Coefficients, alpha_plus: float, alpha_minus: float, alpha_zero: float
) -> float:
    """Max entry deviation of the factorization in the 2x2 representation.

    Both sides are evaluated with scipy's general matrix exponential, so the
    check is independent of the closed-form coefficients being verified.
    """
    lhs = expm(alpha_plus * RAISING + alpha_minus * LOWERING + alpha_zero * NEUTRAL)
    rhs = (
        expm(c.gamma_plus * RAISING)
        @ expm(math.log(c.gamma_zero) * NEUTRAL)
        @ expm(c.gamma_minus * LOWERING)
    )
    return float(np.abs(lhs - rhs).max())


def tfd_wavefunction(d: DerivedParams, m_omega: float) -> GaussianWavefunction:
    """Wavefunction data of the two-mode thermal state at phase zero.

    The gate scale implied by the dimensionless coupling converts the stored
    displacement back to length units for the center.
    """
    if m_omega <= 0:
        raise ValueError("m_omega must be > 0")
    a = d.alpha
    gate_scale = math.sqrt(m_omega / d.lam)
    return GaussianWavefunction(
        width_plus=m_omega * math.exp(-2 * a),
        width_minus=m_omega * math.exp(2 * a),
        c_diag=m_omega * math.cosh(2 * a),
        c_cross=-m_omega * math.sinh(2 * a),
        center=d.d_tilde / gate_scale,
    )

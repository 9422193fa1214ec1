"""Circuit unitaries and covariance matrices of reference and target states.

``circuit_unitary`` is the closed form; ``affine_expm`` is the independent
numerical route (scaling-and-squaring on the generator). The two are kept
separate on purpose: tests conjugate one against the other.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .generators import Mode, evolution_generator
from .params import DerivedParams

_SQRT2 = math.sqrt(2.0)

# Series term cutoff for the exponential oracle; 3x3 matrices make the
# full-precision Taylor tail essentially free.
_EXPM_TOL = 1e-18


def affine_expm(K: np.ndarray) -> np.ndarray:
    """Matrix exponential of an affine generator (zero third row).

    Scaling-and-squaring: scale by 2**s so the scaled norm is <= 0.5, run the
    Taylor series until the term norm drops below _EXPM_TOL, square s times.
    The zero third row guarantees the result has third row (0, 0, 1) exactly.
    """
    K = np.asarray(K, dtype=float)
    norm = np.abs(K).sum(axis=1).max()  # infinity norm
    s = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0 else 0
    A = K / 2.0**s
    result = np.eye(3)
    term = np.eye(3)
    k = 1
    while np.abs(term).max() > _EXPM_TOL:
        term = term @ A / k
        result = result + term
        k += 1
    for _ in range(s):
        result = result @ result
    return result


def circuit_unitary(mode: Mode, d: DerivedParams, theta: float) -> np.ndarray:
    """Closed-form exp of the evolution generator at circuit parameter 1.

    The generator's 2x2 block squares to alpha**2 * I, so the exponential
    collapses to cosh/sinh combinations; the affine column of the displaced
    mode follows from the same identity.
    """
    a, lam, dt = d.alpha, d.lam, d.d_tilde
    ct, st = math.cos(theta), math.sin(theta)
    ch, sh = math.cosh(a), math.sinh(a)
    if mode is Mode.MINUS:
        return np.array(
            [
                [ch - ct * sh, st * sh / lam, 0.0],
                [lam * st * sh, ch + ct * sh, 0.0],
                [0.0, 0.0, 1.0],
            ]
        )
    return np.array(
        [
            [ch + ct * sh, -st * sh / lam, _SQRT2 * dt * (1.0 - ch - ct * sh)],
            [-lam * st * sh, ch - ct * sh, _SQRT2 * dt * lam * st * sh],
            [0.0, 0.0, 1.0],
        ]
    )


def vacuum_covariance(mode: Mode, d: DerivedParams) -> np.ndarray:
    """Two-point function of the decoupled-mode ground state.

    The displaced mode carries a first moment sqrt(2)*d_tilde in its affine
    entries and the matching shift in the position variance.
    """
    lam, dt = d.lam, d.d_tilde
    if mode is Mode.MINUS:
        return np.diag([1.0 / lam, lam, 2.0])
    return np.array(
        [
            [4.0 * dt**2 + 1.0 / lam, 0.0, 2.0 * _SQRT2 * dt],
            [0.0, lam, 0.0],
            [2.0 * _SQRT2 * dt, 0.0, 2.0],
        ]
    )


def reference_covariance(d: DerivedParams) -> np.ndarray:
    """Covariance of the unentangled reference state; identical for both modes."""
    return np.diag([1.0 / d.lambda_ref, d.lambda_ref, 2.0])


def target_covariance(mode: Mode, d: DerivedParams, theta: float) -> np.ndarray:
    """Closed-form covariance of the evolved two-mode squeezed state.

    Equals U G0 U^T with U = circuit_unitary(...); the conjugation route is
    exercised against this form in tests.
    """
    a, lam, dt = d.alpha, d.lam, d.d_tilde
    ct, st = math.cos(theta), math.sin(theta)
    c2, s2 = math.cosh(2 * a), math.sinh(2 * a)
    g12 = st * s2
    if mode is Mode.MINUS:
        g11 = (c2 - ct * s2) / lam
        g22 = lam * (c2 + ct * s2)
        return np.array([[g11, g12, 0.0], [g12, g22, 0.0], [0.0, 0.0, 2.0]])
    g11 = (4.0 * dt**2 * lam + c2 + ct * s2) / lam
    g22 = lam * (c2 - ct * s2)
    return np.array(
        [
            [g11, -g12, 2.0 * _SQRT2 * dt],
            [-g12, g22, 0.0],
            [2.0 * _SQRT2 * dt, 0.0, 2.0],
        ]
    )


class CovariancePair(NamedTuple):
    """Covariances of both decoupled modes at a common phase."""

    plus: np.ndarray
    minus: np.ndarray


def vacuum_covariance_pair(d: DerivedParams) -> CovariancePair:
    return CovariancePair(vacuum_covariance(Mode.PLUS, d), vacuum_covariance(Mode.MINUS, d))


def target_covariance_pair(d: DerivedParams, theta: float) -> CovariancePair:
    return CovariancePair(
        target_covariance(Mode.PLUS, d, theta), target_covariance(Mode.MINUS, d, theta)
    )


def conjugated_covariance(mode: Mode, d: DerivedParams, theta: float) -> np.ndarray:
    """Target covariance via the exponential oracle: expm(K) G0 expm(K)^T."""
    u = affine_expm(evolution_generator(mode, d, theta))
    g0 = vacuum_covariance(mode, d)
    return u @ g0 @ u.T

"""Gate and evolution generators on the affine phase-space basis (x, p, 1).

All matrices are plain 3x3 float numpy arrays acting on the dimensionless
coordinates (x*g_s, p/g_s, 1); the third slot carries displacements so that
shifts become ordinary matrix algebra. Time enters only through the phase
theta = omega*t.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .params import DerivedParams

_SQRT2 = math.sqrt(2.0)


class Mode(enum.Enum):
    """Which of the two decoupled oscillator combinations is addressed."""

    PLUS = "plus"
    MINUS = "minus"


def symplectic_form() -> np.ndarray:
    """Poisson-bracket matrix of (x, p), zero-padded on the affine slot."""
    return np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def gate_generator(mode: Mode, d: DerivedParams, theta: float) -> np.ndarray:
    """Quadratic-form coefficients k of the squeezing circuit at phase theta.

    The upper 2x2 block is symmetric; the affine row/column is populated only
    for the displaced (PLUS) mode.
    """
    a, lam, dt = d.alpha, d.lam, d.d_tilde
    ct, st = math.cos(theta), math.sin(theta)
    if mode is Mode.MINUS:
        return -a * np.array(
            [
                [lam * st, ct, 0.0],
                [ct, -st / lam, 0.0],
                [0.0, 0.0, 0.0],
            ]
        )
    return -a * np.array(
        [
            [-lam * st, -ct, _SQRT2 * dt * lam * st],
            [-ct, st / lam, _SQRT2 * dt * ct],
            [_SQRT2 * dt * lam * st, _SQRT2 * dt * ct, -2.0 * dt**2 * lam * st],
        ]
    )


def evolution_generator(mode: Mode, d: DerivedParams, theta: float) -> np.ndarray:
    """Phase-space flow K = symplectic_form() @ gate_generator(...).

    Written out explicitly; the identity with the product form is covered by
    tests. The third row vanishes, so exp(K) is affine.
    """
    a, lam, dt = d.alpha, d.lam, d.d_tilde
    ct, st = math.cos(theta), math.sin(theta)
    if mode is Mode.MINUS:
        return -a * np.array(
            [
                [ct, -st / lam, 0.0],
                [-lam * st, -ct, 0.0],
                [0.0, 0.0, 0.0],
            ]
        )
    return -a * np.array(
        [
            [-ct, st / lam, _SQRT2 * dt * ct],
            [lam * st, ct, -_SQRT2 * dt * lam * st],
            [0.0, 0.0, 0.0],
        ]
    )

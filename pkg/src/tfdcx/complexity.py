"""Quadratic eigenvalue cost, complexity curves over a phase grid, sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidKnob, NonPositiveEigenvalue
from .generators import Mode
from .params import DerivedParams, ModelParams, derive
from .spectrum import (
    SIMPLE_LIMIT_MAX_D_TILDE,
    SIMPLE_LIMIT_MAX_LAM,
    RelativeSpectrum,
    SpectrumMethod,
    eigen_minus_closed,
    eigen_plus_numeric,
    eigen_plus_perturbative,
    eigen_simple_limit,
    eigen_simple_limit_zero_field_plus,
)

SWEEP_KNOBS = ("beta_omega", "beta_omega_ref", "field_ratio", "lambda_ref")

# Default grid: two full periods, dense enough for the oscillatory regimes.
DEFAULT_THETA_MAX = 4 * math.pi
DEFAULT_SAMPLES = 401


@dataclass(frozen=True)
class ComplexitySample:
    """One point of a complexity curve; delta_c is relative to theta = 0."""

    theta: float
    c_plus: float
    c_minus: float
    c_total: float
    delta_c: float


@dataclass(frozen=True)
class ComplexityCurve:
    params: ModelParams
    method: SpectrumMethod
    samples: tuple[ComplexitySample, ...]
    c_at_zero: float
    strict_paper_spectrum: bool = False


def cost_from_spectrum(s: RelativeSpectrum) -> float:
    """Quadratic log cost: one quarter of the sum of squared eigenvalue logs."""
    total = 0.0
    for value in s.eigenvalues:
        if value <= 0.0:
            raise NonPositiveEigenvalue(
                f"eigenvalue {value!r} is not positive",
                params={"eigenvalues": s.eigenvalues, "mode": s.mode.value},
            )
        total += math.log(value) ** 2
    return 0.25 * total


def mode_spectrum(
    mode: Mode,
    d: DerivedParams,
    theta: float,
    method: SpectrumMethod,
    strict_paper: bool = False,
) -> RelativeSpectrum:
    """Dispatch a mode/method pair to the matching eigenvalue routine.

    CLOSED_FORM and NUMERIC coincide: the undisplaced mode always uses its
    exact pair formula and the displaced mode its analytic cubic (the only
    closed route that exists for it).
    """
    if method in (SpectrumMethod.NUMERIC, SpectrumMethod.CLOSED_FORM):
        if mode is Mode.MINUS:
            return eigen_minus_closed(d, theta)
        return eigen_plus_numeric(d, theta)
    if method is SpectrumMethod.PERTURBATIVE:
        if mode is Mode.MINUS:
            return eigen_minus_closed(d, theta)
        return eigen_plus_perturbative(d, theta)
    if method is SpectrumMethod.SIMPLE_LIMIT:
        if mode is Mode.PLUS and d.d_tilde == 0.0:
            return eigen_simple_limit_zero_field_plus(d, theta, strict_paper)
        return eigen_simple_limit(mode, d, theta, strict_paper)
    raise ValueError(f"unknown spectrum method {method!r}")


def resolve_auto_method(d: DerivedParams) -> SpectrumMethod:
    """Pick the simple limit inside its validity window, the cubic otherwise."""
    if d.lam <= SIMPLE_LIMIT_MAX_LAM and d.d_tilde <= SIMPLE_LIMIT_MAX_D_TILDE:
        return SpectrumMethod.SIMPLE_LIMIT
    return SpectrumMethod.NUMERIC


def _costs_at(
    d: DerivedParams, theta: float, method: SpectrumMethod, strict_paper: bool
) -> tuple[float, float]:
    c_plus = cost_from_spectrum(mode_spectrum(Mode.PLUS, d, theta, method, strict_paper))
    c_minus = cost_from_spectrum(mode_spectrum(Mode.MINUS, d, theta, method, strict_paper))
    return c_plus, c_minus


def complexity_at(
    p: ModelParams,
    theta: float,
    method: SpectrumMethod = SpectrumMethod.NUMERIC,
    strict_paper: bool = False,
) -> ComplexitySample:
    """Both mode costs at one phase, with delta_c against theta = 0.

    The theta = 0 baseline uses the same method; mixing methods would leak
    approximation error into delta_c.
    """
    d = derive(p)
    c_plus, c_minus = _costs_at(d, theta, method, strict_paper)
    zero_plus, zero_minus = _costs_at(d, 0.0, method, strict_paper)
    return ComplexitySample(
        theta=theta,
        c_plus=c_plus,
        c_minus=c_minus,
        c_total=c_plus + c_minus,
        delta_c=(c_plus + c_minus) - (zero_plus + zero_minus),
    )


def curve(
    p: ModelParams,
    theta_grid: Sequence[float],
    method: SpectrumMethod = SpectrumMethod.NUMERIC,
    strict_paper: bool = False,
) -> ComplexityCurve:
    """One sample per grid point; theta = 0 is prepended when missing."""
    grid = [float(t) for t in theta_grid]
    if not grid:
        raise ValueError("theta grid must be nonempty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("theta grid must be strictly ascending")
    if grid[0] != 0.0:
        if grid[0] < 0.0:
            raise ValueError("theta grid must start at or above 0")
        grid.insert(0, 0.0)
    d = derive(p)
    zero_plus, zero_minus = _costs_at(d, 0.0, method, strict_paper)
    c_at_zero = zero_plus + zero_minus
    samples = []
    for theta in grid:
        if theta == 0.0:
            c_plus, c_minus = zero_plus, zero_minus
        else:
            c_plus, c_minus = _costs_at(d, theta, method, strict_paper)
        total = c_plus + c_minus
        samples.append(
            ComplexitySample(
                theta=theta,
                c_plus=c_plus,
                c_minus=c_minus,
                c_total=total,
                delta_c=total - c_at_zero,
            )
        )
    return ComplexityCurve(
        params=p,
        method=method,
        samples=tuple(samples),
        c_at_zero=c_at_zero,
        strict_paper_spectrum=strict_paper,
    )


def sweep(
    base: ModelParams,
    vary: Sequence[tuple[str, Iterable[float]]],
    theta_grid: Sequence[float],
    method: SpectrumMethod = SpectrumMethod.NUMERIC,
    strict_paper: bool = False,
) -> list[ComplexityCurve]:
    """Cartesian product of knob grids, outer-to-inner in the listed order.

    Curves are evaluated concurrently but returned in deterministic order.
    """
    names = [name for name, _ in vary]
    for name in names:
        if name not in SWEEP_KNOBS:
            raise InvalidKnob(f"unknown sweep knob {name!r}", params={"knob": name})
    grids = [list(values) for _, values in vary]
    combos = list(product(*grids)) if grids else [()]
    param_sets = [
        replace(base, **dict(zip(names, combo))) for combo in combos
    ]
    if len(param_sets) == 1:
        return [curve(param_sets[0], theta_grid, method, strict_paper)]
    with ThreadPoolExecutor(max_workers=min(8, len(param_sets))) as pool:
        return list(
            pool.map(lambda q: curve(q, theta_grid, method, strict_paper), param_sets)
        )

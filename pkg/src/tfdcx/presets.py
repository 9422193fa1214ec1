"""Built-in parameter families behind the ``figure N`` command."""

from __future__ import annotations

from dataclasses import dataclass

from .params import ModelParams
from .spectrum import SpectrumMethod


@dataclass(frozen=True)
class FigurePreset:
    """One figure family: a base knob set, the varied knobs, and a method.

    ``method=None`` means auto-resolve per curve. ``note`` flags grid values
    that are our documented defaults rather than published ones.
    """

    figure_id: int
    base: ModelParams
    vary: tuple[tuple[str, tuple[float, ...]], ...]
    method: SpectrumMethod | None
    note: str


FIGURE_PRESETS: dict[int, FigurePreset] = {
    1: FigurePreset(
        figure_id=1,
        base=ModelParams(beta_omega=0.5, beta_omega_ref=10.0, field_ratio=0.0, lambda_ref=1.0),
        vary=(("beta_omega", (0.5, 1.0, 2.0)),),
        method=SpectrumMethod.SIMPLE_LIMIT,
        note="zero drive, small-coupling regime",
    ),
    2: FigurePreset(
        figure_id=2,
        base=ModelParams(beta_omega=0.5, beta_omega_ref=10.0, field_ratio=0.01, lambda_ref=1.0),
        vary=(("field_ratio", (0.01, 0.1, 1.0)), ("beta_omega", (0.5, 1.0, 2.0))),
        method=None,
        note="drive grid {0.01, 0.1, 1} is a documented default, not paper-specified",
    ),
    3: FigurePreset(
        figure_id=3,
        base=ModelParams(beta_omega=12.0, beta_omega_ref=10.0, field_ratio=0.0, lambda_ref=1.0),
        vary=(("beta_omega", (12.0, 14.0, 16.0)),),
        method=SpectrumMethod.NUMERIC,
        note="zero drive, generic-coupling regime",
    ),
    4: FigurePreset(
        figure_id=4,
        base=ModelParams(beta_omega=12.0, beta_omega_ref=10.0, field_ratio=0.1, lambda_ref=1.0),
        vary=(("beta_omega_ref", (10.0, 20.0)), ("beta_omega", (12.0, 14.0, 16.0))),
        method=SpectrumMethod.NUMERIC,
        note=(
            "reference grid {10, 20} and fixed drive 0.1 are documented defaults, "
            "not paper-specified"
        ),
    ),
}

# Pretty symbols for legend labels, keyed by knob name.
KNOB_SYMBOLS = {
    "beta_omega": "βω",
    "beta_omega_ref": "βω_R",
    "field_ratio": "qE/Ω",
    "lambda_ref": "λ_R",
}


def curve_label(varied: dict[str, float]) -> str:
    """Legend text from the varied-knob assignment, using the print symbols."""
    return ", ".join(f"{KNOB_SYMBOLS[k]}={v:g}" for k, v in varied.items())

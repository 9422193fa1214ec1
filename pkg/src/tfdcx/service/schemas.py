"""Request/response models of the compute service."""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..complexity import ComplexityCurve, ComplexitySample
from ..params import BETA_OMEGA_CLAMP, ModelParams, derive
from ..spectrum import SpectrumMethod

MethodName = Literal["auto", "closed-form", "numeric", "perturbative", "simple-limit"]
KnobName = Literal["beta_omega", "beta_omega_ref", "field_ratio", "lambda_ref"]


class Knobs(BaseModel):
    """The four dimensionless model knobs."""

    beta_omega: float = Field(gt=0, le=BETA_OMEGA_CLAMP)
    beta_omega_ref: float = Field(gt=0, le=BETA_OMEGA_CLAMP)
    field_ratio: float = Field(default=0.0, ge=0)
    lambda_ref: float = Field(default=1.0, gt=0)

    def to_params(self) -> ModelParams:
        return ModelParams(
            beta_omega=self.beta_omega,
            beta_omega_ref=self.beta_omega_ref,
            field_ratio=self.field_ratio,
            lambda_ref=self.lambda_ref,
        )

    @classmethod
    def from_params(cls, p: ModelParams) -> "Knobs":
        return cls(
            beta_omega=p.beta_omega,
            beta_omega_ref=p.beta_omega_ref,
            field_ratio=p.field_ratio,
            lambda_ref=p.lambda_ref,
        )


class Derived(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    alpha: float
    lam: float = Field(alias="lambda")
    lambda_ref: float
    d_tilde: float
    clamped: bool = False


class GridSpec(BaseModel):
    """Uniform phase grid [0, theta_max] with the given sample count."""

    theta_max: float = Field(default=4 * math.pi, gt=0)
    samples: int = Field(default=401, ge=2)


class CurveRequest(GridSpec):
    knobs: Knobs
    method: MethodName = "auto"
    strict_paper_spectrum: bool = False


class CurvePoint(BaseModel):
    theta: float
    c_plus: float
    c_minus: float
    c_total: float
    delta_c: float


class CurveResponse(BaseModel):
    knobs: Knobs
    derived: Derived
    method: MethodName
    strict_paper_spectrum: bool
    c_at_zero: float
    points: list[CurvePoint]

    @classmethod
    def from_curve(cls, curve: ComplexityCurve) -> "CurveResponse":
        d = derive(curve.params)
        return cls(
            knobs=Knobs.from_params(curve.params),
            derived=Derived(
                alpha=d.alpha,
                lam=d.lam,
                lambda_ref=d.lambda_ref,
                d_tilde=d.d_tilde,
                clamped=d.clamped,
            ),
            method=curve.method.value,
            strict_paper_spectrum=curve.strict_paper_spectrum,
            c_at_zero=curve.c_at_zero,
            points=[
                CurvePoint(
                    theta=s.theta,
                    c_plus=s.c_plus,
                    c_minus=s.c_minus,
                    c_total=s.c_total,
                    delta_c=s.delta_c,
                )
                for s in curve.samples
            ],
        )

    def to_curve(self) -> ComplexityCurve:
        """Rebuild the core curve object, e.g. for CSV/SVG emission."""
        return ComplexityCurve(
            params=self.knobs.to_params(),
            method=SpectrumMethod(self.method),
            samples=tuple(
                ComplexitySample(p.theta, p.c_plus, p.c_minus, p.c_total, p.delta_c)
                for p in self.points
            ),
            c_at_zero=self.c_at_zero,
            strict_paper_spectrum=self.strict_paper_spectrum,
        )


class VarySpec(BaseModel):
    name: KnobName
    values: list[float] = Field(min_length=1)


class SweepRequest(GridSpec):
    base: Knobs
    vary: list[VarySpec] = Field(default_factory=list)
    method: MethodName = "auto"
    strict_paper_spectrum: bool = False


class SweepCurve(BaseModel):
    label: str
    varied: dict[str, float]
    curve: CurveResponse


class SweepResponse(BaseModel):
    curves: list[SweepCurve]


class FigureRequest(GridSpec):
    figure_id: int = Field(ge=1, le=4)
    strict_paper_spectrum: bool = False


class FigureResponse(BaseModel):
    figure_id: int
    note: str
    curves: list[SweepCurve]


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class SelfTestResponse(BaseModel):
    passed: bool
    checks: list[CheckOutcome]


class ErrorPayload(BaseModel):
    error: str
    detail: str
    params: dict | None = None

"""FastAPI compute service wrapping the core package.

All endpoints are pure request -> response; numeric failures surface as 422
with a typed payload naming the error class and the offending parameters.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from itertools import product

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, complexity, selfcheck
from ..errors import TfdcxError
from ..params import ModelParams, derive
from ..presets import FIGURE_PRESETS, curve_label
from ..spectrum import SpectrumMethod
from . import schemas


def _resolve_method(name: str, p: ModelParams) -> SpectrumMethod:
    if name == "auto":
        return complexity.resolve_auto_method(derive(p))
    return SpectrumMethod(name)


def _grid(theta_max: float, samples: int) -> list[float]:
    return [float(t) for t in np.linspace(0.0, theta_max, samples)]


def _sweep_curves(
    base: ModelParams,
    vary: list[tuple[str, tuple[float, ...]]],
    grid: list[float],
    method_name: str,
    strict: bool,
    fixed_method: SpectrumMethod | None = None,
) -> list[schemas.SweepCurve]:
    names = [name for name, _ in vary]
    combos = list(product(*(values for _, values in vary))) if vary else [()]

    def build(combo) -> schemas.SweepCurve:
        assignment = dict(zip(names, combo))
        params = replace(base, **assignment)
        method = fixed_method or _resolve_method(method_name, params)
        curve = complexity.curve(params, grid, method, strict)
        return schemas.SweepCurve(
            label=curve_label(assignment) if assignment else "curve",
            varied=assignment,
            curve=schemas.CurveResponse.from_curve(curve),
        )

    if len(combos) == 1:
        return [build(combos[0])]
    # fan out per curve; map() keeps the listed outer-to-inner order
    with ThreadPoolExecutor(max_workers=min(8, len(combos))) as pool:
        return list(pool.map(build, combos))


def create_app() -> FastAPI:
    app = FastAPI(
        title="driven-oscillator pair-state complexity service",
        version=__version__,
    )

    @app.exception_handler(TfdcxError)
    async def _numeric_error(request: Request, exc: TfdcxError) -> JSONResponse:
        payload = schemas.ErrorPayload(
            error=type(exc).__name__, detail=str(exc), params=exc.params or None
        )
        return JSONResponse(status_code=422, content=payload.model_dump())

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/curve", response_model=schemas.CurveResponse)
    def curve(req: schemas.CurveRequest) -> schemas.CurveResponse:
        params = req.knobs.to_params()
        method = _resolve_method(req.method, params)
        result = complexity.curve(
            params, _grid(req.theta_max, req.samples), method, req.strict_paper_spectrum
        )
        return schemas.CurveResponse.from_curve(result)

    @app.post("/sweep", response_model=schemas.SweepResponse)
    def sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
        curves = _sweep_curves(
            req.base.to_params(),
            [(v.name, tuple(v.values)) for v in req.vary],
            _grid(req.theta_max, req.samples),
            req.method,
            req.strict_paper_spectrum,
        )
        return schemas.SweepResponse(curves=curves)

    @app.post("/figure", response_model=schemas.FigureResponse)
    def figure(req: schemas.FigureRequest) -> schemas.FigureResponse:
        preset = FIGURE_PRESETS[req.figure_id]
        curves = _sweep_curves(
            preset.base,
            list(preset.vary),
            _grid(req.theta_max, req.samples),
            "auto",
            req.strict_paper_spectrum,
            fixed_method=preset.method,
        )
        return schemas.FigureResponse(
            figure_id=preset.figure_id, note=preset.note, curves=curves
        )

    @app.post("/selftest", response_model=schemas.SelfTestResponse)
    def selftest() -> schemas.SelfTestResponse:
        checks = [
            schemas.CheckOutcome(name=c.name, passed=c.passed, detail=c.detail)
            for c in selfcheck.run_all()
        ]
        return schemas.SelfTestResponse(
            passed=all(c.passed for c in checks), checks=checks
        )

    return app


app = create_app()

"""Curve serialization: the CSV schema is the package's file interface.

Header is exactly ``theta,c_plus,c_minus,c_total,delta_c``; a ``#`` comment
block above it records the knobs, the resolved derived parameters and the
method, so a file is self-describing. Floats carry 15 significant digits.
No timestamps anywhere: identical inputs give byte-identical files.
"""

from __future__ import annotations

import io
from pathlib import Path

from .complexity import ComplexityCurve, ComplexitySample
from .params import ModelParams, derive

CSV_HEADER = "theta,c_plus,c_minus,c_total,delta_c"


def format_float(x: float) -> str:
    return f"{x:.15g}"


def render_csv(curve: ComplexityCurve, time_unit: str = "phase") -> str:
    """Render a curve to CSV text; time_unit='beta' divides theta by beta*omega."""
    if not curve.samples:
        raise ValueError("cannot render an empty curve")
    if time_unit not in ("phase", "beta"):
        raise ValueError(f"unknown time unit {time_unit!r}")
    d = derive(curve.params)
    out = io.StringIO()
    p = curve.params
    out.write("# complexity curve of the driven-oscillator thermal pair state\n")
    out.write(f"# beta_omega = {format_float(p.beta_omega)}\n")
    out.write(f"# beta_omega_ref = {format_float(p.beta_omega_ref)}\n")
    out.write(f"# field_ratio = {format_float(p.field_ratio)}\n")
    out.write(f"# lambda_ref = {format_float(p.lambda_ref)}\n")
    out.write(f"# method = {curve.method.value}\n")
    out.write(f"# strict_paper_spectrum = {str(curve.strict_paper_spectrum).lower()}\n")
    out.write(f"# time_unit = {time_unit}\n")
    out.write(f"# alpha = {format_float(d.alpha)}\n")
    out.write(f"# lambda = {format_float(d.lam)}\n")
    out.write(f"# d_tilde = {format_float(d.d_tilde)}\n")
    out.write(f"# c_at_zero = {format_float(curve.c_at_zero)}\n")
    out.write(CSV_HEADER + "\n")
    scale = 1.0 / p.beta_omega if time_unit == "beta" else 1.0
    for s in curve.samples:
        row = (s.theta * scale, s.c_plus, s.c_minus, s.c_total, s.delta_c)
        out.write(",".join(format_float(v) for v in row) + "\n")
    return out.getvalue()


def emit_csv(curve: ComplexityCurve, path: str | Path, time_unit: str = "phase") -> None:
    Path(path).write_text(render_csv(curve, time_unit), encoding="utf-8")


def read_curve_csv(path: str | Path) -> tuple[dict[str, str], list[ComplexitySample]]:
    """Parse an emitted file back into its comment metadata and samples."""
    meta: dict[str, str] = {}
    samples: list[ComplexitySample] = []
    header_seen = False
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            if "=" in line:
                key, _, value = line[1:].partition("=")
                meta[key.strip()] = value.strip()
            continue
        if not header_seen:
            if line != CSV_HEADER:
                raise ValueError(f"unexpected header {line!r}")
            header_seen = True
            continue
        theta, c_plus, c_minus, c_total, delta_c = (float(v) for v in line.split(","))
        samples.append(ComplexitySample(theta, c_plus, c_minus, c_total, delta_c))
    if not header_seen:
        raise ValueError("no CSV header found")
    return meta, samples


def params_from_meta(meta: dict[str, str]) -> ModelParams:
    return ModelParams(
        beta_omega=float(meta["beta_omega"]),
        beta_omega_ref=float(meta["beta_omega_ref"]),
        field_ratio=float(meta["field_ratio"]),
        lambda_ref=float(meta["lambda_ref"]),
    )

"""Minimal self-contained SVG line plots of (theta, delta_c) curves.

No external assets, no randomness: the output is a deterministic function of
the curves, so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from pathlib import Path

from .complexity import ComplexityCurve

_WIDTH, _HEIGHT = 720, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 20, 20, 50
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf", "#bcbd22")


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / (count - 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = min(s for s in (mag, 2 * mag, 2.5 * mag, 5 * mag, 10 * mag) if s >= raw)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def render_svg(
    curves: list[ComplexityCurve],
    labels: list[str] | None = None,
    x_label: str = "θ = ωt",
    y_label: str = "ΔC",
) -> str:
    if not curves:
        raise ValueError("need at least one curve")
    if labels is None:
        labels = [f"curve {i + 1}" for i in range(len(curves))]
    if len(labels) != len(curves):
        raise ValueError("one label per curve required")

    xs = [s.theta for c in curves for s in c.samples]
    ys = [s.delta_c for c in curves for s in c.samples]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(x: float) -> float:
        return _MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return _MARGIN_T + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        parts.append(
            f'<line x1="{x:.2f}" y1="{_MARGIN_T + plot_h}" x2="{x:.2f}" '
            f'y2="{_MARGIN_T + plot_h + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{_MARGIN_T + plot_h + 20}" font-size="12" '
            f'text-anchor="middle">{t:g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        parts.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{y:.2f}" x2="{_MARGIN_L}" y2="{y:.2f}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 8}" y="{y + 4:.2f}" font-size="12" '
            f'text-anchor="end">{t:g}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.2f}" y="{_HEIGHT - 10}" font-size="14" '
        f'text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{_MARGIN_T + plot_h / 2:.2f}" font-size="14" '
        f'text-anchor="middle" transform="rotate(-90 18 {_MARGIN_T + plot_h / 2:.2f})">'
        f"{y_label}</text>"
    )
    for i, (c, label) in enumerate(zip(curves, labels)):
        color = _COLORS[i % len(_COLORS)]
        points = " ".join(f"{px(s.theta):.2f},{py(s.delta_c):.2f}" for s in c.samples)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
        ly = _MARGIN_T + 16 + 18 * i
        parts.append(
            f'<line x1="{_MARGIN_L + plot_w - 150}" y1="{ly - 4}" '
            f'x2="{_MARGIN_L + plot_w - 120}" y2="{ly - 4}" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L + plot_w - 114}" y="{ly}" font-size="12">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(
    curves: list[ComplexityCurve],
    path: str | Path,
    labels: list[str] | None = None,
    x_label: str = "θ = ωt",
) -> None:
    Path(path).write_text(render_svg(curves, labels, x_label=x_label), encoding="utf-8")

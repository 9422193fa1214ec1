"""Command-line front end.

The CLI is a thin client of the compute service: by default it mounts the
service in-process (no sockets), with ``--server URL`` switching to a remote
instance started via ``tfdcx serve``. Exit codes: 0 success, 2 invalid flags
or parameter range, 3 I/O failure, 4 numeric failure.

Any flag may also come from a ``key=value`` config file (``--config``);
command-line flags win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace
from pathlib import Path

from .client import ServiceClient, ServiceError
from .csvio import emit_csv, format_float
from .params import BETA_OMEGA_CLAMP
from .presets import FIGURE_PRESETS
from .service import schemas
from .svg import emit_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

_METHODS = ("auto", "closed-form", "numeric", "perturbative", "simple-limit")
_KNOBS = ("beta_omega", "beta_omega_ref", "field_ratio", "lambda_ref")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tfdcx",
        description="complexity curves of the driven-oscillator thermal pair state",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_knobs: bool = True) -> None:
        if with_knobs:
            p.add_argument("--beta-omega", type=float, default=None)
            p.add_argument("--beta-omega-r", type=float, default=None)
            p.add_argument("--field-ratio", type=float, default=None)
            p.add_argument("--lambda-r", type=float, default=None)
            p.add_argument("--method", choices=_METHODS, default=None)
            p.add_argument(
                "--strict-paper-spectrum",
                action="store_const",
                const=True,
                default=None,
                help="drop the reciprocal partner eigenvalue in the simple limit",
            )
        p.add_argument("--theta-max", type=float, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--time-unit", choices=("phase", "beta"), default=None)
        p.add_argument("--out", default=None, help="output CSV file (or directory)")
        p.add_argument("--svg", default=None, help="optional SVG plot path")
        p.add_argument("--config", default=None, help="key=value config file")
        p.add_argument("--server", default=None, help="remote service URL")

    add_common(sub.add_parser("curve", help="single complexity curve"))
    sweep_p = sub.add_parser("sweep", help="Cartesian sweep over knob grids")
    add_common(sweep_p)
    sweep_p.add_argument(
        "--vary",
        action="append",
        default=None,
        metavar="KNOB=V1,V2,...",
        help="repeatable; outer-to-inner in the order given",
    )
    figure_p = sub.add_parser("figure", help="built-in figure preset sweep")
    figure_p.add_argument("figure_id", type=int, choices=sorted(FIGURE_PRESETS))
    add_common(figure_p, with_knobs=False)
    figure_p.add_argument(
        "--strict-paper-spectrum", action="store_const", const=True, default=None
    )
    selftest_p = sub.add_parser("selftest", help="run the named invariant suite")
    selftest_p.add_argument("--server", default=None)
    serve_p = sub.add_parser("serve", help="run the compute service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8337)
    return parser


def _read_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    config: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        config[key.strip().replace("_", "-")] = value.strip()
    return config


def _resolve(args, config: dict[str, str], key: str, cast, default):
    cli_value = getattr(args, key.replace("-", "_"), None)
    if cli_value is not None:
        return cli_value
    if key in config:
        try:
            return cast(config[key])
        except ValueError as exc:
            raise UsageError(f"config value for {key!r}: {exc}") from exc
    return default


def _to_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _knobs(args, config) -> schemas.Knobs:
    beta_omega = _resolve(args, config, "beta-omega", float, 1.0)
    beta_omega_ref = _resolve(args, config, "beta-omega-r", float, 10.0)
    field_ratio = _resolve(args, config, "field-ratio", float, 0.0)
    lambda_ref = _resolve(args, config, "lambda-r", float, 1.0)
    for name, value in (("beta-omega", beta_omega), ("beta-omega-r", beta_omega_ref)):
        if not (0.0 < value <= BETA_OMEGA_CLAMP):
            raise UsageError(
                f"--{name} must be in (0, {BETA_OMEGA_CLAMP:g}], got {value:g}"
            )
    if field_ratio < 0:
        raise UsageError(f"--field-ratio must be >= 0, got {field_ratio:g}")
    if lambda_ref <= 0:
        raise UsageError(f"--lambda-r must be > 0, got {lambda_ref:g}")
    return schemas.Knobs(
        beta_omega=beta_omega,
        beta_omega_ref=beta_omega_ref,
        field_ratio=field_ratio,
        lambda_ref=lambda_ref,
    )


def _grid_options(args, config) -> tuple[float, int, str]:
    theta_max = _resolve(args, config, "theta-max", float, 4 * math.pi)
    samples = _resolve(args, config, "samples", int, 401)
    time_unit = _resolve(args, config, "time-unit", str, "phase")
    if theta_max <= 0:
        raise UsageError(f"--theta-max must be > 0, got {theta_max:g}")
    if samples < 2:
        raise UsageError(f"--samples must be >= 2, got {samples}")
    if time_unit not in ("phase", "beta"):
        raise UsageError(f"--time-unit must be phase or beta, got {time_unit!r}")
    return theta_max, samples, time_unit


def _parse_vary(specs: list[str]) -> list[schemas.VarySpec]:
    parsed = []
    for spec in specs:
        name, eq, values = spec.partition("=")
        name = name.strip().replace("-", "_")
        if not eq or name not in _KNOBS:
            raise UsageError(
                f"--vary expects KNOB=V1,V2 with KNOB in {', '.join(_KNOBS)}; got {spec!r}"
            )
        try:
            grid = [float(v) for v in values.split(",") if v.strip()]
        except ValueError as exc:
            raise UsageError(f"--vary {spec!r}: {exc}") from exc
        if not grid:
            raise UsageError(f"--vary {spec!r}: empty value grid")
        parsed.append(schemas.VarySpec(name=name, values=grid))
    return parsed


def _x_label(time_unit: str) -> str:
    return "t/β" if time_unit == "beta" else "θ = ωt"


def _plot_curves(curves, time_unit: str):
    """Rescale sample phases to t/beta when that is the plotted unit."""
    if time_unit != "beta":
        return curves
    rescaled = []
    for c in curves:
        scale = 1.0 / c.params.beta_omega
        samples = tuple(replace(s, theta=s.theta * scale) for s in c.samples)
        rescaled.append(replace(c, samples=samples))
    return rescaled


def _write_curve_files(
    labeled_curves,
    out_dir: Path,
    prefix: str,
    time_unit: str,
    svg_path: str | None,
    manifest_extra: dict,
) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    curves, labels = [], []
    for i, item in enumerate(labeled_curves):
        curve = item.curve.to_curve()
        suffix = "".join(
            f"__{name}_{value:g}" for name, value in item.varied.items()
        )
        filename = f"{prefix}_{i:02d}{suffix}.csv"
        emit_csv(curve, out_dir / filename, time_unit)
        entries.append(
            {
                "file": filename,
                "label": item.label,
                "varied": item.varied,
                "method": item.curve.method,
                "c_at_zero": item.curve.c_at_zero,
                "knobs": item.curve.knobs.model_dump(),
                "derived": item.curve.derived.model_dump(by_alias=True),
            }
        )
        curves.append(curve)
        labels.append(item.label)
    manifest = dict(manifest_extra)
    manifest["time_unit"] = time_unit
    manifest["files"] = entries
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    if svg_path:
        emit_svg(_plot_curves(curves, time_unit), svg_path, labels, x_label=_x_label(time_unit))
    for entry in entries:
        print(out_dir / entry["file"])
    print(out_dir / "manifest.json")


def _cmd_curve(args) -> int:
    config = _read_config(args.config) if args.config else {}
    knobs = _knobs(args, config)
    theta_max, samples, time_unit = _grid_options(args, config)
    method = _resolve(args, config, "method", str, "auto")
    if method not in _METHODS:
        raise UsageError(f"--method must be one of {', '.join(_METHODS)}")
    strict = _resolve(args, config, "strict-paper-spectrum", _to_bool, False)
    out = _resolve(args, config, "out", str, None)
    svg = _resolve(args, config, "svg", str, None)
    if out is None:
        raise UsageError("--out is required for curve")
    request = schemas.CurveRequest(
        knobs=knobs,
        method=method,
        theta_max=theta_max,
        samples=samples,
        strict_paper_spectrum=strict,
    )
    with ServiceClient(args.server) as client:
        response = client.curve(request)
    curve = response.to_curve()
    emit_csv(curve, out, time_unit)
    print(out)
    if svg:
        emit_svg(
            _plot_curves([curve], time_unit), svg, ["ΔC"], x_label=_x_label(time_unit)
        )
        print(svg)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    config = _read_config(args.config) if args.config else {}
    knobs = _knobs(args, config)
    theta_max, samples, time_unit = _grid_options(args, config)
    method = _resolve(args, config, "method", str, "auto")
    if method not in _METHODS:
        raise UsageError(f"--method must be one of {', '.join(_METHODS)}")
    strict = _resolve(args, config, "strict-paper-spectrum", _to_bool, False)
    out = _resolve(args, config, "out", str, None)
    svg = _resolve(args, config, "svg", str, None)
    if out is None:
        raise UsageError("--out is required for sweep (a directory)")
    vary_specs = args.vary
    if vary_specs is None and "vary" in config:
        vary_specs = [part.strip() for part in config["vary"].split(";") if part.strip()]
    vary = _parse_vary(vary_specs or [])
    request = schemas.SweepRequest(
        base=knobs,
        vary=vary,
        method=method,
        theta_max=theta_max,
        samples=samples,
        strict_paper_spectrum=strict,
    )
    with ServiceClient(args.server) as client:
        response = client.sweep(request)
    _write_curve_files(
        response.curves,
        Path(out),
        "curve",
        time_unit,
        svg,
        {"command": "sweep", "method": method, "theta_max": theta_max, "samples": samples},
    )
    return EXIT_OK


def _cmd_figure(args) -> int:
    config = _read_config(args.config) if args.config else {}
    theta_max, samples, time_unit = _grid_options(args, config)
    strict = _resolve(args, config, "strict-paper-spectrum", _to_bool, False)
    out = _resolve(args, config, "out", str, None)
    svg = _resolve(args, config, "svg", str, None)
    if out is None:
        raise UsageError("--out is required for figure (a directory)")
    request = schemas.FigureRequest(
        figure_id=args.figure_id,
        theta_max=theta_max,
        samples=samples,
        strict_paper_spectrum=strict,
    )
    with ServiceClient(args.server) as client:
        response = client.figure(request)
    _write_curve_files(
        response.curves,
        Path(out),
        f"fig{response.figure_id}",
        time_unit,
        svg,
        {
            "command": "figure",
            "figure_id": response.figure_id,
            "note": response.note,
            "theta_max": theta_max,
            "samples": samples,
        },
    )
    return EXIT_OK


def _cmd_selftest(args) -> int:
    with ServiceClient(args.server) as client:
        report = client.selftest()
    width = max(len(c.name) for c in report.checks)
    for check in report.checks:
        tag = "ok" if check.passed else "FAIL"
        print(f"[{tag:>4}] {check.name:<{width}}  {check.detail}")
    print(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks passed")
    return EXIT_OK if report.passed else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "curve": _cmd_curve,
        "sweep": _cmd_sweep,
        "figure": _cmd_figure,
        "selftest": _cmd_selftest,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ServiceError as exc:
        if exc.kind == "RequestValidation":
            print(f"error: invalid request: {exc.detail}", file=sys.stderr)
            return EXIT_USAGE
        print(f"numeric failure: {exc.kind}: {exc.detail}", file=sys.stderr)
        if exc.params:
            rendered = ", ".join(
                f"{k}={format_float(v) if isinstance(v, float) else v}"
                for k, v in exc.params.items()
            )
            print(f"offending parameters: {rendered}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

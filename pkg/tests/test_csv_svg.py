import math

import numpy as np
import pytest

from tfdcx.complexity import curve
from tfdcx.csvio import CSV_HEADER, emit_csv, read_curve_csv, render_csv, params_from_meta
from tfdcx.params import ModelParams
from tfdcx.spectrum import SpectrumMethod
from tfdcx.svg import emit_svg, render_svg


@pytest.fixture
def sample_curve():
    p = ModelParams(beta_omega=1.0, beta_omega_ref=10.0, field_ratio=0.01)
    return curve(p, list(np.linspace(0, 4 * math.pi, 25)), SpectrumMethod.SIMPLE_LIMIT)


class TestCsv:
    def test_header_exact(self, sample_curve, tmp_path):
        path = tmp_path / "c.csv"
        emit_csv(sample_curve, path)
        lines = path.read_text().splitlines()
        data_header = [ln for ln in lines if not ln.startswith("#")][0]
        assert data_header == "theta,c_plus,c_minus,c_total,delta_c"

    def test_comment_block_records_run(self, sample_curve, tmp_path):
        path = tmp_path / "c.csv"
        emit_csv(sample_curve, path)
        meta, _ = read_curve_csv(path)
        assert meta["method"] == "simple-limit"
        assert float(meta["alpha"]) == pytest.approx(0.7034145568736476, rel=1e-14)
        assert float(meta["lambda"]) == pytest.approx(0.1)
        assert float(meta["d_tilde"]) == pytest.approx(0.1)
        assert params_from_meta(meta) == sample_curve.params

    def test_round_trip_full_precision(self, sample_curve, tmp_path):
        path = tmp_path / "c.csv"
        emit_csv(sample_curve, path)
        _, samples = read_curve_csv(path)
        assert len(samples) == len(sample_curve.samples)
        for parsed, original in zip(samples, sample_curve.samples):
            for field in ("theta", "c_plus", "c_minus", "c_total", "delta_c"):
                assert getattr(parsed, field) == pytest.approx(
                    getattr(original, field), rel=1e-14, abs=1e-300
                )

    def test_single_sample_file(self, tmp_path):
        p = ModelParams(beta_omega=1.0, beta_omega_ref=10.0)
        c = curve(p, [0.0])
        path = tmp_path / "single.csv"
        emit_csv(c, path)
        rows = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]
        assert len(rows) == 2  # header plus one row
        assert rows[1].endswith(",0")  # delta_c column

    def test_deterministic_bytes(self, sample_curve, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_csv(sample_curve, a)
        emit_csv(sample_curve, b)
        assert a.read_bytes() == b.read_bytes()

    def test_beta_time_unit_scales_first_column(self, sample_curve, tmp_path):
        path = tmp_path / "beta.csv"
        emit_csv(sample_curve, path, time_unit="beta")
        meta, samples = read_curve_csv(path)
        assert meta["time_unit"] == "beta"
        bw = sample_curve.params.beta_omega
        for parsed, original in zip(samples, sample_curve.samples):
            assert parsed.theta == pytest.approx(original.theta / bw, rel=1e-14)

    def test_unknown_time_unit(self, sample_curve):
        with pytest.raises(ValueError):
            render_csv(sample_curve, time_unit="seconds")

    def test_reader_rejects_wrong_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(ValueError):
            read_curve_csv(path)

    def test_header_constant(self):
        assert CSV_HEADER == "theta,c_plus,c_minus,c_total,delta_c"


class TestSvg:
    def test_flat_curve_polyline_on_axis(self, tmp_path):
        p = ModelParams(beta_omega=700.0, beta_omega_ref=700.0)
        flat = curve(p, list(np.linspace(0, 2 * math.pi, 9)))
        text = render_svg([flat], ["flat"])
        polylines = [ln for ln in text.splitlines() if "polyline" in ln]
        assert len(polylines) == 1
        ys = {pt.split(",")[1] for pt in polylines[0].split('points="')[1].split('"')[0].split()}
        assert len(ys) == 1  # constant height: delta_c identically zero

    def test_three_curves_three_polylines_with_legend(self, tmp_path):
        curves, labels = [], []
        for bw in (0.5, 1.0, 2.0):
            p = ModelParams(beta_omega=bw, beta_omega_ref=10.0)
            curves.append(curve(p, list(np.linspace(0, 2 * math.pi, 9))))
            labels.append(f"βω={bw:g}")
        path = tmp_path / "plot.svg"
        emit_svg(curves, path, labels)
        text = path.read_text()
        assert text.count("<polyline") == 3
        for label in labels:
            assert label in text

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            render_svg([])

    def test_deterministic(self, tmp_path):
        p = ModelParams(beta_omega=1.0, beta_omega_ref=10.0)
        c = curve(p, list(np.linspace(0, 2 * math.pi, 9)))
        assert render_svg([c], ["x"]) == render_svg([c], ["x"])

    def test_label_count_mismatch(self):
        p = ModelParams(beta_omega=1.0, beta_omega_ref=10.0)
        c = curve(p, [0.0, 1.0])
        with pytest.raises(ValueError):
            render_svg([c], ["a", "b"])

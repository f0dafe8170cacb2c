import pytest

from barynet.persistence import lower_star_barcode
from barynet.plotting import barcode_svg, cloud_svg, emit_plot, trace_grid_svg, trace_svg
from barynet.training import TrainConfig, TrainTrace, init_base_points, train


def _two_point_trace():
    recs = [
        {"epoch": e, "loss": 1.0 - e / 2, "mse": 2.0 - e, "rmse": 1.4 - e / 2, "mae": 1.2 - e / 2, "logcosh": 0.7 - e / 4}
        for e in (0, 1)
    ]
    return TrainTrace(recs)


def test_trace_has_one_polyline_per_metric():
    svg = trace_svg(_two_point_trace())
    assert svg.count("<polyline") == 4
    for m in ("mse", "rmse", "mae", "logcosh"):
        assert svg.count(f'<polyline class="{m}"') == 1
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_barcode_has_one_glyph_per_bar():
    svg = barcode_svg(lower_star_barcode([0, 2, 1, 3]))
    assert svg.count('class="bar"') == 2


def test_grid_has_one_panel_per_run():
    tr = _two_point_trace()
    svg = trace_grid_svg({"a": tr, "b": tr, "c": tr})
    assert svg.count("<polyline") == 3


def test_cloud_marks_base_points(sine_cloud):
    cfg = init_base_points(sine_cloud, TrainConfig())
    assert cloud_svg(sine_cloud, base=cfg).count('class="base"') == 8


def test_emit_plot_is_byte_deterministic(tmp_path, sine_cloud):
    _, trace = train(sine_cloud, TrainConfig(epochs=3))
    bc = lower_star_barcode(sine_cloud)
    for i, obj in enumerate((trace, sine_cloud, bc)):
        a = emit_plot(obj, tmp_path / f"{i}a.svg")
        b = emit_plot(obj, tmp_path / f"{i}b.svg")
        assert a.read_bytes() == b.read_bytes()


def test_emit_plot_rejects_unknown_and_empty(tmp_path):
    with pytest.raises(TypeError):
        emit_plot([1, 2], tmp_path / "x.svg")
    with pytest.raises(ValueError):
        trace_svg(TrainTrace())

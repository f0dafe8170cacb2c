"""Minimal deterministic SVG output: line charts, chart grids and barcode strips."""
from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .persistence import Barcode, PointCloudFunction
from .training import TrainTrace

METRICS = ("mse", "rmse", "mae", "logcosh")
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")


def _num(v: float) -> str:
    return f"{v:.2f}"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _panel(series: Mapping[str, tuple[Sequence[float], Sequence[float]]], x0, y0, w, h, title, markers=None) -> list[str]:
    pad = 30.0
    allx = np.concatenate([np.asarray(s[0], float) for s in series.values()])
    ally = np.concatenate([np.asarray(s[1], float) for s in series.values()])
    if markers is not None:
        allx = np.concatenate([allx, markers[0]])
        ally = np.concatenate([ally, markers[1]])
    xmin, xmax = float(allx.min()), float(allx.max())
    ymin, ymax = float(ally.min()), float(ally.max())
    if xmax == xmin:
        xmax = xmin + 1.0
    if ymax == ymin:
        ymax = ymin + 1.0

    def sx(v):
        return x0 + pad + (np.asarray(v, float) - xmin) / (xmax - xmin) * (w - 2 * pad)

    def sy(v):
        return y0 + h - pad - (np.asarray(v, float) - ymin) / (ymax - ymin) * (h - 2 * pad)

    out = [
        f'<rect x="{_num(x0)}" y="{_num(y0)}" width="{_num(w)}" height="{_num(h)}" fill="white" stroke="#999"/>',
        f'<text x="{_num(x0 + w / 2)}" y="{_num(y0 + 18)}" text-anchor="middle" font-size="13">{_escape(title)}</text>',
        f'<text x="{_num(x0 + 4)}" y="{_num(y0 + pad)}" font-size="10">{ymax:.4g}</text>',
        f'<text x="{_num(x0 + 4)}" y="{_num(y0 + h - pad)}" font-size="10">{ymin:.4g}</text>',
    ]
    for i, (name, (xs, ys)) in enumerate(series.items()):
        pts = " ".join(f"{_num(a)},{_num(b)}" for a, b in zip(sx(xs), sy(ys)))
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<polyline class="{_escape(name)}" fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        out.append(
            f'<text x="{_num(x0 + w - pad)}" y="{_num(y0 + 32 + 12 * i)}" text-anchor="end" font-size="10" fill="{color}">{_escape(name)}</text>'
        )
    if markers is not None:
        for a, b in zip(sx(markers[0]), sy(markers[1])):
            out.append(f'<circle class="base" cx="{_num(a)}" cy="{_num(b)}" r="3" fill="black"/>')
    return out


def _document(body: list[str], width: float, height: float) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def trace_svg(trace: TrainTrace, title: str = "learning curve") -> str:
    if not len(trace):
        raise ValueError("empty trace")
    epochs = trace.column("epoch")
    series = {m: (epochs, trace.column(m)) for m in METRICS}
    return _document(_panel(series, 0, 0, 480, 320, title), 480, 320)


def trace_grid_svg(traces: Mapping[str, TrainTrace], metric: str = "mse", columns: int = 2) -> str:
    """One panel per run, each showing ``metric`` against epoch."""
    if not traces:
        raise ValueError("no traces")
    w, h = 360.0, 240.0
    body = []
    for i, (name, tr) in enumerate(traces.items()):
        r, c = divmod(i, columns)
        body += _panel({metric: (tr.column("epoch"), tr.column(metric))}, c * w, r * h, w, h, f"{name}: {metric}")
    rows = (len(traces) + columns - 1) // columns
    return _document(body, columns * w, rows * h)


def cloud_svg(cloud: PointCloudFunction, fit: PointCloudFunction | None = None, base=None, title: str = "point cloud") -> str:
    series = {"reference": (cloud.x, cloud.y)}
    if fit is not None:
        series["prediction"] = (fit.x, fit.y)
    markers = None if base is None else (np.asarray(base.xs), np.asarray(base.ys))
    return _document(_panel(series, 0, 0, 480, 320, title, markers), 480, 320)


def barcode_svg(bc: Barcode, title: str = "barcode") -> str:
    if not len(bc):
        raise ValueError("empty barcode")
    w, pad, row = 480.0, 30.0, 14.0
    h = 2 * pad + row * len(bc)
    lo = min(b.birth for b in bc)
    hi = max(b.death for b in bc)
    span = hi - lo if hi > lo else 1.0
    bars = sorted(bc.bars, key=lambda b: (-b.length, b.birth_index))
    body = [
        f'<rect x="0" y="0" width="{_num(w)}" height="{_num(h)}" fill="white" stroke="#999"/>',
        f'<text x="{_num(w / 2)}" y="18" text-anchor="middle" font-size="13">{_escape(title)}</text>',
    ]
    for i, b in enumerate(bars):
        x1 = pad + (b.birth - lo) / span * (w - 2 * pad)
        x2 = pad + (b.death - lo) / span * (w - 2 * pad)
        y = pad + row * i + row / 2
        color = "#d62728" if b.essential else "#1f77b4"
        body.append(
            f'<line class="bar" x1="{_num(x1)}" y1="{_num(y)}" x2="{_num(x2)}" y2="{_num(y)}" stroke="{color}" stroke-width="6"/>'
        )
    return _document(body, w, h)


def emit_plot(obj, path, **kwargs) -> Path:
    """Render a trace, cloud or barcode to an SVG file at ``path``."""
    if isinstance(obj, TrainTrace):
        text = trace_svg(obj, **kwargs)
    elif isinstance(obj, PointCloudFunction):
        text = cloud_svg(obj, **kwargs)
    elif isinstance(obj, Barcode):
        text = barcode_svg(obj, **kwargs)
    else:
        raise TypeError(f"cannot plot {type(obj).__name__}")
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path

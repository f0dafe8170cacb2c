"""Point-cloud sources: CSV files, seeded sine generators and the bundled series."""
from __future__ import annotations

import csv
import math
from importlib import resources
from pathlib import Path

import numpy as np

from .persistence import FunctionConsistencyViolation, PointCloudFunction


class ParseError(ValueError):
    pass


def load_csv(path, x_column: str, y_column: str) -> PointCloudFunction:
    """Read two numeric columns from a headed, comma-separated UTF-8 file.

    Repeated rows collapse to a single sample; a repeated abscissa with a
    different ordinate raises :class:`FunctionConsistencyViolation`.
    """
    xs, ys = [], []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ParseError(f"{path}: missing header row")
        for col in (x_column, y_column):
            if col not in reader.fieldnames:
                raise ParseError(f"{path}: no column {col!r} (have {', '.join(reader.fieldnames)})")
        seen: dict[float, tuple[float, int]] = {}
        for row_no, row in enumerate(reader, start=2):
            try:
                x = float(row[x_column])
                y = float(row[y_column])
            except (TypeError, ValueError):
                raise ParseError(
                    f"{path}: row {row_no}: non-numeric value in {x_column!r}/{y_column!r}"
                ) from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError(f"{path}: row {row_no}: non-finite value")
            if x in seen and seen[x][0] != y:
                raise FunctionConsistencyViolation(
                    f"{path}: row {row_no}: x={x!r} has y={y!r}, row {seen[x][1]} has y={seen[x][0]!r}"
                )
            seen.setdefault(x, (y, row_no))
            xs.append(x)
            ys.append(y)
    if not xs:
        raise ParseError(f"{path}: no data rows")
    return PointCloudFunction(xs, ys)


def gen_sine(n_points: int = 250, a: float = -10.0, b: float = 10.0, noise_sigma: float = 0.0, seed: int = 0) -> PointCloudFunction:
    """``sin(x)`` on ``n_points`` equispaced abscissas, plus optional Gaussian noise."""
    if n_points < 2:
        raise ValueError("need at least 2 points")
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    x = np.linspace(a, b, n_points)
    y = np.sin(x)
    if noise_sigma > 0:
        y = y + np.random.default_rng(seed).normal(0.0, noise_sigma, size=n_points)
    return PointCloudFunction(x, y)


def bundled_series_path() -> Path:
    """Synthetic 365-day gold-ETF-like price series shipped with the package."""
    return Path(str(resources.files("barynet") / "data" / "gold_like_2023.csv"))


def bundled_series() -> PointCloudFunction:
    return load_csv(bundled_series_path(), "day", "close")

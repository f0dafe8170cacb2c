"""Projected full-batch gradient descent over the base points."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .bnn import BaseConfiguration
from .losses import LossKind, all_metrics, descriptor, loss_gradient
from .persistence import PointCloudFunction

TRACE_COLUMNS = ("epoch", "loss", "mse", "rmse", "mae", "logcosh")


@dataclass(frozen=True)
class TrainConfig:
    n_base_points: int = 8
    epochs: int = 50
    learning_rate: float = 0.1
    seed: int = 0
    loss: LossKind = LossKind.LWPE_LOSS
    train_x: bool = True
    train_y: bool = True
    min_gap: float | None = None  # None: 1e-3 of the domain width

    def __post_init__(self):
        object.__setattr__(self, "loss", LossKind.parse(self.loss))
        if self.n_base_points < 2:
            raise ValueError("need at least 2 base points")
        if self.epochs < 0:
            raise ValueError("epochs must be nonnegative")
        if not self.learning_rate > 0:
            raise ValueError("learning rate must be positive")
        if self.seed < 0:
            raise ValueError("seed must be unsigned")
        if not (self.train_x or self.train_y):
            raise ValueError("at least one of train_x / train_y must be set")
        if self.min_gap is not None and not self.min_gap > 0:
            raise ValueError("min_gap must be positive")

    def gap(self, a: float, b: float) -> float:
        gap = 1e-3 * (b - a) if self.min_gap is None else self.min_gap
        if not gap * (self.n_base_points - 1) < b - a:
            raise ValueError(
                f"min_gap {gap} is infeasible for {self.n_base_points} points on [{a}, {b}]"
            )
        return gap


@dataclass
class TrainTrace:
    records: list[dict] = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def column(self, name: str) -> np.ndarray:
        return np.array([r[name] for r in self.records], dtype=float)

    def epochs_to_fraction(self, metric: str = "mse", fraction: float = 0.5) -> int | None:
        """First epoch at which ``metric`` drops to ``fraction`` of its initial value."""
        series = self.column(metric)
        hits = np.flatnonzero(series <= fraction * series[0])
        return int(hits[0]) if len(hits) else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TRACE_COLUMNS)
        for r in self.records:
            w.writerow([r["epoch"]] + [repr(float(r[c])) for c in TRACE_COLUMNS[1:]])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "TrainTrace":
        rows = csv.DictReader(io.StringIO(text))
        return cls(
            [{c: (int(r[c]) if c == "epoch" else float(r[c])) for c in TRACE_COLUMNS} for r in rows]
        )


def project(xs: np.ndarray, a: float, b: float, gap: float) -> np.ndarray:
    """Pin the endpoints, sort the interior and enforce ``gap`` spacing."""
    xs = np.array(xs, dtype=float)
    n = len(xs) - 1
    xs[0], xs[-1] = a, b
    xs[1:-1] = np.sort(xs[1:-1])
    for i in range(1, n):
        upper = b - (n - i) * gap
        xs[i] = min(max(xs[i], xs[i - 1] + gap), upper)
    return xs


def init_base_points(ref: PointCloudFunction, tc: TrainConfig) -> BaseConfiguration:
    a, b = ref.domain
    gap = tc.gap(a, b)
    rng = np.random.default_rng(tc.seed)
    inner = rng.uniform(a, b, size=tc.n_base_points - 2)
    xs = project(np.concatenate([[a], inner, [b]]), a, b, gap)
    ys = rng.uniform(float(np.min(ref.y)), float(np.max(ref.y)), size=tc.n_base_points)
    return BaseConfiguration(xs, ys)


def sgd_step(
    cfg: BaseConfiguration,
    ref: PointCloudFunction,
    tc: TrainConfig,
    ref_value: float | None = None,
    report=None,
) -> BaseConfiguration:
    """One projected gradient step.  ``report`` may carry a precomputed gradient."""
    if report is None:
        report = loss_gradient(cfg, ref, tc.loss, ref_value)
    a, b = cfg.domain
    xs = np.array(cfg.xs)
    ys = np.array(cfg.ys)
    if tc.train_x:
        xs = project(xs - tc.learning_rate * report.gradient_xs, a, b, tc.gap(a, b))
    if tc.train_y:
        ys = ys - tc.learning_rate * report.gradient_ys
    return BaseConfiguration(xs, ys)


def train(
    ref: PointCloudFunction,
    tc: TrainConfig,
    init: BaseConfiguration | None = None,
    keep_snapshots: bool = False,
) -> tuple[BaseConfiguration, TrainTrace]:
    """Initialise (unless ``init`` is given) and run ``tc.epochs`` steps.

    Every record carries the driving loss and all four classical metrics, so
    learning curves of different losses are directly comparable.
    """
    cfg = init if init is not None else init_base_points(ref, tc)
    ref_value = descriptor(ref, tc.loss) if tc.loss.topological else None
    trace = TrainTrace()
    for epoch in range(tc.epochs + 1):
        report = loss_gradient(cfg, ref, tc.loss, ref_value)
        rec = {"epoch": epoch, "loss": report.value, **all_metrics(cfg, ref)}
        if keep_snapshots:
            rec["base"] = cfg
        trace.records.append(rec)
        if epoch < tc.epochs:
            cfg = sgd_step(cfg, ref, tc, ref_value, report)
    return cfg, trace

"""Multi-loss comparison runs with on-disk artifacts."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bnn import BaseConfiguration
from .data import gen_sine, load_csv
from .losses import LossKind, predict_cloud
from .persistence import PointCloudFunction, lower_star_barcode
from .plotting import cloud_svg, trace_grid_svg
from .training import TrainConfig, TrainTrace, init_base_points, train


@dataclass
class ExperimentSpec:
    """What to fit, how to train and where to write.

    ``source`` is ``{"kind": "sine", "a", "b", "n", "sigma", "noise_seed"}`` or
    ``{"kind": "csv", "path", "x_col", "y_col"}``.
    """

    source: dict
    losses: list[str]
    out_dir: str
    n_base_points: int = 8
    epochs: int = 50
    learning_rate: float = 0.1
    seed: int = 0
    train_x: bool = True
    train_y: bool = True
    min_gap: float | None = None
    workers: int = 1

    def __post_init__(self):
        if not self.losses:
            raise ValueError("at least one loss is required")
        self.losses = [LossKind.parse(k).value for k in self.losses]

    def train_config(self, loss) -> TrainConfig:
        return TrainConfig(
            n_base_points=self.n_base_points,
            epochs=self.epochs,
            learning_rate=self.learning_rate,
            seed=self.seed,
            loss=LossKind.parse(loss),
            train_x=self.train_x,
            train_y=self.train_y,
            min_gap=self.min_gap,
        )


@dataclass
class RunSummary:
    seed: int
    spec: dict
    runs: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def load_source(source: dict) -> PointCloudFunction:
    kind = source.get("kind")
    if kind == "sine":
        return gen_sine(
            int(source.get("n", 250)),
            float(source.get("a", -10.0)),
            float(source.get("b", 10.0)),
            float(source.get("sigma", 0.0)),
            int(source.get("noise_seed", 0)),
        )
    if kind == "csv":
        return load_csv(source["path"], source.get("x_col", "x"), source.get("y_col", "y"))
    raise ValueError(f"unknown source kind {kind!r}")


def _one_run(ref: PointCloudFunction, tc: TrainConfig, init: BaseConfiguration):
    t0 = time.perf_counter()
    cfg, trace = train(ref, tc, init=init)
    return cfg, trace, time.perf_counter() - t0


def run_compare(spec: ExperimentSpec) -> RunSummary:
    """Train one network per loss from a shared initialisation and write artifacts.

    Files in ``out_dir``: ``trace_<loss>.csv``, ``model_<loss>.json``,
    ``barcode_<loss>.csv``, ``fit_<loss>.svg``, ``barcode_reference.csv``,
    ``learning_curves.svg`` and ``summary.json``.  Files written by a failed
    run are removed.
    """
    ref = load_source(spec.source)
    out = Path(spec.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    init = init_base_points(ref, spec.train_config(spec.losses[0]))
    configs = [spec.train_config(k) for k in spec.losses]

    written: list[Path] = []

    def write(name: str, text: str):
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    try:
        write("barcode_reference.csv", lower_star_barcode(ref).to_csv())
        if spec.workers > 1 and len(configs) > 1:
            with ProcessPoolExecutor(max_workers=spec.workers) as pool:
                results = list(pool.map(_one_run, [ref] * len(configs), configs, [init] * len(configs)))
        else:
            results = [_one_run(ref, tc, init) for tc in configs]

        summary = RunSummary(seed=spec.seed, spec=asdict(spec))
        traces: dict[str, TrainTrace] = {}
        for name, (cfg, trace, seconds) in zip(spec.losses, results):
            traces[name] = trace
            write(f"trace_{name}.csv", trace.to_csv())
            write(f"model_{name}.json", cfg.to_json() + "\n")
            pred = predict_cloud(cfg, ref)
            write(f"barcode_{name}.csv", lower_star_barcode(pred).to_csv())
            write(f"fit_{name}.svg", cloud_svg(ref, pred, cfg, title=f"{name}: epoch {spec.epochs}"))
            last = trace.records[-1]
            summary.runs[name] = {
                "final": {k: last[k] for k in ("loss", "mse", "rmse", "mae", "logcosh")},
                "initial_mse": trace.records[0]["mse"],
                "seconds": seconds,
                "epochs_to_half_mse": trace.epochs_to_fraction("mse", 0.5),
            }
        write("learning_curves.svg", trace_grid_svg(traces))
        write("summary.json", summary.to_json() + "\n")
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return summary


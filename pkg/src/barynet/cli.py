"""Command-line front end.

Examples::

    barynet represent --sine -10 10 250 0 --points 150
    barynet entropy --sine -10 10 250 0.1 --top-k 4
    barynet train --loss lwpe --points 8 --epochs 50 --out runs/lwpe
    barynet compare --loss pe,lwpe --seed 3 --out runs/fig3
    barynet compare --csv prices.csv --x-col day --y-col close --points 30 --out runs/gold
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bnn import BaseConfiguration, approximation_error
from .data import ParseError, bundled_series_path
from .experiments import ExperimentSpec, load_source, run_compare
from .losses import LossKind, SampleOutOfDomain, predict_cloud
from .persistence import (
    DegenerateBarcode,
    EmptyInput,
    FunctionConsistencyViolation,
    filter_top_k,
    lower_star_barcode,
    lwpe,
    persistent_entropy,
)
from .plotting import barcode_svg, cloud_svg, trace_svg
from .training import TrainConfig, train

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3


def _source(args) -> dict:
    if args.csv and args.sine:
        raise ValueError("--csv and --sine are mutually exclusive")
    if args.csv:
        path = bundled_series_path() if args.csv == "bundled" else args.csv
        return {"kind": "csv", "path": str(path), "x_col": args.x_col, "y_col": args.y_col}
    a, b, n, sigma = args.sine or (-10.0, 10.0, 250, 0.0)
    return {"kind": "sine", "a": float(a), "b": float(b), "n": int(n), "sigma": float(sigma), "noise_seed": args.noise_seed}


def _losses(values) -> list[str]:
    out = []
    for v in values or []:
        out += [s for s in v.split(",") if s]
    return [LossKind.parse(s).value for s in out]


def _out(args) -> Path | None:
    if args.out is None:
        return None
    p = Path(args.out)
    p.mkdir(parents=True, exist_ok=True)
    return p


def cmd_represent(args) -> int:
    ref = load_source(_source(args))
    a, b = ref.domain
    xs = np.linspace(a, b, args.points)
    cfg = BaseConfiguration(xs, np.interp(xs, ref.x, ref.y))
    err = approximation_error(cfg, ref.x, ref.y)
    print(f"base points: {args.points}  max error on samples: {err:.6g}")
    out = _out(args)
    if out:
        cfg.save(out / "model.json")
        (out / "fit.svg").write_text(cloud_svg(ref, predict_cloud(cfg, ref), cfg, title="equidistant base points"))
    return EXIT_OK


def cmd_entropy(args) -> int:
    ref = load_source(_source(args))
    bc = lower_star_barcode(ref)
    if args.top_k:
        bc = filter_top_k(bc, args.top_k)
    print(f"bars: {len(bc)}")
    for bar in sorted(bc.bars, key=lambda b: -b.length):
        tag = " (essential)" if bar.essential else ""
        print(f"  [{bar.birth:.6g}, {bar.death:.6g}){tag}")
    print(f"PE:   {persistent_entropy(bc):.6f}")
    print(f"LWPE: {lwpe(bc):.6f}")
    out = _out(args)
    if out:
        (out / "barcode.csv").write_text(bc.to_csv())
        (out / "barcode.svg").write_text(barcode_svg(bc))
    return EXIT_OK


def _train_config(args, loss) -> TrainConfig:
    return TrainConfig(
        n_base_points=args.points,
        epochs=args.epochs,
        learning_rate=args.lr,
        seed=args.seed,
        loss=loss,
        train_x=not args.freeze_x,
        train_y=not args.freeze_y,
        min_gap=args.min_gap,
    )


def cmd_train(args) -> int:
    losses = _losses(args.loss) or ["lwpe"]
    if len(losses) != 1:
        raise ValueError("train takes a single --loss; use compare for several")
    ref = load_source(_source(args))
    cfg, trace = train(ref, _train_config(args, losses[0]))
    last = trace.records[-1]
    print(
        f"{losses[0]}: epochs={args.epochs} loss={last['loss']:.6g} mse={last['mse']:.6g} "
        f"rmse={last['rmse']:.6g} mae={last['mae']:.6g} logcosh={last['logcosh']:.6g}"
    )
    out = _out(args)
    if out:
        (out / "trace.csv").write_text(trace.to_csv())
        cfg.save(out / "model.json")
        (out / "learning_curve.svg").write_text(trace_svg(trace, title=f"{losses[0]} run"))
    return EXIT_OK


def cmd_compare(args) -> int:
    losses = _losses(args.loss) or ["mse", "rmse", "mae", "logcosh", "lwpe"]
    spec = ExperimentSpec(
        source=_source(args),
        losses=losses,
        out_dir=args.out or "barynet_runs",
        n_base_points=args.points,
        epochs=args.epochs,
        learning_rate=args.lr,
        seed=args.seed,
        train_x=not args.freeze_x,
        train_y=not args.freeze_y,
        min_gap=args.min_gap,
        workers=args.workers,
    )
    summary = run_compare(spec)
    print(f"{'loss':8s} {'mse':>12s} {'rmse':>12s} {'mae':>12s} {'logcosh':>12s} {'half@':>6s}")
    for name, run in summary.runs.items():
        f = run["final"]
        half = run["epochs_to_half_mse"]
        print(
            f"{name:8s} {f['mse']:12.6g} {f['rmse']:12.6g} {f['mae']:12.6g} {f['logcosh']:12.6g} "
            f"{'-' if half is None else half:>6}"
        )
    print(f"artifacts in {spec.out_dir}")
    if args.top_k:
        bc = filter_top_k(lower_star_barcode(load_source(spec.source)), args.top_k)
        print(json.dumps({"reference_top_k": [[b.birth, b.death] for b in bc.bars]}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("data source (default: clean sine, 250 points on [-10, 10])")
    src.add_argument("--sine", nargs=4, type=float, metavar=("A", "B", "N", "SIGMA"), help="sin(x) on N equispaced points of [A, B] plus N(0, SIGMA) noise")
    src.add_argument("--noise-seed", type=int, default=0, help="seed of the sine noise (default: 0)")
    src.add_argument("--csv", help="CSV file with a header row; 'bundled' selects the shipped 365-day series")
    src.add_argument("--x-col", default="day")
    src.add_argument("--y-col", default="close")
    common.add_argument("--out", help="output directory")
    common.add_argument("--top-k", type=int, default=None, help="keep only the k longest bars (diagnostic)")

    training = argparse.ArgumentParser(add_help=False)
    training.add_argument("--points", type=int, default=8, help="number of base points (default: 8)")
    training.add_argument("--epochs", type=int, default=50)
    training.add_argument("--lr", type=float, default=0.1)
    training.add_argument("--seed", type=int, default=0)
    training.add_argument("--loss", action="append", help="mse, rmse, mae, logcosh, pe or lwpe; repeat or comma-separate")
    training.add_argument("--min-gap", type=float, default=None)
    training.add_argument("--freeze-x", action="store_true", help="keep base abscissas fixed")
    training.add_argument("--freeze-y", action="store_true", help="keep base ordinates fixed")

    parser = argparse.ArgumentParser(prog="barynet", description="Barycentric networks fitted with persistence-based losses.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("represent", parents=[common], help="exact CPLF representation with equidistant base points")
    p.add_argument("--points", type=int, default=150)
    p.set_defaults(func=cmd_represent)
    p = sub.add_parser("entropy", parents=[common], help="barcode, PE and LWPE of a cloud")
    p.set_defaults(func=cmd_entropy)
    p = sub.add_parser("train", parents=[common, training], help="fit base points with a single loss")
    p.set_defaults(func=cmd_train)
    p = sub.add_parser("compare", parents=[common, training], help="fit with several losses from one initialisation")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateBarcode as exc:
        print(f"error: DegenerateBarcode: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ParseError, FunctionConsistencyViolation, EmptyInput, SampleOutOfDomain, FileNotFoundError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barynet.bnn import BaseConfiguration, evaluate
from barynet.data import gen_sine
from barynet.losses import LossKind, LossReport, classical_loss, predict_cloud
from barynet.persistence import PointCloudFunction
from barynet.training import (
    TrainConfig,
    TrainTrace,
    init_base_points,
    project,
    sgd_step,
    train,
)


def test_init_two_points_is_endpoints(sine_cloud):
    cfg = init_base_points(sine_cloud, TrainConfig(n_base_points=2))
    assert list(cfg.xs) == [-10.0, 10.0]


def test_init_is_deterministic_and_in_range(sine_cloud):
    tc = TrainConfig(n_base_points=8, seed=7)
    a, b = init_base_points(sine_cloud, tc), init_base_points(sine_cloud, tc)
    assert np.array_equal(a.xs, b.xs) and np.array_equal(a.ys, b.ys)
    assert a.xs[0] == -10.0 and a.xs[-1] == 10.0
    assert np.all(np.diff(a.xs) >= 20e-3 * (1 - 1e-12))
    assert np.all((a.ys >= -1.0) & (a.ys <= 1.0))
    c = init_base_points(sine_cloud, TrainConfig(n_base_points=8, seed=8))
    assert not np.array_equal(a.xs, c.xs)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_base_points": 1},
        {"epochs": -1},
        {"learning_rate": 0.0},
        {"seed": -3},
        {"train_x": False, "train_y": False},
        {"min_gap": 0.0},
        {"loss": "huber"},
    ],
)
def test_invalid_train_config(kwargs):
    with pytest.raises(ValueError):
        TrainConfig(**kwargs)


def test_infeasible_min_gap(sine_cloud):
    with pytest.raises(ValueError):
        init_base_points(sine_cloud, TrainConfig(n_base_points=8, min_gap=3.0))


def test_project_pins_sorts_and_spaces():
    xs = project([5.0, 0.9, 0.2, 0.2, 7.0], 0.0, 1.0, 0.1)
    assert xs[0] == 0.0 and xs[-1] == 1.0
    assert np.all(np.diff(xs) >= 0.1 - 1e-15)
    np.testing.assert_allclose(xs, [0.0, 0.2, 0.3, 0.9, 1.0])
    # crowding against the right end is pushed back left
    np.testing.assert_allclose(project([0, 0.99, 0.995, 1], 0.0, 1.0, 0.1), [0, 0.8, 0.9, 1])


def _zero_report(n):
    return LossReport(0.0, np.zeros(n), np.zeros(n))


def test_zero_gradient_leaves_cfg_unchanged(sine_cloud):
    cfg = init_base_points(sine_cloud, TrainConfig())
    out = sgd_step(cfg, sine_cloud, TrainConfig(), report=_zero_report(len(cfg)))
    assert np.array_equal(out.xs, cfg.xs) and np.array_equal(out.ys, cfg.ys)


def test_step_clamps_to_min_gap(sine_cloud):
    cfg = BaseConfiguration(np.linspace(-10, 10, 4), [0, 0, 0, 0])
    tc = TrainConfig(n_base_points=4, learning_rate=1.0)
    gx = np.array([0.0, 100.0, 0.0, 0.0])  # pushes a_1 far below A
    out = sgd_step(cfg, sine_cloud, tc, report=LossReport(0.0, gx, np.zeros(4)))
    assert out.xs[1] == -10.0 + 1e-3 * 20.0


def test_frozen_axes(sine_cloud):
    cfg = init_base_points(sine_cloud, TrainConfig())
    rep = LossReport(0.0, np.ones(8), np.ones(8))
    fx = sgd_step(cfg, sine_cloud, TrainConfig(train_x=False), report=rep)
    assert np.array_equal(fx.xs, cfg.xs) and not np.array_equal(fx.ys, cfg.ys)
    fy = sgd_step(cfg, sine_cloud, TrainConfig(train_y=False), report=rep)
    assert np.array_equal(fy.ys, cfg.ys) and not np.array_equal(fy.xs, cfg.xs)


def test_exact_fit_stays_put():
    cfg = BaseConfiguration([0, 1, 2.5, 4], [1, -1, 2, 0])
    x = np.linspace(0, 4, 41)
    ref = PointCloudFunction(x, evaluate(cfg, x))
    tc = TrainConfig(n_base_points=4, loss="mse", epochs=5)
    out = sgd_step(cfg, ref, tc)
    assert np.array_equal(out.xs, cfg.xs) and np.array_equal(out.ys, cfg.ys)
    final, trace = train(ref, tc, init=cfg)
    assert np.array_equal(final.ys, cfg.ys)
    assert np.all(trace.column("mse") == 0.0)


def test_epochs_zero_has_initial_record_only(sine_cloud):
    cfg, trace = train(sine_cloud, TrainConfig(epochs=0))
    assert len(trace) == 1 and trace.records[0]["epoch"] == 0
    assert np.array_equal(cfg.xs, init_base_points(sine_cloud, TrainConfig()).xs)


@pytest.mark.parametrize("loss", [k.value for k in LossKind])
def test_trace_shape_determinism_and_consistency(loss):
    ref = gen_sine(120, -10, 10, 0.1, seed=2)
    tc = TrainConfig(epochs=6, loss=loss, seed=4)
    cfg1, tr1 = train(ref, tc, keep_snapshots=True)
    cfg2, tr2 = train(ref, tc)
    assert len(tr1) == tc.epochs + 1
    assert tr1.to_csv() == tr2.to_csv()
    assert np.array_equal(cfg1.xs, cfg2.xs) and np.array_equal(cfg1.ys, cfg2.ys)
    for rec in tr1.records:
        snap = rec["base"]
        assert snap.xs[0] == -10.0 and snap.xs[-1] == 10.0
        assert np.all(np.diff(snap.xs) > 0)
        # recomputed through an independent interpolation routine
        pred = np.interp(ref.x, snap.xs, snap.ys)
        assert rec["mse"] == pytest.approx(np.mean((pred - ref.y) ** 2), rel=1e-12, abs=1e-15)
        assert rec["mse"] == classical_loss(predict_cloud(snap, ref), ref, "mse")
    assert tr1.records[-1]["base"] is not None


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31), n=st.integers(2, 12), lr=st.floats(0.01, 5.0))
def test_training_preserves_feasibility(seed, n, lr):
    ref = gen_sine(60, -3, 3, 0.2, seed=seed)
    tc = TrainConfig(n_base_points=n, epochs=4, learning_rate=lr, seed=seed, loss="mse")
    _, trace = train(ref, tc, keep_snapshots=True)
    gap = 1e-3 * 6
    for rec in trace.records:
        xs = rec["base"].xs
        assert xs[0] == -3.0 and xs[-1] == 3.0
        assert np.all(np.diff(xs) >= gap * (1 - 1e-9))


def test_mse_training_improves_clean_sine(sine_cloud):
    _, trace = train(sine_cloud, TrainConfig(loss="mse"))
    mse = trace.column("mse")
    assert mse[-1] < mse[0]


def test_lwpe_training_lowers_its_own_loss(sine_cloud):
    _, trace = train(sine_cloud, TrainConfig(loss="lwpe"))
    loss = trace.column("loss")
    assert loss[-1] < loss[0]


def test_trace_csv_round_trip(sine_cloud):
    _, trace = train(sine_cloud, TrainConfig(epochs=3, loss="pe"))
    text = trace.to_csv()
    assert text.splitlines()[0] == "epoch,loss,mse,rmse,mae,logcosh"
    back = TrainTrace.from_csv(text)
    for a, b in zip(trace.records, back.records):
        assert a["epoch"] == b["epoch"]
        for c in ("loss", "mse", "rmse", "mae", "logcosh"):
            assert a[c] == b[c]


def test_epochs_to_fraction():
    tr = TrainTrace([{"epoch": i, "mse": v} for i, v in enumerate([4.0, 3.0, 2.0, 1.0])])
    assert tr.epochs_to_fraction("mse", 0.5) == 2
    assert tr.epochs_to_fraction("mse", 0.1) is None

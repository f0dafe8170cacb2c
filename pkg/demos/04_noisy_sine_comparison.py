"""Five losses on the noisy sine from one shared initialization."""
# %%
from barynet.experiments import ExperimentSpec, run_compare

spec = ExperimentSpec(
    source={"kind": "sine", "a": -10, "b": 10, "n": 250, "sigma": 0.1, "noise_seed": 0},
    losses=["mse", "rmse", "mae", "logcosh", "lwpe"],
    out_dir="demo_output/noisy_sine",
    seed=0,
)
summary = run_compare(spec)

# %%
print(f"{'loss':8s} {'initial mse':>12s} {'final mse':>10s} {'half@':>6s}")
for name, run in summary.runs.items():
    half = run["epochs_to_half_mse"]
    print(f"{name:8s} {run['initial_mse']:12.4f} {run['final']['mse']:10.4f} {'-' if half is None else half:>6}")
print(f"traces, models, barcodes and SVGs in {spec.out_dir}")

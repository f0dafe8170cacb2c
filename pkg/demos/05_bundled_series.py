"""Thirty base points on the bundled 365-day price series.

The series is synthetic: a seeded geometric random walk in the price range
of a gold ETF, shipped so the run needs no network access.
"""
# %%
from barynet import lower_star_barcode, lwpe, persistent_entropy
from barynet.data import bundled_series, bundled_series_path
from barynet.experiments import ExperimentSpec, run_compare

ref = bundled_series()
bc = lower_star_barcode(ref)
print(f"{len(ref)} days, {len(bc)} bars, PE={persistent_entropy(bc):.4f}, LWPE={lwpe(bc):.2f}")

# %%
spec = ExperimentSpec(
    source={"kind": "csv", "path": str(bundled_series_path()), "x_col": "day", "y_col": "close"},
    losses=["mse", "logcosh", "pe", "lwpe"],
    out_dir="demo_output/series",
    n_base_points=30,
)
summary = run_compare(spec)
for name, run in summary.runs.items():
    print(f"{name:8s} mse {run['initial_mse']:10.2f} -> {run['final']['mse']:10.2f}")

"""Exact representation of a piecewise linear function by a barycentric network.

Builds random base configurations, evaluates the network through the
activation composition, and compares against plain linear interpolation.
"""
# %%
import numpy as np

from barynet import BaseConfiguration, evaluate, from_base_config, eval_global
from barynet.bnn import approximation_error
from barynet.data import gen_sine

rng = np.random.default_rng(0)

# %% a small hand-made network
cfg = BaseConfiguration([0.0, 1.0, 3.0], [2.0, 5.0, -1.0])
net = from_base_config(cfg)
for x in [0.0, 0.5, 1.0, 2.0, 3.0, 3.5]:
    print(f"x={x:4.1f}  fast={evaluate(cfg, x): .4f}  summed over locals={eval_global(net, x, verbatim=True): .4f}")
# outside [0, 3] every local gate is shut, so the output is exactly 0

# %% random configurations against np.interp
worst = 0.0
for _ in range(200):
    n = int(rng.integers(2, 21))
    xs = np.sort(rng.uniform(-5, 5, n))
    cfg = BaseConfiguration(xs, rng.uniform(-10, 10, n))
    x = rng.uniform(xs[0], xs[-1], 1000)
    worst = max(worst, np.max(np.abs(evaluate(cfg, x) - np.interp(x, cfg.xs, cfg.ys))))
print(f"max deviation from linear interpolation over 200 networks: {worst:.2e}")

# %% equidistant base points on the sine cloud
ref = gen_sine(250, -10, 10)
for n in [8, 30, 150, 250]:
    xs = np.linspace(-10, 10, n)
    cfg = BaseConfiguration(xs, np.interp(xs, ref.x, ref.y))
    print(f"{n:4d} base points: max error on samples {approximation_error(cfg, ref.x, ref.y):.3e}")
# with one base point per sample the fit is exact

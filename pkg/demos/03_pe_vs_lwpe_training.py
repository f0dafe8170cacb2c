"""Training 8 base points on the clean sine with the PE and LWPE losses.

Both runs start from the same random configuration.  The MSE column is
tracked for every epoch whatever loss drives the updates.
"""
# %%
from pathlib import Path

from barynet import TrainConfig, init_base_points, train
from barynet.data import gen_sine
from barynet.plotting import emit_plot, trace_grid_svg

out = Path("demo_output")
out.mkdir(exist_ok=True)
ref = gen_sine(250, -10, 10)

# %%
traces = {}
for seed in range(5):
    init = init_base_points(ref, TrainConfig(seed=seed))
    row = []
    for loss in ["pe", "lwpe"]:
        cfg, tr = train(ref, TrainConfig(seed=seed, loss=loss), init=init)
        row.append(f"{loss}: loss {tr.records[-1]['loss']:.4f} mse {tr.records[0]['mse']:.3f} -> {tr.records[-1]['mse']:.3f}")
        if seed == 0:
            traces[loss] = tr
            emit_plot(tr, out / f"trace_{loss}.svg", title=f"{loss}, seed 0")
    print(f"seed {seed}  " + "   ".join(row))

(out / "pe_vs_lwpe_mse.svg").write_text(trace_grid_svg(traces))
# Both losses drive their own descriptor toward the reference.  Matching one
# scalar does not pin the shape, so the MSE need not follow.

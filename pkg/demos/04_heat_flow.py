# %% [markdown]
# # Steady heat flow with a memory-laden Fourier law
#
# With constant flux g and conductivity K the steady profile is affine in x.
# The fractional order shifts the intercept and scales the slope, and every
# profile passes through the same point at x = 1.

# %%
import numpy as np

from nsfrac import Grid, HeatFlowParams, figure1_dataset, solve_steady, solve_steady_via_inversion
from nsfrac.heatflow import FIGURE1_PARAMS

series = figure1_dataset(5.0, 101)
for s in series:
    print(f"nu={s.nu_label}: T = {s.slope:.4f} x + {s.intercept:.4f}")
print("parameters:", FIGURE1_PARAMS)

# %% [markdown]
# The same profile comes out of the time-domain inversion route.

# %%
grid = Grid(0.0, 0.05, 101)
p = HeatFlowParams.from_nu(0.3, 3.0, 2.0, -1.0)
gap = np.max(np.abs(solve_steady(p, grid).temperatures
                    - solve_steady_via_inversion(p, grid).temperatures))
print("closed form vs inversion:", gap)

# %% [markdown]
# Plot when matplotlib is around.

# %%
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for s in series:
        ax.plot(s.xs, s.temperatures, label=f"nu = {s.nu_label}")
    ax.set_xlabel("x")
    ax.set_ylabel("T")
    ax.legend()
    fig.savefig("heat_flow.png", dpi=120)
    print("wrote heat_flow.png")

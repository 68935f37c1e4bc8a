# %% [markdown]
# # A tour of the exponential-kernel derivatives
#
# The operator of order nu in (0, 1) smooths the classical derivative with an
# exponential memory kernel. Its rate is nu/(1 - nu), so small orders forget slowly.

# %%
import numpy as np

from nsfrac import (CAPUTO_FABRIZIO, ClosedFormFunction, Grid, OperatorKind,
                    cf_derivative, fractional_derivative, make_order,
                    rl_ns_derivative, sample)

grid = Grid(0.0, 1e-3, 1001)
ramp = sample(ClosedFormFunction.monomial(1), grid)

# %% [markdown]
# For the ramp f(x) = x the derivative has the closed form (1 - exp(-a x))/nu.

# %%
for nu in (0.2, 0.5, 0.8):
    a = nu / (1 - nu)
    d = rl_ns_derivative(ramp, make_order(nu)).values
    exact = (1 - np.exp(-a * grid.nodes)) / nu
    print(f"nu={nu}: D at x=1 is {d[-1]:.6f}, max deviation {np.max(np.abs(d - exact)):.1e}")

# %% [markdown]
# The Caputo-Fabrizio variant works on f' and so kills constants.

# %%
const = sample(ClosedFormFunction.constant(3.0), grid)
print("CF of a constant:", np.max(np.abs(cf_derivative(const, make_order(0.5)).values)))
print("RL of a constant at x=0:", rl_ns_derivative(const, make_order(0.5)).values[0])

# %% [markdown]
# The dispatcher accepts string aliases, picking the matching normalization.

# %%
wave = sample(ClosedFormFunction.sine(2.0), grid)
for kind in ("rl", "cf"):
    d = fractional_derivative(wave, make_order(0.4), OperatorKind(kind))
    print(kind, d.values[::250].round(4))
print("cf norm at nu=0.4:", CAPUTO_FABRIZIO.at(0.4))

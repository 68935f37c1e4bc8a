# %% [markdown]
# # The two endpoints of the order
#
# As nu -> 1 the operator approaches d/dx; as nu -> 0 it approaches the identity.
# Away from a thin boundary layer at x = 0 the gap shrinks monotonically.

# %%
from nsfrac import ClosedFormFunction, Grid, LimitDirection, limit_check

grid = Grid(0.0, 1e-3, 1001)
f = ClosedFormFunction.monomial(1)

up = limit_check(f, LimitDirection.TO_ONE, grid, [0.9, 0.99, 0.999])
down = limit_check(f, LimitDirection.TO_ZERO, grid, [0.1, 0.01, 0.001])

# %%
for report in (up, down):
    print(report.direction.name)
    for nu, err in zip(report.nus, report.errors):
        print(f"  nu={nu:<6} sup error {err:.3e}")
    print("  monotone:", report.monotone)

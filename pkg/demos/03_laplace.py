# %% [markdown]
# # Laplace side
#
# The operator acts on transforms by multiplication with s/(nu + (1 - nu) s).
# We compare a numerically transformed derivative against that prediction,
# then invert a rational image by partial fractions.

# %%
from nsfrac import (ClosedFormFunction, Grid, apply_symbol, inverse_laplace_rational,
                    make_order, numeric_laplace, operator_symbol, rl_ns_derivative, sample)

f = ClosedFormFunction.exponential(-1.0)
grid = Grid(0.0, 1e-3, 40001)
order = make_order(0.3)
d = rl_ns_derivative(sample(f, grid), order)
symbol = operator_symbol(order)

for s in (1.0, 2.0, 5.0):
    predicted = float(symbol(s) * f.laplace()(s))
    print(f"s={s}: numeric {numeric_laplace(d, s):.8f}  symbolic {predicted:.8f}")

# %% [markdown]
# The product image is proper, so it inverts back to a closed form.

# %%
image = apply_symbol(f.laplace(), symbol)
print("image numerator", image.numerator, "denominator", image.denominator)
closed = inverse_laplace_rational(image)
print("closed form, with exp(b) meaning e^(b x):", closed)
print("numeric D at x=1:", d.values[1000], " closed form:", closed(1.0))

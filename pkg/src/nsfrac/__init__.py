"""Fractional derivatives with exponential (non-singular) kernels.

The core object is the Riemann-Liouville-type operator

    D T(x) = norm(nu) / (1 - nu) * d/dx int_a^x exp(-nu (x - lam) / (1 - nu)) T(lam) dlam,

for orders ``0 < nu < 1``, together with the Caputo-Fabrizio family, the
Laplace-domain symbol and inverse, and the steady heat-flow model built on it.
"""
__version__ = "0.1.0"

from .core import (CAPUTO_FABRIZIO, ONE, ClosedFormFunction, FnKind,
                   FractionalOrder, Grid, NormalizationRule, NormKind,
                   SampledFunction, make_order, normalization_value, sample)
from .errors import *  # noqa: F401,F403
from .funcspec import parse_function_spec
from .heatflow import (CLASSICAL, HeatFlowParams, SolutionSeries,
                       figure1_dataset, solve_steady, solve_steady_via_inversion,
                       steady_laplace_image)
from .laplace import (OperatorSymbol, antiderivative_inverse, apply_symbol,
                      inverse_laplace_rational, limit_symbol, numeric_laplace,
                      operator_symbol)
from .operators import (ConvolutionResult, ExpConvolver, LimitDirection,
                        LimitReport, OperatorKind, cf_derivative,
                        exp_convolution, fractional_derivative, limit_check,
                        naive_convolution_oracle, psi_form_derivative,
                        rl_ns_derivative)
from .rational import RationalLaplaceImage

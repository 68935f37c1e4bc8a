"""Steady one-dimensional heat flow under the fractional Fourier law.

``K * D T = -H`` with constant flux ``H = g`` has the affine solution

    T(x) = -C * (g * nu * x + g * (1 - nu)) / (K * norm(nu)).

``nu = 1`` is admitted here only, through :data:`CLASSICAL`, and gives the
ordinary Fourier law solution ``T = -C g x / K``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Union

import numpy as np

from .core import ONE, FractionalOrder, Grid, NormalizationRule, SampledFunction, make_order
from .errors import InvalidGrid, InvalidParams
from .laplace import antiderivative_inverse
from .rational import RationalLaplaceImage

CLASSICAL = "classical"

FIGURE1_ORDERS = (0.3, 0.6, 1.0)
FIGURE1_PARAMS = {"constant_C": -1.0, "heat_flow_g": 2.0, "conductivity_K": 3.0}


@dataclass(frozen=True)
class HeatFlowParams:
    conductivity_K: float
    heat_flow_g: float
    constant_C: float = 1.0
    order: Union[FractionalOrder, str] = CLASSICAL
    norm: NormalizationRule = ONE

    def __post_init__(self):
        k = self.conductivity_K
        if not (math.isfinite(k) and k > 0):
            raise InvalidParams(f"conductivity K must be positive, got {k!r}")
        if not (math.isfinite(self.heat_flow_g) and math.isfinite(self.constant_C)):
            raise InvalidParams("g and C must be finite")
        if not (self.order == CLASSICAL or isinstance(self.order, FractionalOrder)):
            raise InvalidParams(f"order must be a FractionalOrder or CLASSICAL, got {self.order!r}")

    @classmethod
    def from_nu(cls, nu: float, conductivity_K: float, heat_flow_g: float,
                constant_C: float = 1.0, norm: NormalizationRule = ONE) -> "HeatFlowParams":
        order = CLASSICAL if nu == 1 else make_order(nu)
        return cls(conductivity_K, heat_flow_g, constant_C, order, norm)

    @property
    def is_classical(self) -> bool:
        return self.order == CLASSICAL

    @property
    def nu(self) -> float:
        return 1.0 if self.is_classical else self.order.nu

    @property
    def normalization(self) -> float:
        return 1.0 if self.is_classical else self.norm(self.order)


@dataclass(frozen=True, eq=False)
class SolutionSeries:
    nu_label: float
    xs: np.ndarray
    temperatures: np.ndarray
    slope: float
    intercept: float


def _check_grid(grid: Grid):
    if grid.start != 0.0:
        raise InvalidGrid("steady heat-flow solutions are posed on grids starting at 0")


def steady_coefficients(params: HeatFlowParams):
    """``(slope, intercept)`` of the closed-form solution."""
    c, g, k = params.constant_C, params.heat_flow_g, params.conductivity_K
    if params.is_classical:
        return -c * g / k, 0.0
    nu, r = params.nu, params.normalization
    return -c * g * nu / (k * r), -c * g * (1.0 - nu) / (k * r)


def solve_steady(params: HeatFlowParams, grid: Grid) -> SolutionSeries:
    _check_grid(grid)
    slope, intercept = steady_coefficients(params)
    xs = grid.nodes
    return SolutionSeries(params.nu, xs, slope * xs + intercept, slope, intercept)


def solve_steady_via_inversion(params: HeatFlowParams, grid: Grid) -> SolutionSeries:
    """Numerical route: invert ``D T = -g/K`` in the time domain, then scale by C."""
    _check_grid(grid)
    if params.is_classical:
        raise InvalidParams("the inversion route needs nu in (0, 1)")
    xi = SampledFunction(grid, np.full(grid.count, -params.heat_flow_g / params.conductivity_K))
    t = params.constant_C * antiderivative_inverse(xi, params.order, params.norm).values
    xs = grid.nodes
    slope = (t[1] - t[0]) / (xs[1] - xs[0])
    return SolutionSeries(params.nu, xs, t, float(slope), float(t[0]))


def steady_laplace_image(params: HeatFlowParams) -> RationalLaplaceImage:
    """Laplace image of the C=1 solution, ``-(g/K)(nu + (1-nu)s) / (norm * s^2)``.

    The ``1/s`` image of the constant right-hand side is included.
    """
    if params.is_classical:
        raise InvalidParams("the Laplace image is built for nu in (0, 1)")
    nu, r = params.nu, params.normalization
    scale = -params.heat_flow_g / (params.conductivity_K * r)
    return RationalLaplaceImage.make([scale * nu, scale * (1.0 - nu)], [0.0, 0.0, 1.0])


def figure1_dataset(x_max: float, points: int) -> List[SolutionSeries]:
    """The three reference lines: nu in {0.3, 0.6, 1}, C=-1, g=2, K=3, norm one."""
    if not (math.isfinite(x_max) and x_max > 0):
        raise InvalidParams(f"x_max must be positive, got {x_max!r}")
    grid = Grid.span(0.0, x_max, points)
    return [solve_steady(HeatFlowParams.from_nu(nu, **FIGURE1_PARAMS), grid)
            for nu in FIGURE1_ORDERS]

"""Self-checks run by ``nsfrac verify``.

Each check compares the numerical pipeline against a closed form or an
independent route and reports the measured discrepancy with its tolerance.
Timing checks are left to the test suite so that the report is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from .core import ClosedFormFunction, Grid, SampledFunction, make_order, sample
from .heatflow import HeatFlowParams, figure1_dataset, solve_steady
from .laplace import antiderivative_inverse, numeric_laplace, operator_symbol
from .operators import (LimitDirection, exp_convolution, limit_check,
                        naive_convolution_oracle, psi_form_derivative,
                        rl_ns_derivative)


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    tolerance: float
    passed: bool


def _basis():
    c = ClosedFormFunction
    return [c.constant(1.0), c.monomial(1), c.monomial(2), c.exponential(-1.0),
            c.exponential(0.5), c.sine(2.0), c.cosine(2.0), 2.0 * c.monomial(1) + 1.0]


def _rel_sup(a, b):
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


def check_figure1():
    series = figure1_dataset(5.0, 101)
    slopes = np.array([s.slope for s in series])
    intercepts = np.array([s.intercept for s in series])
    err = max(np.max(np.abs(slopes - np.array([0.2, 0.4, 2.0 / 3.0]))),
              np.max(np.abs(intercepts - np.array([7.0 / 15.0, 4.0 / 15.0, 0.0]))),
              max(abs(s.slope + s.intercept - 2.0 / 3.0) for s in series))
    return err, 1e-12


def check_anchors():
    grid = Grid(0.0, 1e-3, 1001)
    x = grid.nodes
    worst = 0.0
    for nu in (0.1, 0.3, 0.5, 0.7, 0.9):
        order = make_order(nu)
        a = order.rate
        d1 = rl_ns_derivative(sample(ClosedFormFunction.constant(1.0), grid), order).values
        dx = rl_ns_derivative(sample(ClosedFormFunction.monomial(1), grid), order).values
        worst = max(worst, _rel_sup(d1, np.exp(-a * x) / (1 - nu)),
                    _rel_sup(dx, (1 - np.exp(-a * x)) / nu))
    return worst, 1e-8


def check_oracle():
    worst = 0.0
    for f in _basis():
        for rate in (0.1, 1.0, 10.0):
            for n in (64, 256, 1024):
                sf = sample(f, Grid.span(0.0, 1.0, n))
                fast = exp_convolution(sf, rate).values
                slow = naive_convolution_oracle(sf, rate).values
                worst = max(worst, _rel_sup(fast, slow))
    return worst, 1e-8


def check_round_trip():
    grid = Grid(0.0, 2.5e-4, 4001)
    worst = 0.0
    for f in _basis():
        xi = sample(f, grid)
        for nu in np.arange(1, 10) / 10:
            order = make_order(nu)
            back = rl_ns_derivative(antiderivative_inverse(xi, order), order).values
            worst = max(worst, _rel_sup(back, xi.values))
    return worst, 1e-6


def check_symbol():
    grid = Grid(0.0, 1e-3, 40001)
    f = ClosedFormFunction.exponential(-1.0)
    sf = sample(f, grid)
    worst = 0.0
    for nu in (0.3, 0.6):
        order = make_order(nu)
        d = rl_ns_derivative(sf, order)
        for s in (1.0, 2.0, 5.0):
            expected = float(operator_symbol(order)(s) * f.laplace()(s))
            worst = max(worst, abs(numeric_laplace(d, s) - expected) / abs(expected))
    return worst, 1e-4


def check_limits():
    grid = Grid(0.0, 1e-3, 1001)
    f = ClosedFormFunction.monomial(1)
    up = limit_check(f, LimitDirection.TO_ONE, grid, [0.9, 0.99, 0.999])
    down = limit_check(f, LimitDirection.TO_ZERO, grid, [0.1, 0.01, 0.001])
    if not (up.monotone and down.monotone):
        return float("inf"), 2e-3
    return max(up.final_error, down.final_error), 2e-3


def check_psi():
    sf = sample(ClosedFormFunction.sine(2.0), Grid(0.0, 1e-3, 1001))
    worst = 0.0
    for psi in (1.0 / 3.0, 1.0, 3.0):
        a = psi_form_derivative(sf, psi).values
        b = rl_ns_derivative(sf, make_order(1.0 / (psi + 1.0))).values
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst, 0.0


def check_heat_loop():
    grid = Grid(0.0, 1e-3, 1001)
    worst = 0.0
    for nu in np.arange(1, 10) / 10:
        params = HeatFlowParams.from_nu(nu, conductivity_K=3.0, heat_flow_g=2.0)
        series = solve_steady(params, grid)
        d = rl_ns_derivative(SampledFunction(grid, series.temperatures), params.order).values
        worst = max(worst, float(np.max(np.abs(d + 2.0 / 3.0))))
    return worst, 1e-6


CHECKS: List[tuple] = [
    ("figure1_closed_form", check_figure1),
    ("operator_anchors", check_anchors),
    ("oracle_equivalence", check_oracle),
    ("round_trip", check_round_trip),
    ("laplace_symbol", check_symbol),
    ("limit_suites", check_limits),
    ("psi_coherence", check_psi),
    ("heat_loop_closure", check_heat_loop),
]


def run_checks(selected: Callable[[str], bool] = lambda name: True) -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        if not selected(name):
            continue
        measured, tol = fn()
        results.append(CheckResult(name, float(measured), tol, bool(measured <= tol)))
    return results

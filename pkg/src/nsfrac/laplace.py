"""Laplace-domain view of the exponential-kernel derivative.

With lower limit 0 the derivative acts as multiplication by the symbol
``norm(nu) * s / (nu + (1 - nu) * s)``.  Inverting that multiplier in the
time domain gives ``T = ((1 - nu) * Xi + nu * int_0^x Xi) / norm(nu)``,
which is the primary inversion route here; rational partial fractions are
kept as a cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .core import ONE, ClosedFormFunction, FractionalOrder, NormalizationRule, SampledFunction
from .errors import (ImproperImage, InvalidGrid, TruncationTooSevere,
                     UnsupportedPoleStructure)
from .rational import ROOT_MATCH_TOL, RationalLaplaceImage

__all__ = [
    "RationalLaplaceImage", "OperatorSymbol", "operator_symbol", "limit_symbol",
    "apply_symbol", "inverse_laplace_rational", "numeric_laplace",
    "antiderivative_inverse", "cumulative_trapezoid",
]

TAIL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OperatorSymbol:
    image: RationalLaplaceImage
    nu: float

    def __call__(self, s):
        return self.image(s)


def operator_symbol(order: FractionalOrder, norm: NormalizationRule = ONE) -> OperatorSymbol:
    nu = order.nu
    image = RationalLaplaceImage.make([0.0, norm(order)], [nu, 1.0 - nu])
    return OperatorSymbol(image, nu)


def limit_symbol(nu: float) -> OperatorSymbol:
    """Endpoint symbols: ``1`` (identity) at nu=0, ``s`` (d/dx) at nu=1."""
    if nu == 0:
        return OperatorSymbol(RationalLaplaceImage.constant(1.0), 0.0)
    if nu == 1:
        return OperatorSymbol(RationalLaplaceImage.make([0.0, 1.0], [1.0]), 1.0)
    raise ValueError(f"limit symbols exist only at nu=0 and nu=1, got {nu!r}")


def apply_symbol(t_image: RationalLaplaceImage, symbol: OperatorSymbol) -> RationalLaplaceImage:
    return t_image * symbol.image


def inverse_laplace_rational(image: RationalLaplaceImage) -> ClosedFormFunction:
    """Partial-fraction inverse for real simple poles plus s=0 of order <= 2.

    ``A/(s-p) -> A exp(p x)``, ``A/s -> A``, ``A/s^2 -> A x``.
    """
    image = image.canonical()
    if image.is_zero:
        return ClosedFormFunction.constant(0.0)
    num = np.array(image.numerator)
    den = np.array(image.denominator)
    if image.num_degree >= image.den_degree:
        raise ImproperImage(
            "image is not strictly proper; its inverse contains a delta term")

    m0 = int(np.flatnonzero(den)[0])          # multiplicity of the pole at s=0
    if m0 > 2:
        raise UnsupportedPoleStructure(f"pole at s=0 of order {m0} (max 2)")
    q = den[m0:]                              # den = s^m0 * q(s)
    poles = P.polyroots(q) if q.size > 1 else np.array([])
    if np.any(np.abs(np.imag(poles)) > ROOT_MATCH_TOL):
        raise UnsupportedPoleStructure("complex poles are not supported")
    poles = np.real(poles)
    if np.any(np.abs(poles) <= ROOT_MATCH_TOL):
        raise UnsupportedPoleStructure("inexact pole at s=0")
    if poles.size > 1:
        gaps = np.abs(poles[:, None] - poles[None, :]) + np.eye(poles.size)
        if gaps.min() <= 1e-8 * max(1.0, np.abs(poles).max()):
            raise UnsupportedPoleStructure("repeated nonzero poles are not supported")

    terms = []
    dq = P.polyder(q) if q.size > 1 else np.zeros(1)
    for p in poles:
        residue = P.polyval(p, num) / (p ** m0 * P.polyval(p, dq))
        terms.append((residue, ClosedFormFunction.exponential(p)))
    n0, q0 = num[0], q[0]
    if m0 >= 1:
        if m0 == 1:
            terms.append((n0 / q0, ClosedFormFunction.constant(1.0)))
        else:
            n1 = num[1] if num.size > 1 else 0.0
            q1 = q[1] if q.size > 1 else 0.0
            terms.append((n0 / q0, ClosedFormFunction.monomial(1)))
            terms.append(((n1 * q0 - n0 * q1) / (q0 * q0), ClosedFormFunction.constant(1.0)))
    return ClosedFormFunction.combination(terms)


def numeric_laplace(f: SampledFunction, s: float) -> float:
    """Trapezoid estimate of ``int_0^inf exp(-s x) f(x) dx`` truncated at the grid end."""
    if not s > 0:
        raise ValueError(f"s must be positive, got {s!r}")
    if f.grid.start != 0.0:
        raise InvalidGrid("numeric_laplace needs a grid starting at 0")
    x = f.grid.nodes
    tail = math.exp(-s * x[-1]) * abs(f.values[-1])
    if not tail < TAIL_TOL:
        raise TruncationTooSevere(
            f"tail exp(-s x_N)|f(x_N)| = {tail:.3g} is not below {TAIL_TOL:g}; extend the grid")
    g = np.exp(-s * x) * f.values
    return float(f.grid.step * (g.sum() - 0.5 * (g[0] + g[-1])))


def cumulative_trapezoid(f: SampledFunction) -> SampledFunction:
    v = f.values
    out = np.zeros_like(v)
    out[1:] = np.cumsum(0.5 * (v[1:] + v[:-1])) * f.grid.step
    return SampledFunction(f.grid, out)


def antiderivative_inverse(xi: SampledFunction, order: FractionalOrder,
                           norm: NormalizationRule = ONE) -> SampledFunction:
    """Solve ``D T = Xi`` for T with lower limit 0."""
    if xi.grid.start != 0.0:
        raise InvalidGrid("the inverse operator is defined for grids starting at 0")
    nu = order.nu
    r = norm(order)
    integral = cumulative_trapezoid(xi).values
    return SampledFunction(xi.grid, ((1.0 - nu) / r) * xi.values + (nu / r) * integral)

"""Domain types shared by every other module.

The fractional order ``nu`` lives on the open interval (0, 1).  Its two
derived quantities are ``psi = 1/nu - 1`` and the kernel decay rate
``rate = nu / (1 - nu)``; the memory kernel of every operator in this
package is ``exp(-rate * (x - lam))``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import (InvalidGrid, InvalidNormalization, NonFiniteSample,
                     OrderOutOfRange)
from .rational import RationalLaplaceImage


@dataclass(frozen=True)
class FractionalOrder:
    nu: float

    def __post_init__(self):
        nu = self.nu
        if not isinstance(nu, (int, float, np.floating)) or not math.isfinite(nu):
            raise OrderOutOfRange(f"order must be a finite real, got {nu!r}")
        if not 0.0 < nu < 1.0:
            raise OrderOutOfRange(
                f"order must lie in the open interval (0, 1), got {nu!r}; "
                "use limit_check for endpoint behaviour")
        object.__setattr__(self, "nu", float(nu))

    @property
    def psi(self) -> float:
        return 1.0 / self.nu - 1.0

    @property
    def rate(self) -> float:
        return self.nu / (1.0 - self.nu)

    @classmethod
    def from_psi(cls, psi: float) -> "FractionalOrder":
        return cls(1.0 / (psi + 1.0))


def make_order(nu: float) -> FractionalOrder:
    return FractionalOrder(nu)


class NormKind(enum.Enum):
    ONE = "one"
    CAPUTO_FABRIZIO = "cf"
    CUSTOM = "custom"


@dataclass(frozen=True)
class NormalizationRule:
    """Rule producing the positive scale factor applied to an operator.

    ``ONE`` is the constant 1; ``CAPUTO_FABRIZIO`` is ``2 / (2 - nu)``;
    ``CUSTOM`` calls a user function of ``nu``.
    """

    kind: NormKind = NormKind.ONE
    custom_value_fn: Optional[Callable[[float], float]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind is NormKind.CUSTOM and self.custom_value_fn is None:
            raise InvalidNormalization("custom rule needs a value function")

    @classmethod
    def one(cls) -> "NormalizationRule":
        return cls(NormKind.ONE)

    @classmethod
    def caputo_fabrizio(cls) -> "NormalizationRule":
        return cls(NormKind.CAPUTO_FABRIZIO)

    @classmethod
    def custom(cls, fn: Callable[[float], float]) -> "NormalizationRule":
        return cls(NormKind.CUSTOM, fn)

    def at(self, nu: float) -> float:
        """Evaluate the rule at a raw ``nu``; endpoints are allowed here."""
        if self.kind is NormKind.ONE:
            return 1.0
        if self.kind is NormKind.CAPUTO_FABRIZIO:
            return 2.0 / (2.0 - nu)
        value = float(self.custom_value_fn(nu))
        if not math.isfinite(value) or value <= 0.0:
            raise InvalidNormalization(
                f"custom normalization returned {value!r} at nu={nu!r}; must be finite and > 0")
        return value

    def __call__(self, order: FractionalOrder) -> float:
        return self.at(order.nu)


ONE = NormalizationRule.one()
CAPUTO_FABRIZIO = NormalizationRule.caputo_fabrizio()


def normalization_value(rule: NormalizationRule, order: FractionalOrder) -> float:
    return rule(order)


@dataclass(frozen=True)
class Grid:
    """Uniform grid ``start + i * step`` for ``i = 0 .. count - 1``."""

    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise InvalidGrid("grid start and step must be finite")
        if self.step <= 0.0:
            raise InvalidGrid(f"grid step must be positive, got {self.step!r}")
        if int(self.count) != self.count or self.count < 2:
            raise InvalidGrid(f"grid needs at least 2 nodes, got {self.count!r}")
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "count", int(self.count))

    @classmethod
    def span(cls, start: float, end: float, points: int) -> "Grid":
        if not end > start:
            raise InvalidGrid(f"grid end {end!r} must exceed start {start!r}")
        if int(points) != points or points < 2:
            raise InvalidGrid(f"grid needs at least 2 nodes, got {points!r}")
        return cls(start, (end - start) / (points - 1), points)

    def node(self, i: int) -> float:
        return self.start + i * self.step

    @property
    def end(self) -> float:
        return self.node(self.count - 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.start + np.arange(self.count) * self.step


def _frozen(values) -> np.ndarray:
    a = np.array(values, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = _frozen(self.values)
        if values.shape != (self.grid.count,):
            raise InvalidGrid(
                f"expected {self.grid.count} samples, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteSample("sampled values must all be finite")
        object.__setattr__(self, "values", values)

    @property
    def x(self) -> np.ndarray:
        return self.grid.nodes

    def __len__(self):
        return self.grid.count

    def _combine(self, other, op):
        if isinstance(other, SampledFunction):
            if other.grid != self.grid:
                raise InvalidGrid("cannot combine functions sampled on different grids")
            other = other.values
        return SampledFunction(self.grid, op(self.values, other))

    def __add__(self, other):
        return self._combine(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __mul__(self, scalar):
        return SampledFunction(self.grid, self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0


class FnKind(enum.Enum):
    CONSTANT = "const"
    MONOMIAL = "monomial"
    EXPONENTIAL = "exp"
    SINE = "sin"
    COSINE = "cos"
    AFFINE = "affine"


@dataclass(frozen=True)
class ClosedFormFunction:
    """A function from the analytic test basis.

    Atoms are ``c``, ``x**k``, ``exp(b*x)``, ``sin(w*x)`` and ``cos(w*x)``;
    ``AFFINE`` holds a tuple of ``(coefficient, atom)`` terms.  Every kind has
    an exact derivative and an exact Laplace image.
    """

    kind: FnKind
    param: float = 0.0
    terms: tuple = ()

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, c: float) -> "ClosedFormFunction":
        return cls(FnKind.CONSTANT, float(c))

    @classmethod
    def monomial(cls, k: int) -> "ClosedFormFunction":
        if int(k) != k or k < 0:
            raise ValueError(f"monomial degree must be a non-negative integer, got {k!r}")
        return cls(FnKind.MONOMIAL, int(k))

    @classmethod
    def exponential(cls, b: float) -> "ClosedFormFunction":
        return cls(FnKind.EXPONENTIAL, float(b))

    @classmethod
    def sine(cls, w: float) -> "ClosedFormFunction":
        return cls(FnKind.SINE, float(w))

    @classmethod
    def cosine(cls, w: float) -> "ClosedFormFunction":
        return cls(FnKind.COSINE, float(w))

    @classmethod
    def combination(cls, terms) -> "ClosedFormFunction":
        flat = []
        for coef, fn in terms:
            if fn.kind is FnKind.AFFINE:
                flat.extend((coef * c, g) for c, g in fn.terms)
            else:
                flat.append((float(coef), fn))
        return cls(FnKind.AFFINE, 0.0, tuple(flat))

    # -- algebra -----------------------------------------------------------
    def _as_terms(self):
        return self.terms if self.kind is FnKind.AFFINE else ((1.0, self),)

    def __add__(self, other):
        if not isinstance(other, ClosedFormFunction):
            other = ClosedFormFunction.constant(other)
        return ClosedFormFunction.combination(self._as_terms() + other._as_terms())

    __radd__ = __add__

    def __mul__(self, scalar):
        scalar = float(scalar)
        if self.kind is FnKind.CONSTANT:
            return ClosedFormFunction.constant(scalar * self.param)
        return ClosedFormFunction.combination((scalar * c, f) for c, f in self._as_terms())

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other)

    # -- evaluation --------------------------------------------------------
    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        k, p = self.kind, self.param
        if k is FnKind.CONSTANT:
            return np.full_like(x, p)
        if k is FnKind.MONOMIAL:
            return np.ones_like(x) if p == 0 else x ** p
        if k is FnKind.EXPONENTIAL:
            return np.exp(p * x)
        if k is FnKind.SINE:
            return np.sin(p * x)
        if k is FnKind.COSINE:
            return np.cos(p * x)
        out = np.zeros_like(x)
        for coef, fn in self.terms:
            out = out + coef * fn(x)
        return out

    def derivative(self) -> "ClosedFormFunction":
        k, p = self.kind, self.param
        if k is FnKind.CONSTANT or (k is FnKind.MONOMIAL and p == 0):
            return ClosedFormFunction.constant(0.0)
        if k is FnKind.MONOMIAL:
            if p == 1:
                return ClosedFormFunction.constant(1.0)
            return float(p) * ClosedFormFunction.monomial(p - 1)
        if k is FnKind.EXPONENTIAL:
            return p * self
        if k is FnKind.SINE:
            return p * ClosedFormFunction.cosine(p)
        if k is FnKind.COSINE:
            return -p * ClosedFormFunction.sine(p)
        return ClosedFormFunction.combination((c, f.derivative()) for c, f in self.terms)

    def laplace(self) -> RationalLaplaceImage:
        """Exact Laplace image over [0, inf)."""
        k, p = self.kind, self.param
        make = RationalLaplaceImage.make
        if k is FnKind.CONSTANT:
            return make([p], [0.0, 1.0])
        if k is FnKind.MONOMIAL:
            den = np.zeros(p + 2)
            den[-1] = 1.0
            return make([float(math.factorial(p))], den)
        if k is FnKind.EXPONENTIAL:
            return make([1.0], [-p, 1.0])
        if k is FnKind.SINE:
            return make([p], [p * p, 0.0, 1.0])
        if k is FnKind.COSINE:
            return make([0.0, 1.0], [p * p, 0.0, 1.0])
        image = RationalLaplaceImage.constant(0.0)
        for coef, fn in self.terms:
            image = image + coef * fn.laplace()
        return image

    def __str__(self):
        k, p = self.kind, self.param
        if k is FnKind.CONSTANT:
            return repr(p)
        if k is FnKind.MONOMIAL:
            return "1" if p == 0 else ("x" if p == 1 else f"x^{p}")
        if k in (FnKind.EXPONENTIAL, FnKind.SINE, FnKind.COSINE):
            return f"{k.value}({p!r})"
        return " + ".join(f"{c!r}*{f}" for c, f in self.terms) or "0.0"


def sample(f: ClosedFormFunction, grid: Grid) -> SampledFunction:
    with np.errstate(over="ignore", invalid="ignore"):
        values = f(grid.nodes)
    if not np.all(np.isfinite(values)):
        raise NonFiniteSample(f"{f} is not finite on the grid")
    return SampledFunction(grid, values)

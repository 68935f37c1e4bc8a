"""Real rational functions of the Laplace variable ``s``.

Coefficients are stored in ascending powers of ``s`` throughout, matching
:mod:`numpy.polynomial.polynomial`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DegenerateImage

#: absolute tolerance on root locations when cancelling common factors
ROOT_MATCH_TOL = 1e-12


def _trim(c):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(1)
    return c[: nz[-1] + 1].copy()


def _is_zero(c):
    return c.size == 1 and c[0] == 0.0


def _common_root(num, den):
    """Return one root shared by ``num`` and ``den`` (within tolerance), or None."""
    if num.size < 2 or den.size < 2:
        return None
    rn = P.polyroots(num)
    rd = P.polyroots(den)
    for r in rd:
        d = np.abs(rn - r)
        if d.min() <= ROOT_MATCH_TOL:
            return r
    return None


def _divide_out(c, root):
    if abs(root.imag) <= ROOT_MATCH_TOL:
        factor = np.array([-root.real, 1.0])
    else:
        factor = np.array([abs(root) ** 2, -2.0 * root.real, 1.0])
    q, _ = P.polydiv(c, factor)
    return _trim(q)


@dataclass(frozen=True, eq=False)
class RationalLaplaceImage:
    """``numerator(s) / denominator(s)`` with real coefficients.

    Build instances with :meth:`make`, which canonicalizes: zero coefficients
    trimmed, common factors cancelled, denominator made monic.  The raw
    constructor performs no normalization.
    """

    numerator: tuple
    denominator: tuple

    @classmethod
    def make(cls, numerator, denominator) -> "RationalLaplaceImage":
        return cls(tuple(np.atleast_1d(numerator).astype(float)),
                   tuple(np.atleast_1d(denominator).astype(float))).canonical()

    @classmethod
    def constant(cls, value: float) -> "RationalLaplaceImage":
        return cls.make([value], [1.0])

    def canonical(self) -> "RationalLaplaceImage":
        num = _trim(self.numerator)
        den = _trim(self.denominator)
        if _is_zero(den):
            raise DegenerateImage("denominator vanishes identically")
        if _is_zero(num):
            return RationalLaplaceImage((0.0,), (1.0,))
        # exact powers of s first; no root finding needed for those
        k = 0
        while num[k] == 0.0 and den[k] == 0.0:
            k += 1
        num, den = num[k:], den[k:]
        while (r := _common_root(num, den)) is not None:
            num = _divide_out(num, r)
            den = _divide_out(den, r)
        lead = den[-1]
        num = num / lead
        den = den / lead
        return RationalLaplaceImage(tuple(num.tolist()), tuple(den.tolist()))

    @property
    def num_degree(self) -> int:
        return len(_trim(self.numerator)) - 1

    @property
    def den_degree(self) -> int:
        return len(_trim(self.denominator)) - 1

    @property
    def is_zero(self) -> bool:
        return _is_zero(_trim(self.numerator))

    def __call__(self, s):
        s = np.asarray(s)
        return P.polyval(s, self.numerator) / P.polyval(s, self.denominator)

    def __mul__(self, other):
        if isinstance(other, RationalLaplaceImage):
            num = P.polymul(self.numerator, other.numerator)
            den = P.polymul(self.denominator, other.denominator)
            if _is_zero(_trim(den)):
                raise DegenerateImage("denominator vanishes identically after product")
            return RationalLaplaceImage.make(num, den)
        return RationalLaplaceImage.make(np.multiply(self.numerator, float(other)),
                                         self.denominator)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, RationalLaplaceImage):
            other = RationalLaplaceImage.constant(float(other))
        num = P.polyadd(P.polymul(self.numerator, other.denominator),
                        P.polymul(other.numerator, self.denominator))
        den = P.polymul(self.denominator, other.denominator)
        return RationalLaplaceImage.make(num, den)

    __radd__ = __add__

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other)

    def same_as(self, other) -> bool:
        """Bit-for-bit equality of the stored coefficients."""
        return (tuple(self.numerator) == tuple(other.numerator)
                and tuple(self.denominator) == tuple(other.denominator))

    def __repr__(self):
        return f"RationalLaplaceImage(num={list(self.numerator)}, den={list(self.denominator)})"

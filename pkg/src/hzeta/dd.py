"""Double-double arithmetic and compensated summation.

A :class:`DD` value is an unevaluated sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``,
giving roughly 32 significant digits out of two hardware doubles.  Only the
operations needed by the summation kernels are provided.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Dekker product; exact unless ``a * b`` or its error term leaves the normal range."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


class DD:
    __slots__ = ("hi", "lo")

    def __init__(self, hi: float = 0.0, lo: float = 0.0):
        self.hi, self.lo = quick_two_sum(float(hi), float(lo)) if abs(hi) >= abs(lo) else two_sum(hi, lo)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "DD":
        hi = float(q)
        lo = float(Fraction(q) - Fraction(hi)) if math.isfinite(hi) else 0.0
        return cls(hi, lo)

    def __add__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(float(other))
        s, e = two_sum(self.hi, other.hi)
        t, f = two_sum(self.lo, other.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        return DD(*quick_two_sum(s, e))

    __radd__ = __add__

    def __neg__(self) -> "DD":
        return DD(-self.hi, -self.lo)

    def __sub__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(float(other))
        return self + (-other)

    def __rsub__(self, other) -> "DD":
        return DD(float(other)) - self

    def __mul__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(float(other))
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        return DD(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DD":
        if not isinstance(other, DD):
            other = DD(float(other))
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        return DD(*quick_two_sum(q1, q2)) + q3

    def __rtruediv__(self, other) -> "DD":
        return DD(float(other)) / self

    def __float__(self) -> float:
        return self.hi + self.lo

    def __abs__(self) -> "DD":
        return -self if self.hi < 0 else self

    def __lt__(self, other) -> bool:
        other = other if isinstance(other, DD) else DD(float(other))
        return (self.hi, self.lo) < (other.hi, other.lo)

    def __eq__(self, other) -> bool:
        other = other if isinstance(other, DD) else DD(float(other))
        return self.hi == other.hi and self.lo == other.lo

    def __hash__(self):
        return hash((self.hi, self.lo))

    def to_fraction(self) -> Fraction:
        return Fraction(self.hi) + Fraction(self.lo)

    def __repr__(self) -> str:
        return f"DD({self.hi!r}, {self.lo!r})"


def dd_sum(values: Iterable) -> DD:
    """Sum floats or DD values in double-double."""
    acc = DD()
    for v in values:
        acc = acc + v
    return acc


def csum(values, high: bool = False) -> complex | float:
    """Compensated sum of real or complex numbers.

    Double mode uses :func:`math.fsum` per component (correctly rounded);
    high mode accumulates in double-double and rounds once at the end.
    """
    vals = list(values)
    if not vals:
        return 0.0
    is_complex = any(isinstance(v, complex) or getattr(v, "imag", 0) != 0 for v in vals)
    if high:
        re = float(dd_sum(float(getattr(v, "real", v)) for v in vals))
        if not is_complex:
            return re
        return complex(re, float(dd_sum(float(v.imag) for v in vals)))
    re = math.fsum(float(getattr(v, "real", v)) for v in vals)
    if not is_complex:
        return re
    return complex(re, math.fsum(float(v.imag) for v in vals))

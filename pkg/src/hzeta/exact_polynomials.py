"""Exact rational polynomials: Bernoulli and Euler families, derivatives, and
the log-tangent coefficient functionals built on them.

Everything here works on :class:`fractions.Fraction`; no floating point.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .context import DomainError

__all__ = [
    "RationalPolynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "euler_polynomial",
    "derivative",
    "is_antisymmetric",
    "c_coefficient",
    "antisymmetric_bernoulli_decomposition",
    "reconstruct_from_bernoulli",
    "zeta_even_exact",
]

RationalLike = int | Fraction


class RationalPolynomial:
    """Polynomial with :class:`Fraction` coefficients in ascending degree.

    Trailing zeros are stripped, so ``degree`` is ``len(coeffs) - 1`` and the
    zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: RationalLike) -> "RationalPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        # Horner; exact for Fraction/int x, float otherwise
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def compose_affine(self, a: RationalLike, b: RationalLike) -> "RationalPolynomial":
        """Return ``P(a + b x)``."""
        lin = RationalPolynomial([a, b])
        acc = RationalPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reflect(self) -> "RationalPolynomial":
        """Return ``P(1 - x)``."""
        return self.compose_affine(1, -1)

    def to_float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero():
            return "RationalPolynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return "RationalPolynomial(" + " + ".join(terms) + ")"


# Bernoulli numbers ---------------------------------------------------------

_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n with the B_1 = -1/2 convention.

    Filled by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 and memoized.
    """
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative", n)
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        for m in range(len(_bern), n + 1):
            if m > 1 and m % 2 == 1:
                _bern.append(Fraction(0))
                continue
            s = sum(comb(m + 1, k) * _bern[k] for k in range(m))
            _bern.append(-s / (m + 1))
    return _bern[n]


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x) = sum_k C(n, k) B_k x^{n-k}."""
    if n < 0:
        raise DomainError("degree must be nonnegative", n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return RationalPolynomial(coeffs)


def euler_polynomial(n: int) -> RationalPolynomial:
    """E_n(x) = 2/(n+1) * (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))."""
    if n < 0:
        raise DomainError("degree must be nonnegative", n)
    b = bernoulli_polynomial(n + 1)
    half = b.compose_affine(0, Fraction(1, 2))
    return (b - half * 2 ** (n + 1)) * Fraction(2, n + 1)


def derivative(p: RationalPolynomial, k: int = 1) -> RationalPolynomial:
    if k < 0:
        raise DomainError("derivative order must be nonnegative", k)
    cs = list(p.coeffs)
    for _ in range(k):
        if not cs:
            break
        cs = [i * c for i, c in enumerate(cs)][1:]
    return RationalPolynomial(cs)


def is_antisymmetric(p: RationalPolynomial) -> bool:
    """Exact test of P(1 - x) = -P(x)."""
    return (p.reflect() + p).is_zero()


def c_coefficient(p: RationalPolynomial, k: int) -> Fraction:
    """(1 - 2^{-(2k+1)}) (P^{(2k-1)}(1) + P^{(2k-1)}(0)) for 1 <= k <= (deg P + 1) // 2."""
    kmax = (p.degree + 1) // 2
    if not 1 <= k <= kmax:
        raise DomainError(f"k={k} outside 1..{kmax} for a degree-{p.degree} polynomial", k)
    d = derivative(p, 2 * k - 1)
    return (1 - Fraction(1, 2 ** (2 * k + 1))) * (d(Fraction(1)) + d(Fraction(0)))


def antisymmetric_bernoulli_decomposition(p: RationalPolynomial) -> list[Fraction]:
    """Coefficients lam_1..lam_m with P = sum_k lam_k B_{2k-1}(x).

    For antisymmetric P of degree 2m-1, lam_k = -2 P^{(2k-2)}(0) / (2k-1)!.
    The result is checked by exact reconstruction before it is returned.
    """
    if p.is_zero():
        return []
    if not is_antisymmetric(p):
        raise DomainError("polynomial does not satisfy P(1-x) = -P(x)", p)
    m = (p.degree + 1) // 2
    lam = [
        -2 * derivative(p, 2 * k - 2)(Fraction(0)) / factorial(2 * k - 1)
        for k in range(1, m + 1)
    ]
    if reconstruct_from_bernoulli(lam) != p:  # pragma: no cover - guarded identity
        raise ArithmeticError("Bernoulli decomposition failed exact reconstruction")
    return lam


def reconstruct_from_bernoulli(lam: Sequence[RationalLike]) -> RationalPolynomial:
    acc = RationalPolynomial()
    for k, c in enumerate(lam, start=1):
        acc = acc + bernoulli_polynomial(2 * k - 1) * Fraction(c)
    return acc


def zeta_even_exact(n: int) -> Fraction:
    """Rational r_n with zeta(2n) = r_n pi^{2n}; r_0 = -1/2."""
    if n < 0:
        raise DomainError("n must be nonnegative", n)
    b = bernoulli_number(2 * n)
    return (-1) ** (n + 1) * b * Fraction(2 ** (2 * n - 1) if n else Fraction(1, 2)) / factorial(2 * n)

"""Harmonic and odd-harmonic numbers and the Euler-type sums built from them.

Every infinite sum is a direct partial sum plus a tail computed from the
asymptotic expansion of its summand (see :mod:`hzeta.asymptotics`), with the
first omitted correction reported as the error estimate.
"""

from __future__ import annotations

import cmath
import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import asymptotics as asy
from .context import AccuracyError, DomainError, PoleError, PrecisionContext, resolve
from .dd import DD, csum, dd_sum
from .exact_polynomials import zeta_even_exact
from .special_functions import euler_gamma, riemann_zeta

__all__ = [
    "HarmonicCache",
    "TailModel",
    "SeriesResult",
    "h",
    "harmonic",
    "h_float",
    "harmonic_float",
    "zeta_h_series",
    "weighted_h_sum",
    "generating_function_lhs",
    "generating_function_rhs",
    "w_coefficient",
    "c_coefficient_series",
    "w_function",
    "w_values",
    "w_function_bound",
    "h_kernel_sum",
    "classical_euler_sums",
    "WEIGHTS",
]

EXACT_CACHE_LIMIT = 100_000
_ASYMPTOTIC_FROM = 30
_EM_DEPTH = 10


class HarmonicCache:
    """Grow-only exact tables of H_n and h_n, guarded by a lock on append."""

    def __init__(self, limit: int = EXACT_CACHE_LIMIT):
        self.limit = limit
        self.H: list[Fraction] = [Fraction(0)]
        self.h: list[Fraction] = [Fraction(0)]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        if n > self.limit:
            raise DomainError(f"exact harmonic cache is capped at n={self.limit}", n)
        with self._lock:
            for k in range(len(self.H), 2 * n + 1):
                self.H.append(self.H[-1] + Fraction(1, k))
            for k in range(len(self.h), n + 1):
                self.h.append(self.h[-1] + Fraction(1, 2 * k - 1))

    def harmonic(self, n: int) -> Fraction:
        if n >= len(self.H):
            self._grow((n + 1) // 2 + 1)
        return self.H[n]

    def odd_harmonic(self, n: int) -> Fraction:
        if n >= len(self.h):
            self._grow(n)
        return self.h[n]


_CACHE = HarmonicCache()


def h(n: int) -> Fraction:
    """Odd harmonic number h_n = 1 + 1/3 + ... + 1/(2n - 1), exact."""
    if n < 1:
        raise DomainError("h_n needs n >= 1", n)
    return _CACHE.odd_harmonic(n)


def harmonic(n: int) -> Fraction:
    """Harmonic number H_n, exact."""
    if n < 1:
        raise DomainError("H_n needs n >= 1", n)
    return _CACHE.harmonic(n)


@dataclass(frozen=True)
class TailModel:
    kind: str  # "euler_maclaurin" | "geometric" | "oscillatory_cesaro" | "euler_boole" | "residue_classes"
    bound: float


class SeriesResult(NamedTuple):
    value: float | complex
    error: float
    tail: TailModel


def _h_expansion() -> asy.Expansion:
    return asy.odd_harmonic_expansion(euler_gamma())


def _H_expansion() -> asy.Expansion:
    return asy.harmonic_expansion(euler_gamma())


def h_float(n) -> np.ndarray:
    """h_n as floats for an integer array; exact prefix, asymptotic beyond n = 30."""
    n = np.asarray(n, dtype=np.int64)
    out = np.empty(n.shape, dtype=float)
    small = n < _ASYMPTOTIC_FROM
    if np.any(small):
        table = np.array([float(h(k)) if k else 0.0 for k in range(_ASYMPTOTIC_FROM)])
        out[small] = table[n[small]]
    big = ~small
    if np.any(big):
        x = n[big].astype(float)
        g = euler_gamma()
        inv2 = 1.0 / (x * x)
        corr = np.zeros_like(x)
        p = inv2.copy()
        for k in range(1, 10):
            corr += asy._a_coeff(k) * p
            p *= inv2
        out[big] = 0.5 * np.log(x) + math.log(2) + 0.5 * g + 0.5 * corr
    return out


def harmonic_float(n) -> np.ndarray:
    n = np.asarray(n, dtype=np.int64)
    out = np.empty(n.shape, dtype=float)
    small = n < _ASYMPTOTIC_FROM
    if np.any(small):
        table = np.array([float(harmonic(k)) if k else 0.0 for k in range(_ASYMPTOTIC_FROM)])
        out[small] = table[n[small]]
    big = ~small
    if np.any(big):
        from .exact_polynomials import bernoulli_number

        x = n[big].astype(float)
        inv2 = 1.0 / (x * x)
        corr = np.zeros_like(x)
        p = inv2.copy()
        for k in range(1, 10):
            corr -= float(bernoulli_number(2 * k)) / (2 * k) * p
            p *= inv2
        out[big] = np.log(x) + euler_gamma() + 0.5 / x + corr
    return out


def _direct(terms: np.ndarray, ctx: PrecisionContext):
    return csum(terms.tolist(), high=ctx.high)


def _cutoff(s: complex, base: int = 120) -> int:
    return max(base, int(4 * abs(s)))


def _powers(n: np.ndarray, s: complex) -> np.ndarray:
    if isinstance(s, complex) and s.imag != 0:
        return np.exp(-s * np.log(n))
    return n ** (-float(s.real))


def _finish(s, v: complex):
    if isinstance(s, (int, float, Fraction, np.integer, np.floating)):
        return float(complex(v).real)
    return complex(v)


def _result(s, value, err, kind, full):
    value = _finish(s, value)
    if full:
        return SeriesResult(value, err, TailModel(kind, err))
    return value


def zeta_h_series(s, ctx: PrecisionContext | None = None, full: bool = False, continued: bool = False):
    """zeta_h(s) = sum h_n n^(-s) for Re s > 1.05.

    Direct sum to N = max(120, 4|s|) with exact h_n, then an Euler-Maclaurin
    tail on h(x) x^(-s), h(x) = (psi(x + 1/2) - psi(1/2)) / 2.

    ``continued=True`` keeps the same formula for Re s <= 1.05, where the
    tail integral is read as its analytic continuation.  The partial sum then
    grows like N^(1 - Re s), so the error estimate includes a rounding bound.
    """
    ctx = resolve(ctx)
    z = complex(s)
    if continued:
        if z == 1:
            raise PoleError("zeta_h has a pole at s=1", 1.0)
        n_cut = _cutoff(z)
        n = np.arange(1, n_cut + 1)
        terms = h_float(n) * _powers(n.astype(float), z)
        head_v = _direct(terms, ctx)
        tail, err = _h_expansion().shift(z).em_tail(n_cut + 1, depth=_EM_DEPTH, continued=True)
        value = head_v + tail
        rounding = 4 * 2.0**-52 * (float(np.abs(terms).sum()) + abs(tail))
        return _result(s, value, err + rounding, "euler_maclaurin", full)
    if z.real <= 1.05:
        raise DomainError(
            "series needs Re s > 1.05; use hzeta.continuation.zeta_h for the continuation", s
        )
    n_cut = _cutoff(z)
    if ctx.high and z.imag == 0 and z.real == int(z.real):
        p = int(z.real)
        head = dd_sum(DD.from_fraction(h(k) / Fraction(k) ** p) for k in range(1, n_cut + 1))
        head_v = float(head)
        head_lo = head.lo
    else:
        n = np.arange(1, n_cut + 1)
        head_v = _direct(h_float(n) * _powers(n.astype(float), z), ctx)
        head_lo = 0.0
    tail, err = _h_expansion().shift(z).em_tail(n_cut + 1, depth=_EM_DEPTH)
    value = head_v + tail + head_lo if ctx.high else head_v + tail
    return _result(s, value, err + 1e-17 * abs(value), "euler_maclaurin", full)


WEIGHTS = ("cos", "alternating", "even_indices", "odd_indices", "squared")


def _rational_period(r: float, max_den: int = 64) -> Fraction | None:
    q = Fraction(r).limit_denominator(max_den)
    return q if abs(float(q) - r) < 1e-15 else None


def weighted_h_sum(
    weight: str,
    s: float = 2.0,
    r: float | None = None,
    ctx: PrecisionContext | None = None,
    full: bool = False,
):
    """Euler-type sums of h_n with the weights that occur in the log-tangent identities.

    ``cos``           sum h_n cos(4 pi r n) / n^s, 0 <= r <= 1/4
    ``alternating``   sum (-1)^n h_n / n^s
    ``even_indices``  sum_{n>=1} h_{2n} / n^s
    ``odd_indices``   sum_{n>=0} h_{2n+1} / (2n+1)^s
    ``squared``       sum h_n^2 / n^s

    Rational r with denominator <= 64 makes the cosine weight periodic and
    the sum splits into residue classes, each with an Euler-Maclaurin tail.
    Other r use the Euler-Boole expansion of the oscillatory tail.
    """
    ctx = resolve(ctx)
    if weight not in WEIGHTS:
        raise DomainError(f"unsupported weight {weight!r}", weight)
    if s < 2:
        raise DomainError("weighted sums are supported for s >= 2", s)
    hx = _h_expansion()
    n_cut = _cutoff(complex(s), 200)

    if weight == "squared":
        n = np.arange(1, n_cut + 1)
        head = _direct(h_float(n) ** 2 / n.astype(float) ** s, ctx)
        tail, err = (hx * hx).shift(s).em_tail(n_cut + 1, depth=_EM_DEPTH)
        return _result(s, head + tail, err, "euler_maclaurin", full)

    if weight == "even_indices":
        n = np.arange(1, n_cut + 1)
        head = _direct(h_float(2 * n) / n.astype(float) ** s, ctx)
        tail, err = hx.rescale(2.0).shift(s).em_tail(n_cut + 1, depth=_EM_DEPTH)
        return _result(s, head + tail, err, "euler_maclaurin", full)

    if weight == "odd_indices":
        val, err = _progression(hx.shift(s), 1, 2, n_cut, s, ctx)
        return _result(s, val, err, "euler_maclaurin", full)

    if weight == "alternating":
        even, e1 = weighted_h_sum("even_indices", s, ctx=ctx, full=True)[:2]
        odd, e2 = weighted_h_sum("odd_indices", s, ctx=ctx, full=True)[:2]
        return _result(s, 2.0**-s * even - odd, e1 + e2, "euler_maclaurin", full)

    # cosine weight
    if r is None or not 0 <= r <= 0.25:
        raise DomainError("cosine weight needs 0 <= r <= 1/4", r)
    if r == 0:
        return zeta_h_series(s, ctx, full=full)
    theta = 4 * math.pi * r
    q = _rational_period(r)
    if q is not None:
        period = q.denominator
        total = 0.0
        err = 0.0
        for j in range(1, period + 1):
            c = math.cos(theta * j)
            if abs(c) < 1e-15:
                continue
            v, e = _progression(hx.shift(s), j, period, n_cut, s, ctx)
            total += c * v
            err += abs(c) * e
        return _result(s, total, err, "residue_classes", full)
    n = np.arange(1, n_cut + 1)
    head = _direct(h_float(n) * np.cos(theta * n) / n.astype(float) ** s, ctx)
    tail, err = hx.shift(s).oscillatory_tail(n_cut + 1, cmath.exp(1j * theta))
    if n_cut * min(theta, 2 * math.pi - theta) < 20:
        raise AccuracyError("cosine weight too close to 0 for the oscillatory tail", head, err)
    return _result(s, head + tail.real, err, "euler_boole", full)


def _progression(exp: asy.Expansion, start: int, step: int, n_cut: int, s, ctx):
    """sum_{m>=0} F(start + m*step) with F(n) = h_n n^(-s): direct below n_cut, EM tail above."""
    n = np.arange(start, n_cut + 1, step)
    head = _direct(h_float(n) / n.astype(float) ** s, ctx) if n.size else 0.0
    nxt = int(n[-1]) + step if n.size else start
    tail, err = exp.em_tail(nxt, step=step, depth=_EM_DEPTH)
    return head + tail.real, err


def generating_function_lhs(x: float, ctx: PrecisionContext | None = None) -> float:
    """sum_{k>=1} h_k x^(2k) / k by direct summation with a geometric tail bound."""
    ctx = resolve(ctx)
    if abs(x) > 0.99:
        raise AccuracyError("power series too slow for |x| > 0.99", None, None)
    if x == 0:
        return 0.0
    x2 = x * x
    terms = []
    k = 1
    hk = 0.0
    pw = 1.0
    target = max(ctx.tol_abs * 1e-3, 1e-300)
    while True:
        hk += 1.0 / (2 * k - 1)
        pw *= x2
        terms.append(hk * pw / k)
        bound = hk / k * pw * x2 / (1 - x2)
        if bound < target * 1e-3 or k > ctx.max_terms:
            break
        k += 1
    return csum(terms, high=ctx.high)


def generating_function_rhs(x: float) -> float:
    return 0.25 * math.log((1 + x) / (1 - x)) ** 2


def w_coefficient(n: int) -> Fraction:
    """w_n = (-1)^n / n (2^(2n-1) - 1) r_n; coefficient of x^(2n) in (log tanh x - log x) / 2."""
    if n < 1:
        raise DomainError("w_n needs n >= 1", n)
    return Fraction((-1) ** n, n) * (2 ** (2 * n - 1) - 1) * zeta_even_exact(n)


def c_coefficient_series(n: int) -> Fraction:
    """c_n = sum_{k=1}^{n-1} w_k w_{n-k}."""
    if n < 2:
        raise DomainError("c_n needs n >= 2", n)
    return (-1) ** n * sum(
        Fraction((2 ** (2 * k - 1) - 1) * (2 ** (2 * n - 2 * k - 1) - 1), k * (n - k))
        * zeta_even_exact(k)
        * zeta_even_exact(n - k)
        for k in range(1, n)
    )


def h_kernel_sum(b, ctx: PrecisionContext | None = None, full: bool = False):
    """sum_{n>=1} h_n / (n^2 + b) for complex b off the poles b = -n^2."""
    ctx = resolve(ctx)
    b = complex(b)
    n_cut = max(120, int(4 * math.sqrt(abs(b))) + 1)
    n = np.arange(1, n_cut + 1, dtype=float)
    den = n * n + b
    if np.any(np.abs(den) < 1e-12 * n * n):
        k = int(np.argmin(np.abs(den))) + 1
        raise PoleError(f"h_n/(n^2 + b) has a pole at b = -{k}^2", -(k**2))
    head = _direct(h_float(n.astype(np.int64)) / den, ctx)
    tail, err = (_h_expansion() * asy.inverse_quadratic(b)).em_tail(n_cut + 1, depth=_EM_DEPTH)
    val = head + tail
    if b.imag == 0:
        val = complex(val).real
    if full:
        return SeriesResult(val, err, TailModel("euler_maclaurin", err))
    return val


def w_function(y: float, ctx: PrecisionContext | None = None) -> float:
    """w(y) = sum h_n / (n^2 + (y / 2 pi)^2), y >= 0."""
    if y < 0:
        raise DomainError("w(y) needs y >= 0", y)
    return float(h_kernel_sum((y / (2 * math.pi)) ** 2, ctx))


_W_CUT = 400
_W_POWERS = 8


@functools.cache
def _w_tail_moments() -> tuple[float, ...]:
    # sum_{n > N} h_n n^(-2j-2), j = 0.._W_POWERS-1
    hx = _h_expansion()
    return tuple(float(hx.shift(2 * j + 2).em_tail(_W_CUT + 1, depth=_EM_DEPTH)[0].real) for j in range(_W_POWERS))


@functools.cache
def _w_head_table() -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(1, _W_CUT + 1)
    return n.astype(float) ** 2, h_float(n)


def w_values(y) -> np.ndarray:
    """Vectorized w(y) for 0 <= y <= 2 pi * 40.

    Direct sum over n <= 400; the tail is expanded in b = (y / 2 pi)^2 as
    sum_j (-b)^j sum_{n>400} h_n n^(-2j-2) with Euler-Maclaurin moments.
    """
    y = np.asarray(y, dtype=float)
    b = (y / (2 * math.pi)) ** 2
    if np.any(b > 1600):
        raise DomainError("w_values supports y <= 80 pi", float(y.max()))
    n2, hn = _w_head_table()
    flat = b.reshape(-1)
    head = (hn[None, :] / (n2[None, :] + flat[:, None])).sum(axis=1)
    tail = np.zeros_like(flat)
    pw = np.ones_like(flat)
    for mom in _w_tail_moments():
        tail += pw * mom
        pw *= -flat
    return (head + tail).reshape(b.shape)


def w_function_bound(n_cut: int) -> float:
    """Integral-comparison bound on sum_{n > N} h_n / (n^2 + b), valid for every b >= 0."""
    # h_n <= (log 4n + gamma)/2 + 1/(48 n^2) and 1/(n^2 + b) <= 1/n^2
    return (math.log(4 * n_cut) + euler_gamma() + 2) / (2 * n_cut)


def classical_euler_sums(kind: str, m: int, ctx: PrecisionContext | None = None) -> tuple[float, float]:
    """Both sides of a classical identity.

    ``euler_Hn``            2 sum H_n/n^m = (m+2) zeta(m+1) - sum_{k=1}^{m-2} zeta(k+1) zeta(m-k), m >= 2
    ``georghiou_philippou`` sum H_n/n^(2m+1) = 1/2 sum_{k=2}^{2m} (-1)^k zeta(k) zeta(2m+2-k), m >= 1
    ``zeta_even_recursion`` (2m+1) zeta(2m) = 2 sum_{k=1}^{m-1} zeta(2k) zeta(2m-2k), m >= 2
    """
    ctx = resolve(ctx)
    if kind == "euler_Hn":
        if m < 2:
            raise DomainError("euler_Hn needs m >= 2", m)
        lhs = 2 * _harmonic_sum(m, ctx)
        rhs = (m + 2) * riemann_zeta(m + 1) - math.fsum(
            riemann_zeta(k + 1) * riemann_zeta(m - k) for k in range(1, m - 1)
        )
        return lhs, rhs
    if kind == "georghiou_philippou":
        if m < 1:
            raise DomainError("georghiou_philippou needs m >= 1", m)
        lhs = _harmonic_sum(2 * m + 1, ctx)
        rhs = 0.5 * math.fsum(
            (-1) ** k * riemann_zeta(k) * riemann_zeta(2 * m + 2 - k) for k in range(2, 2 * m + 1)
        )
        return lhs, rhs
    if kind == "zeta_even_recursion":
        if m < 2:
            raise DomainError("zeta_even_recursion needs m >= 2", m)
        lhs = (2 * m + 1) * riemann_zeta(2 * m)
        rhs = 2 * math.fsum(
            float(zeta_even_exact(k) * zeta_even_exact(m - k)) * math.pi ** (2 * m)
            for k in range(1, m)
        )
        return lhs, rhs
    raise DomainError(f"unknown classical identity {kind!r}", kind)


def _harmonic_sum(m: int, ctx: PrecisionContext) -> float:
    n_cut = 200
    n = np.arange(1, n_cut + 1)
    head = _direct(harmonic_float(n) / n.astype(float) ** m, ctx)
    tail, _ = _H_expansion().shift(m).em_tail(n_cut + 1, depth=_EM_DEPTH)
    return head + tail.real

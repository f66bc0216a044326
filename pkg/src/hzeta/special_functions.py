"""Complex Gamma, digamma, Riemann and Hurwitz zeta, unit-circle polylogarithm
and the constants gamma and Catalan, in hardware double precision.

Scalar real arguments give ``float`` results where the function is real on
the real line; everything else is ``complex``.  ``hurwitz_zeta`` and
``polylog_unit_circle`` also accept NumPy arrays for the real argument, which
is what the quadrature kernels feed them.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .context import DomainError, PoleError, PrecisionContext, resolve
from .exact_polynomials import bernoulli_number, bernoulli_polynomial, zeta_even_exact

__all__ = [
    "Constants",
    "constants",
    "gamma",
    "rgamma",
    "loggamma",
    "digamma",
    "riemann_zeta",
    "hurwitz_zeta",
    "zeta_even_exact",
    "polylog_unit_circle",
    "polylog_unit_circle_direct",
    "euler_gamma",
    "catalan_constant",
    "sinpi",
    "cospi",
]

_LOG_2PI = math.log(2 * math.pi)
_STIRLING_THRESHOLD = 20.0
_EPS = 2.2e-16


@functools.cache
def _b_float(n: int) -> float:
    return float(bernoulli_number(n))


@functools.cache
def _b2k_over_2k_fact(k: int) -> float:
    return float(bernoulli_number(2 * k) / factorial(2 * k))


def _is_real(s) -> bool:
    return isinstance(s, (int, float, Fraction, np.integer, np.floating))


def _nonpositive_integer(s: complex) -> int | None:
    if s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real):
        return int(s.real)
    return None


def _finish(s, value: complex):
    return value.real if _is_real(s) else value


def sinpi(z):
    """sin(pi z) with exact zeros at the integers."""
    z = complex(z)
    n = round(z.real)
    w = complex(z.real - n, z.imag)
    v = cmath.sin(math.pi * w)
    return -v if n % 2 else v


def cospi(z):
    """cos(pi z) with exact zeros at the half-integers."""
    z = complex(z)
    n = round(z.real)
    w = complex(z.real - n, z.imag)
    if w.imag == 0 and abs(w.real) == 0.5:
        return 0j
    v = cmath.cos(math.pi * w)
    return -v if n % 2 else v


# Gamma ----------------------------------------------------------------------


def _stirling_lgamma(z: complex) -> complex:
    """log Gamma(z) for |z| >= 20 by Stirling's series, stopped at the smallest term."""
    acc = (z - 0.5) * cmath.log(z) - z + 0.5 * _LOG_2PI
    zinv = 1 / z
    zinv2 = zinv * zinv
    p = zinv
    prev = math.inf
    for k in range(1, 40):
        term = _b_float(2 * k) / (2 * k * (2 * k - 1)) * p
        if abs(term) >= prev:
            break
        acc += term
        if abs(term) < _EPS * 1e-2 * abs(acc):
            break
        prev = abs(term)
        p *= zinv2
    return acc


def loggamma(s) -> complex:
    """log Gamma(s) continued from the positive axis (Re s >= 1/2 only)."""
    z = complex(s)
    if z.real < 0.5:
        raise DomainError("loggamma is provided for Re s >= 1/2 only", s)
    shift = 0
    prod = 1 + 0j
    while abs(z + shift) < _STIRLING_THRESHOLD or (z + shift).real < _STIRLING_THRESHOLD / 2:
        prod *= z + shift
        shift += 1
    return _stirling_lgamma(z + shift) - cmath.log(prod)


def _gamma_right(z: complex) -> complex:
    shift = 0
    prod = 1 + 0j
    while abs(z + shift) < _STIRLING_THRESHOLD or (z + shift).real < _STIRLING_THRESHOLD / 2:
        prod *= z + shift
        shift += 1
    return cmath.exp(_stirling_lgamma(z + shift)) / prod


def gamma(s, ctx: PrecisionContext | None = None):
    """Gamma function; reflection formula for Re s < 1/2.

    Raises :class:`PoleError` at the nonpositive integers.
    """
    z = complex(s)
    n = _nonpositive_integer(z)
    if n is not None:
        raise PoleError(f"Gamma has a pole at s={n}", n)
    if z.imag == 0 and z.real == math.floor(z.real) and 0 < z.real <= 170:
        return _finish(s, complex(float(factorial(int(z.real) - 1))))
    if z.real < 0.5:
        val = math.pi / (sinpi(z) * _gamma_right(1 - z))
    else:
        val = _gamma_right(z)
    return _finish(s, val)


def rgamma(s):
    """Reciprocal Gamma, entire; exactly zero at the nonpositive integers."""
    z = complex(s)
    if _nonpositive_integer(z) is not None:
        return _finish(s, 0j)
    if z.real < 0.5:
        val = sinpi(z) * _gamma_right(1 - z) / math.pi
    else:
        val = 1 / _gamma_right(z)
    return _finish(s, val)


# Digamma --------------------------------------------------------------------


def digamma(s, ctx: PrecisionContext | None = None):
    """psi(s) by upward recurrence to Re s >= 20 and the asymptotic series."""
    z = complex(s)
    n = _nonpositive_integer(z)
    if n is not None:
        raise PoleError(f"digamma has a pole at s={n}", n)
    shift = max(0, math.ceil(_STIRLING_THRESHOLD - z.real))
    corr = [1 / (z + k) for k in range(shift)]
    w = z + shift
    winv2 = 1 / (w * w)
    acc = cmath.log(w) - 0.5 / w
    p = winv2
    prev = math.inf
    for k in range(1, 30):
        term = _b_float(2 * k) / (2 * k) * p
        if abs(term) >= prev:
            break
        acc -= term
        if abs(term) < _EPS * 1e-2 * abs(acc):
            break
        prev = abs(term)
        p *= winv2
    if corr:
        acc -= complex(math.fsum(c.real for c in corr), math.fsum(c.imag for c in corr))
    return _finish(s, acc)


# Hurwitz and Riemann zeta --------------------------------------------------


def _em_cutoff(z: complex) -> int:
    if z.real >= 0:
        return max(50, math.ceil(abs(z.imag)))
    # keep the direct sum small left of the axis: it grows like N^(1 - Re s)
    return max(4, math.ceil(abs(z.imag)), math.ceil(abs(z) / 4))


# Euler-Maclaurin loses about |s| log10(4) digits to cancellation left of here
_FOURIER_RE_S = -4.0


def _hurwitz_fourier(z: complex, xa: np.ndarray) -> np.ndarray:
    """zeta(1 - q, x) = Gamma(q)/(2 pi)^q [e^{-i pi q/2} F(x) + e^{i pi q/2} F(-x)],
    F(x) = sum e^{2 pi i n x} / n^q, for Re q >= 5 and x > 0."""
    q = 1 - z
    # n^(1 - Re q)/(Re q - 1) below 1e-18 relative to the O(1) bracket
    n_cut = max(16, math.ceil((1e18 / (q.real - 1)) ** (1 / (q.real - 1))))
    n = np.arange(1, n_cut + 1, dtype=float)
    nq = np.exp(-q * np.log(n))
    k = np.maximum(np.ceil(xa) - 1, 0)
    frac = xa - k
    phase = np.exp(2j * np.pi * np.outer(frac, n))
    f_plus = phase @ nq
    f_minus = phase.conj() @ nq
    pref = cmath.exp(loggamma(q) - q * _LOG_2PI)
    total = pref * (cmath.exp(-0.5j * math.pi * q) * f_plus + cmath.exp(0.5j * math.pi * q) * f_minus)
    # zeta(s, x) = zeta(s, frac) - sum_{j<k} (frac + j)^(-s) for x > 1
    for i in np.nonzero(k)[0]:
        j = np.arange(int(k[i]), dtype=float) + frac[i]
        total[i] -= np.exp(-z * np.log(j)).sum()
    return total


def hurwitz_zeta(s, x, ctx: PrecisionContext | None = None):
    """Hurwitz zeta(s, x) = sum_{n>=0} (n + x)^(-s).

    Euler-Maclaurin for Re s > -4; further left, where its partial sums
    cancel, Hurwitz's Fourier formula.  ``x`` may be a positive float or an
    array of positive floats.  Valid on the whole s-plane except s = 1.
    """
    z = complex(s)
    if z == 1:
        raise PoleError("Hurwitz zeta has a pole at s=1 (residue 1)", 1)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0) or not np.all(np.isfinite(xa)):
        raise DomainError("Hurwitz zeta needs x > 0", x)
    scalar = xa.ndim == 0
    xa = np.atleast_1d(xa)

    if z.real <= _FOURIER_RE_S:
        total = _hurwitz_fourier(z, xa)
        if scalar:
            val = complex(total[0])
            return val.real if _is_real(s) else val
        return total.real if _is_real(s) else total

    n_cut = _em_cutoff(z)
    n = np.arange(n_cut, dtype=float)
    base = xa[:, None] + n[None, :]
    terms = np.exp(-z * np.log(base))
    # fsum-quality partial sums matter little here; pairwise summation is plenty
    total = terms.sum(axis=1)
    a = xa + n_cut
    loga = np.log(a)
    a_pow = np.exp(-z * loga)  # a^-s
    total = total + a_pow * a / (z - 1) + 0.5 * a_pow
    t = z * a_pow / a  # s * a^(-s-1)
    inv_a2 = 1.0 / (a * a)
    prev = np.full(a.shape, np.inf)
    for k in range(1, 31):
        term = _b2k_over_2k_fact(k) * t
        mag = np.abs(term)
        total = total + np.where(mag < prev, term, 0)
        if np.all(mag <= _EPS * 1e-2 * np.abs(total)) or np.all(mag >= prev):
            break
        prev = np.minimum(prev, mag)
        t = t * (z + 2 * k - 1) * (z + 2 * k) * inv_a2
    if scalar:
        val = complex(total[0])
        return val.real if (_is_real(s)) else val
    if _is_real(s):
        return total.real
    return total


def riemann_zeta(s, ctx: PrecisionContext | None = None):
    """Riemann zeta(s); functional equation for Re s < 0, zeta(0) = -1/2."""
    z = complex(s)
    if z == 1:
        raise PoleError("zeta has a pole at s=1 (residue 1)", 1)
    if z == 0:
        return _finish(s, complex(-0.5))
    if z.imag == 0 and z.real == math.floor(z.real) and z.real < 0:
        k = int(-z.real)
        if k % 2 == 0:
            return _finish(s, 0j)
        return _finish(s, complex(float(-bernoulli_number(k + 1) / (k + 1))))
    if z.imag == 0 and z.real == math.floor(z.real) and z.real >= 2 and int(z.real) % 2 == 0:
        k = int(z.real) // 2
        return _finish(s, complex(float(zeta_even_exact(k)) * math.pi ** (2 * k)))
    if z.real < 0:
        w = 1 - z
        val = 2**z * math.pi ** (z - 1) * sinpi(z / 2) * gamma(w) * hurwitz_zeta(w, 1.0)
        return _finish(s, complex(val))
    if z.imag == 0 and z.real > 60:
        # 1 + 2^-s + 3^-s suffices far right
        return _finish(s, complex(1 + 2.0 ** -z.real + 3.0 ** -z.real + 4.0 ** -z.real))
    return _finish(s, complex(hurwitz_zeta(z, 1.0)))


# Polylogarithm on the unit circle --------------------------------------------


@functools.cache
def _polylog_coeffs(m: int, kmax: int) -> tuple[float, ...]:
    """zeta(m - k) / k! for k = 0..kmax (entry k = m - 1 unused)."""
    out = []
    for k in range(kmax + 1):
        j = m - k
        if k == m - 1:
            out.append(0.0)
        elif j >= 2:
            out.append(float(riemann_zeta(j)) / math.factorial(k))
        elif j == 0:
            out.append(-0.5 / math.factorial(k))
        else:
            q = -j  # zeta(-q) = -B_{q+1}/(q+1)
            out.append(float(-bernoulli_number(q + 1) / (q + 1) / math.factorial(k)))
    return tuple(out)


def polylog_unit_circle(m: int, theta, ctx: PrecisionContext | None = None):
    """Li_m(e^{i theta}) = sum_{k>=1} e^{i k theta} / k^m for integer m >= 2.

    The real part (even m) or imaginary part (odd m) comes from the Bernoulli
    polynomial closed form; the other part from the expansion of Li_m(e^mu)
    about mu = 0 after reducing theta to [-pi, pi].
    """
    if int(m) != m or m < 2:
        raise DomainError("polylog_unit_circle needs integer m >= 2", m)
    m = int(m)
    th = np.asarray(theta, dtype=float)
    scalar = th.ndim == 0
    th = np.atleast_1d(th)
    red = th - 2 * np.pi * np.round(th / (2 * np.pi))
    mu = 1j * red
    kmax = m + 70
    coeffs = _polylog_coeffs(m, kmax)
    acc = np.zeros(th.shape, dtype=complex)
    powk = np.ones(th.shape, dtype=complex)
    for k in range(kmax + 1):
        if k != m - 1:
            term = coeffs[k] * powk
            acc += term
            if coeffs[k] != 0 and k > m + 2 and np.all(np.abs(term) < 1e-18 * np.maximum(np.abs(acc), 1e-300)):
                break
        powk = powk * mu
    nz = red != 0
    harm = math.fsum(1.0 / j for j in range(1, m))
    with np.errstate(divide="ignore", invalid="ignore"):
        logm = np.log(np.abs(red)) - 0.5j * np.pi * np.sign(red)
        sing = mu ** (m - 1) / math.factorial(m - 1) * (harm - logm)
    acc = np.where(nz, acc + np.where(nz, sing, 0), float(riemann_zeta(m)))

    # closed-form component on x = theta / 2pi in [0, 1)
    x = np.mod(th, 2 * np.pi) / (2 * np.pi)
    poly = bernoulli_polynomial(m).to_float_coeffs()
    bx = np.polynomial.polynomial.polyval(x, poly)
    p = m // 2
    if m % 2 == 0:
        re = (-1) ** (p - 1) * (2 * np.pi) ** m / (2 * math.factorial(m)) * bx
        acc = re + 1j * acc.imag
    else:
        im = (-1) ** (p - 1) * (2 * np.pi) ** m / (2 * math.factorial(m)) * bx
        im = np.where(x == 0, 0.0, im)
        acc = acc.real + 1j * im
    return complex(acc[0]) if scalar else acc


def polylog_unit_circle_direct(m: int, theta: float, n_terms: int = 100_000) -> tuple[complex, float]:
    """Direct partial sum of Li_m(e^{i theta}) and the bound 1/((m-1) N^(m-1)) on the tail."""
    if int(m) != m or m < 2:
        raise DomainError("polylog_unit_circle needs integer m >= 2", m)
    k = np.arange(1, n_terms + 1, dtype=float)
    phase = np.exp(1j * theta * k)
    terms = phase / k**m
    val = complex(math.fsum(terms.real[::-1]), math.fsum(terms.imag[::-1]))
    return val, 1.0 / ((m - 1) * n_terms ** (m - 1))


# Constants ------------------------------------------------------------------


@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    catalan: float
    pi: float


@functools.cache
def euler_gamma(ctx: PrecisionContext | None = None) -> float:
    """Euler-Mascheroni constant from H_N - log N and its Euler-Maclaurin correction.

    N = 16 so log N = 4 log 2, with log 2 = sum 1/(k 2^k) kept as a rational;
    the result is rounded once.
    """
    n = 16
    log2 = sum(Fraction(1, k * 2**k) for k in range(1, 80))
    h = sum(Fraction(1, k) for k in range(1, n + 1))
    corr = -Fraction(1, 2 * n)
    for k in range(1, 12):
        corr += bernoulli_number(2 * k) / (2 * k * Fraction(n) ** (2 * k))
    return float(h + corr - 4 * log2)


@functools.cache
def catalan_constant(ctx: PrecisionContext | None = None) -> float:
    """G = sum (-1)^n / (2n + 1)^2 by Euler's transformation, in exact rationals.

    sum (-1)^n a_n = sum_k (-1)^k (Delta^k a)_0 / 2^(k+1); 80 terms leave < 1e-24.
    """
    a = [Fraction(1, (2 * n + 1) ** 2) for n in range(80)]
    total = Fraction(0)
    for k in range(80):
        total += Fraction((-1) ** k, 2 ** (k + 1)) * a[0]
        a = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    return float(total)


def constants(ctx: PrecisionContext | None = None) -> Constants:
    resolve(ctx)
    return Constants(euler_gamma(), catalan_constant(), math.pi)

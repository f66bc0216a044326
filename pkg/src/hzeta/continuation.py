"""The h-zeta function on the whole plane.

Three routes are available:

``series``   the Dirichlet series, Re s > 1.05
``mellin``   the split Mellin representation
             zeta_h(s) = 4^(s-2) [2/((s-1)^2 Gamma(s)) - 4 sum w_n/((s+2n-1)^2 Gamma(s-1))
                         + 4 sum c_n/((s+2n-1) Gamma(s-1)) + K(s)/Gamma(s-1)]
``g_route``  zeta_h(s) = -2^(s-1) pi^(s-2) sin(pi s/2) Gamma(2-s) G(2-s), with
             G(z) = int_0^{pi/2} zeta(z, 2x/pi) log(tan x) dx continued in z

plus residues, trivial zeros, the alpha/beta sequences and several integral
identities that tie zeta_h to log-tangent integrals.
"""

from __future__ import annotations

import cmath
import functools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

import numpy as np

from . import asymptotics as asy
from . import h_series as hs
from . import quadrature as quad
from .context import AccuracyError, ConditioningWarning, DomainError, PoleError, PrecisionContext, resolve
from .exact_polynomials import bernoulli_polynomial, zeta_even_exact
from .special_functions import (
    digamma,
    euler_gamma,
    hurwitz_zeta,
    polylog_unit_circle,
    rgamma,
    riemann_zeta,
    sinpi,
    cospi,
    gamma,
)

__all__ = [
    "PoleInfo",
    "AlphaBeta",
    "EvalResult",
    "zeta_h",
    "zeta_h_via_hurwitz",
    "G",
    "power_part",
    "pole_info",
    "poles_near",
    "alpha",
    "beta",
    "alpha_beta",
    "recursion_residual",
    "tan_series_check",
    "exp_kernel_identity",
    "exp_kernel_limit",
    "digamma_identity_check",
    "zhodd_polylog_check",
    "hurwitz_sum",
]

SERIES_BOUNDARY = 1.05
NEAR_POLE = 1e-6
_MIN_TERMS = 40
_RE_S_MIN = -150.0
# the Mellin split loses accuracy through Gamma(s - 1) as |Im s| grows
EM_MIN_IM = 4.0
EM_MIN_RE = -1.0


@dataclass(frozen=True)
class PoleInfo:
    """A pole of zeta_h with its exact Laurent data and optional numerical cross-checks."""

    location: float
    order: int
    leading_coefficient: float
    residue: float
    exact_leading: Fraction | None = None
    exact_residue: Fraction | None = None
    numeric_leading: complex | None = None
    numeric_residue: complex | None = None

    def describe(self) -> str:
        res = "log2+γ/2" if self.order == 2 else str(self.exact_residue)
        return f"s={self.location:g}, order {self.order}, residue {res}"


@dataclass(frozen=True)
class AlphaBeta:
    alpha: tuple[float, ...]
    beta: tuple[float, ...]


class EvalResult(NamedTuple):
    value: float | complex
    error: float
    method: str


# Poles ---------------------------------------------------------------------


def _pole_index(s: complex) -> int | None:
    """k with s = 1 - 2k (k >= 0) when s sits exactly on a pole, else None."""
    if s.imag != 0 or s.real != math.floor(s.real):
        return None
    k2 = 1 - int(s.real)
    if k2 >= 0 and k2 % 2 == 0:
        return k2 // 2
    return None


def poles_near(s, radius: float = NEAR_POLE) -> int | None:
    """Index k of a pole 1 - 2k within ``radius`` of s, else None."""
    z = complex(s)
    if abs(z.imag) >= radius:
        return None
    k = round((1 - z.real) / 2)
    if k >= 0 and abs(z - (1 - 2 * k)) < radius:
        return k
    return None


def _exact_residue(k: int) -> Fraction:
    # -B_2k(1/2) / (4k)
    return -bernoulli_polynomial(2 * k)(Fraction(1, 2)) / (4 * k)


def pole_info(k: int, ctx: PrecisionContext | None = None, numeric: bool = True) -> PoleInfo:
    """Laurent data at s = 1 (k = 0) or s = 1 - 2k (k >= 1).

    Exact values come from closed forms.  With ``numeric`` the leading and
    residue coefficients are also extracted from zeta_h itself by the
    trapezoid rule for (1/2 pi i) * contour integral of zeta_h(s)(s - s0)^(j-1)
    on a circle of radius 1/2 with 64 nodes.
    """
    if k < 0:
        raise DomainError("pole index must be >= 0", k)
    ctx = resolve(ctx)
    s0 = 1 - 2 * k
    if k == 0:
        lead_exact = Fraction(1, 2)
        res = math.log(2) + euler_gamma() / 2
        order = 2
        res_exact = None
    else:
        res_exact = _exact_residue(k)
        lead_exact = res_exact
        res = float(res_exact)
        order = 1
    num_lead = num_res = None
    if numeric:
        c1, c2 = _laurent_coefficients(s0, ctx)
        num_res = c1
        num_lead = c2 if order == 2 else c1
    return PoleInfo(
        location=float(s0),
        order=order,
        leading_coefficient=float(lead_exact),
        residue=res,
        exact_leading=lead_exact,
        exact_residue=res_exact,
        numeric_leading=num_lead,
        numeric_residue=num_res,
    )


def _laurent_coefficients(s0: float, ctx: PrecisionContext, radius: float = 0.5, nodes: int = 64):
    c1 = c2 = 0j
    for j in range(nodes):
        u = radius * cmath.exp(2j * math.pi * (j + 0.5) / nodes)
        f = _mellin(s0 + u, ctx).value
        c1 += f * u
        c2 += f * u * u
    return c1 / nodes, c2 / nodes


# Mellin-split continuation ---------------------------------------------------


@functools.cache
def _wc_floats(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    w = np.array([float(hs.w_coefficient(n)) for n in range(1, n_max + 1)])
    c = np.array([0.0] + [float(hs.c_coefficient_series(n)) for n in range(2, n_max + 1)])
    return w, c


def _mellin(s: complex, ctx: PrecisionContext) -> EvalResult:
    if s.real < _RE_S_MIN:
        raise DomainError(f"continuation supports Re s >= {_RE_S_MIN}", s)
    n_max = max(_MIN_TERMS, int(math.ceil((1 - s.real) / 2)) + 30)
    w, c = _wc_floats(n_max)
    n = np.arange(1, n_max + 1)
    d = s + 2 * n - 1
    w_terms = w / d**2
    c_terms = c / d
    rg1 = complex(rgamma(s - 1))
    rg0 = complex(rgamma(s))
    kval = complex(quad.K(s, ctx))
    pre = 4 ** (s - 2)
    parts = [
        2 * rg0 / (s - 1) ** 2,
        -4 * rg1 * complex(np.sum(w_terms)),
        4 * rg1 * complex(np.sum(c_terms)),
        rg1 * kval,
    ]
    value = pre * sum(parts)
    # coefficient ratio ~ 1/pi^2; geometric majorant on the truncated tail
    q = 0.11
    tail = abs(pre * rg1) * 4 * (abs(w_terms[-1]) + abs(c_terms[-1])) * q / (1 - q)
    cond = abs(pre) * sum(abs(p) for p in parts) * 4e-16
    err = tail + cond + abs(pre * rg1) * ctx.tol_abs * 1e-3
    return EvalResult(value, err, "mellin")


# G(z) -------------------------------------------------------------------------


@functools.cache
def _delta(k: int) -> float:
    # (1 - 2^(1-2k)) zeta(2k) - 1, without cancellation for large k
    zm1 = math.fsum(float(j) ** (-2 * k) for j in range(2, 60)) if k > 3 else riemann_zeta(2 * k) - 1
    return zm1 - 2.0 ** (1 - 2 * k) * (1 + zm1)


def power_part(z, ctx: PrecisionContext | None = None) -> complex:
    """Continuation of int_0^{pi/2} (2x/pi)^(-z) log(tan x) dx to z != 1, 3, 5, ...

    The slowly convergent part sum 1/(k(2k+1-z)) is summed in closed form as
    (psi(1 + (1-z)/2) + gamma) / (1 - z); the remainder converges like 4^-k.
    """
    z = complex(z)
    if z.imag == 0 and z.real >= 1 and (z.real - 1) % 2 == 0:
        raise PoleError(f"G has a pole at z={z.real:g}", z.real)
    one = 1 - z
    if abs(one) < 1e-8:
        # (psi(1 + u/2) + gamma)/u -> psi'(1)/2 = pi^2/12
        closed = math.pi**2 / 12
    else:
        closed = (complex(digamma(1 + one / 2)) + euler_gamma()) / one
    rest = 0j
    for k in range(1, 80):
        t = _delta(k) / (k * (2 * k + 1 - z))
        rest += t
        if abs(t) < 1e-18 and k > 4:
            break
    half_pi = math.pi / 2
    return -half_pi / one**2 + half_pi * math.log(half_pi) / one + half_pi * (closed + rest)


def _g_direct(z: complex, ctx: PrecisionContext) -> EvalResult:
    """G(z) = power part + int_0^{pi/2} zeta(z, 1 + 2x/pi) log(tan x) dx."""

    def integrand(x):
        u = 1.0 + 2.0 * x / math.pi
        return np.asarray(hurwitz_zeta(z, u), dtype=complex) * quad.log_tan(x)

    r = quad.integrate_finite(integrand, 0.0, math.pi / 2, ctx, "log_at_both", tol=ctx.tol_abs * 1e-2)
    return EvalResult(power_part(z) + complex(r.value), r.error, "g_direct")


_W_TAYLOR = 14
_W_EXTRA = 36  # (1/2 / 2 pi)^36 < 1e-39


@functools.cache
def _w_exp_taylor(m_max: int) -> tuple[float, ...]:
    """Taylor coefficients of w(y) e^(-y) at y = 0."""
    wc = [0.0] * (m_max + 1)
    for j in range(0, m_max // 2 + 1):
        wc[2 * j] = (-1) ** j * hs.zeta_h_series(2 * j + 2) / (2 * math.pi) ** (2 * j)
    ec = [(-1) ** i / factorial(i) for i in range(m_max + 1)]
    return tuple(math.fsum(wc[i] * ec[m - i] for i in range(m + 1)) for m in range(m_max + 1))


def _g_w_integral(z: complex, ctx: PrecisionContext) -> EvalResult:
    """G(z) = power part - (1/pi)(1/Gamma(z)) int_0^inf w(y) e^(-y) y^(z-1) dy.

    On (0, 1] the Taylor polynomial of w(y) e^(-y) is subtracted and
    integrated exactly, which continues the integral to Re z > -M.
    """
    m_terms = max(_W_TAYLOR, int(math.ceil(-z.real)) + 4)
    a = _w_exp_taylor(m_terms + _W_EXTRA)
    tol = ctx.tol_abs * 1e-2

    def head(y):
        out = np.empty(y.shape, dtype=complex)
        near = y < 0.5
        yn = y[near]
        # remainder as its own Taylor tail: subtracting would cancel catastrophically
        rem = np.zeros_like(yn)
        for m in range(m_terms + _W_EXTRA, m_terms - 1, -1):
            rem = rem * yn + a[m]
        out[near] = rem * np.exp((z + m_terms - 1) * np.log(yn))
        yf = y[~near]
        f = hs.w_values(yf) * np.exp(-yf)
        poly = np.zeros_like(yf)
        for m in range(m_terms - 1, -1, -1):
            poly = poly * yf + a[m]
        out[~near] = (f - poly) * np.exp((z - 1) * np.log(yf))
        return out

    top = quad._decay_cutoff(z.real + 2.0, tol, rate=1.0)
    top = min(top, 80 * math.pi)

    def tail(y):
        return hs.w_values(y) * np.exp(-y + (z - 1) * np.log(y))

    r1 = quad.integrate_finite(head, 0.0, 1.0, ctx, "algebraic_log_at_0", tol=tol)
    r2 = quad.integrate_finite(tail, 1.0, top, ctx, "none", tol=tol)
    rg = complex(rgamma(z))
    poly_part = 0j
    for m in range(m_terms):
        if abs(z + m) < 1e-12:
            poly_part += a[m] * (-1) ** m * factorial(m)
        else:
            poly_part += a[m] * rg / (z + m)
    integral = poly_part + rg * (complex(r1.value) + complex(r2.value))
    err = abs(rg) * (r1.error + r2.error) / math.pi
    return EvalResult(power_part(z) - integral / math.pi, err, "g_w_integral")


def G(z, ctx: PrecisionContext | None = None, path: str = "auto", full: bool = False):
    """G(z) = int_0^{pi/2} zeta(z, 2x/pi) log(tan x) dx, continued to z != 1, 3, 5, ...

    ``path`` selects ``direct`` (Hurwitz quadrature of the zeta(z, 1 + u)
    part), ``w_integral`` (Mellin integral of w(y)), or ``auto``: direct for
    Re z < 1, w_integral otherwise.
    """
    ctx = resolve(ctx)
    zc = complex(z)
    if zc.imag == 0 and zc.real >= 1 and (zc.real - 1) % 2 == 0:
        raise PoleError(f"G has a pole at z={zc.real:g}", zc.real)
    if path == "auto":
        path = "direct" if zc.real < 1 else "w_integral"
    if path == "direct":
        if abs(zc - 1) < 1e-8:
            raise PoleError("G has a pole at z=1", 1.0)
        res = _g_direct(zc, ctx)
    elif path == "w_integral":
        res = _g_w_integral(zc, ctx)
    else:
        raise DomainError(f"unknown path {path!r}", path)
    return _shape(z, res, full)


def _shape(s, res: EvalResult, full: bool):
    v = complex(res.value)
    if isinstance(s, (int, float, Fraction, np.integer, np.floating)):
        v = v.real
    if full:
        return EvalResult(v, float(res.error), res.method)
    return v


def _g_route(s: complex, ctx: PrecisionContext, path: str = "auto") -> EvalResult:
    z = 2 - s
    g = G(z, ctx, path=path, full=True)
    factor = -(2 ** (s - 1)) * math.pi ** (s - 2) * complex(sinpi(s / 2)) * complex(gamma(z))
    return EvalResult(factor * g.value, abs(factor) * g.error, "g_route")


# Public evaluator ---------------------------------------------------------------


def zeta_h(s, ctx: PrecisionContext | None = None, method: str = "auto", full: bool = False):
    """h-zeta function zeta_h(s) on C minus the poles s = 1, -1, -3, ...

    ``method``: ``auto`` (series for Re s > 1.05; otherwise Euler-Maclaurin
    continuation ``em`` when Re s > -1 and |Im s| >= 4, Mellin split
    elsewhere), ``series``, ``em``, ``mellin`` or ``g_route``.  With ``full=True`` returns an
    :class:`EvalResult` ``(value, error, method)``.

    Raises :class:`PoleError` carrying :class:`PoleInfo` on a pole and issues
    a :class:`ConditioningWarning` within 1e-6 of one.
    """
    ctx = resolve(ctx)
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("s must be finite", s)
    k = _pole_index(z)
    if k is not None:
        info = pole_info(k, ctx, numeric=False)
        raise PoleError(f"zeta_h has a pole at {info.describe()}", z.real, info)
    if poles_near(z) is not None:
        warnings.warn(
            f"s={s} is within {NEAR_POLE:g} of a pole of zeta_h; result is ill-conditioned",
            ConditioningWarning,
            stacklevel=2,
        )
    if method == "auto":
        if z.real > SERIES_BOUNDARY:
            method = "series"
        elif z.real > EM_MIN_RE and abs(z.imag) >= EM_MIN_IM:
            method = "em"
        else:
            method = "mellin"
    if method == "series":
        r = hs.zeta_h_series(z, ctx, full=True)
        res = EvalResult(r.value, r.error, "series")
    elif method == "em":
        r = hs.zeta_h_series(z, ctx, full=True, continued=True)
        res = EvalResult(r.value, r.error, "em")
    elif method == "mellin":
        res = _mellin(z, ctx)
    elif method == "g_route":
        res = _g_route(z, ctx)
    else:
        raise DomainError(f"unknown method {method!r}", method)
    return _shape(s, res, full)


def zeta_h_via_hurwitz(s, ctx: PrecisionContext | None = None, full: bool = False):
    """zeta_h(s) = (2 pi)^(s-1) / (2 Gamma(s-1) cos(pi s/2)) * G(2 - s) for Re s > 1.

    G is evaluated by quadrature of zeta(2 - s, 2x/pi) log(tan x) with the
    x^(s-2) singularity removed in closed form.  Odd integers s (where
    cos(pi s/2) = 0) are rejected.
    """
    ctx = resolve(ctx)
    z = complex(s)
    if z.real <= 1:
        raise DomainError("Hurwitz route needs Re s > 1", s)
    odd = round((z.real - 1) / 2) * 2 + 1
    if abs(z - odd) <= 1e-3:
        raise DomainError("Hurwitz route is singular near odd integers; use zeta_h", s)
    g = G(2 - z, ctx, path="direct", full=True)
    factor = (2 * math.pi) ** (z - 1) * complex(rgamma(z - 1)) / (2 * complex(cospi(z / 2)))
    res = EvalResult(factor * g.value, abs(factor) * g.error, "hurwitz")
    return _shape(s, res, full)


# alpha / beta --------------------------------------------------------------------


def alpha(n: int, ctx: PrecisionContext | None = None) -> float:
    """alpha_n = zeta(2n + 1) / pi^(2n + 1)."""
    if n < 1:
        raise DomainError("alpha_n needs n >= 1", n)
    return riemann_zeta(2 * n + 1, ctx) / math.pi ** (2 * n + 1)


def beta(n: int, ctx: PrecisionContext | None = None) -> float:
    """beta_n = zeta_h(2n) / pi^(2n + 1)."""
    if n < 1:
        raise DomainError("beta_n needs n >= 1", n)
    return zeta_h(2 * n, ctx) / math.pi ** (2 * n + 1)


def alpha_beta(n_max: int, ctx: PrecisionContext | None = None) -> AlphaBeta:
    return AlphaBeta(
        tuple(alpha(n, ctx) for n in range(1, n_max + 1)),
        tuple(beta(n, ctx) for n in range(1, n_max + 1)),
    )


def recursion_residual(n: int, ctx: PrecisionContext | None = None) -> float:
    """sum_{k=1}^{n-1} [4 (2^(2n-2k+2) - 1) r_(n-k+1) beta_k - (2^(2k+1) - 1) r_(n-k) alpha_k], n >= 2.

    Zero when both mutual recursions between alpha and beta hold.
    """
    if n < 2:
        raise DomainError("recursion residual needs n >= 2", n)
    terms = []
    for k in range(1, n):
        terms.append(4 * (2 ** (2 * n - 2 * k + 2) - 1) * float(zeta_even_exact(n - k + 1)) * beta(k, ctx))
        terms.append(-(2 ** (2 * k + 1) - 1) * float(zeta_even_exact(n - k)) * alpha(k, ctx))
    return math.fsum(terms)


def tan_series_check(x: float, ctx: PrecisionContext | None = None) -> tuple[float, float]:
    """(tan x, S(x)/C(x)) with S(x) = 1/4 sum (2^(2n+1) - 1) alpha_n x^(2n-1), C(x) = sum beta_n x^(2n-2)."""
    ctx = resolve(ctx)
    if abs(x) > 1.2:
        raise AccuracyError("series S/C is only evaluated for |x| <= 1.2", None, None)
    s_terms, c_terms = [], []
    for n in range(1, 200):
        st = 0.25 * (2 ** (2 * n + 1) - 1) * alpha(n, ctx) * x ** (2 * n - 1)
        ct = beta(n, ctx) * x ** (2 * n - 2)
        s_terms.append(st)
        c_terms.append(ct)
        if n > 2 and abs(st) < 1e-18 and abs(ct) < 1e-18:
            break
    return math.tan(x), math.fsum(s_terms) / math.fsum(c_terms)


# Integral identities ------------------------------------------------------------


def exp_kernel_identity(z, ctx: PrecisionContext | None = None) -> tuple[complex, complex]:
    """(int_0^{pi/2} e^(2xz) log(tan x) dx, (e^(pi z) - 1)/pi * sum h_n/(n^2 + (z/2)^2))."""
    ctx = resolve(ctx)
    z = complex(z)
    k = round(z.imag / 2)
    if k != 0 and abs(z - 2j * k) < 1e-4:
        raise DomainError("z is within 1e-4 of 2ik; use exp_kernel_limit", z)

    def integrand(x):
        return np.exp(2 * x * z) * quad.log_tan(x)

    lhs = complex(quad.integrate_finite(integrand, 0.0, math.pi / 2, ctx, "log_at_both", tol=ctx.tol_abs * 1e-2).value)
    rhs = (cmath.exp(math.pi * z) - 1) / math.pi * complex(hs.h_kernel_sum((z / 2) ** 2, ctx))
    return lhs, rhs


def exp_kernel_limit(k: int, ctx: PrecisionContext | None = None) -> tuple[complex, complex]:
    """(int_0^{pi/2} e^(4ikx) log(tan x) dx, -i h_|k| / k) for nonzero integer k."""
    ctx = resolve(ctx)
    if k == 0 or int(k) != k:
        raise DomainError("k must be a nonzero integer", k)
    k = int(k)

    def weight(x):
        return np.exp(4j * k * x)

    lhs = complex(quad.log_tangent_integral(weight, ctx, oscillation=abs(k), tol=ctx.tol_abs * 1e-2).value)
    rhs = -1j * float(hs.h(abs(k))) / k
    return lhs, rhs


def digamma_identity_check(z, ctx: PrecisionContext | None = None) -> tuple[complex, complex]:
    """Both sides of
    pi/(2z) (psi((1 + iz)/2) - psi(1/2) - i pi/2 tanh(pi z/2)) = tanh(pi z/2) sum h_n/(n^2 + (z/2)^2).
    """
    ctx = resolve(ctx)
    z = complex(z)
    th = cmath.tanh(math.pi * z / 2)
    if abs(z) < 1e-12 or abs(th) < 1e-12:
        raise DomainError("tanh(pi z/2) vanishes at z", z)
    arg = (1 + 1j * z) / 2
    if arg.imag == 0 and arg.real <= 0 and arg.real == math.floor(arg.real):
        raise DomainError("psi((1 + iz)/2) has a pole at z", z)
    if abs(cmath.cosh(math.pi * z / 2)) < 1e-12:
        raise DomainError("tanh(pi z/2) has a pole at z", z)
    lhs = math.pi / (2 * z) * (complex(digamma(arg)) - complex(digamma(0.5)) - 0.5j * math.pi * th)
    rhs = th * complex(hs.h_kernel_sum((z / 2) ** 2, ctx))
    return lhs, rhs


def zhodd_polylog_check(n: int, ctx: PrecisionContext | None = None) -> tuple[complex, complex]:
    """(int_0^{pi/2} Li_2n(e^(4ix)) log(tan x) dx, -i zeta_h(2n + 1)).

    The imaginary part is the sine series sum sin(4kx)/k^(2n), whose
    log-tangent integral is -sum h_k/k^(2n+1); the cosine part integrates to 0.
    """
    ctx = resolve(ctx)
    if n < 1:
        raise DomainError("n must be >= 1", n)

    def integrand(x):
        return np.asarray(polylog_unit_circle(2 * n, 4 * x), dtype=complex) * quad.log_tan(x)

    # split at pi/4 where 4x = pi; the polylog is smooth there but the pieces converge faster
    r = quad.integrate_piecewise(integrand, [0.0, math.pi / 4, math.pi / 2], ctx, tol=ctx.tol_abs * 1e-2)
    return complex(r.value), -1j * hs.zeta_h_series(2 * n + 1, ctx)


def hurwitz_sum(s, ctx: PrecisionContext | None = None, full: bool = False):
    """sum_{n>=1} zeta(s, n) / (2n - 1) for Re s > 1.

    Direct sum to 200 and an Euler-Maclaurin tail from the large-x
    expansion of zeta(s, x) / (2x - 1).
    """
    ctx = resolve(ctx)
    z = complex(s)
    if z.real <= 1:
        raise DomainError("Hurwitz sum needs Re s > 1", s)
    n_cut = 200
    n = np.arange(1, n_cut + 1, dtype=float)
    terms = np.asarray(hurwitz_zeta(z, n), dtype=complex) / (2 * n - 1)
    head = complex(np.sum(terms[::-1]))
    expn = asy.hurwitz_expansion(z) * asy.inverse_linear()
    tail, err = expn.em_tail(n_cut + 1, depth=10)
    return _shape(s, EvalResult(head + tail, err, "hurwitz_sum"), full)

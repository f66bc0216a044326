"""Registry of closed-form identities as parameterized (lhs, rhs) pairs, and a
runner that evaluates them into reproducible reports.

Every identity evaluates its two sides through different top-level routes
(quadrature against series, series against closed form, one continuation
against another); ``method_notes`` records which.
"""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import asymptotics as asy
from . import continuation as cont
from . import h_series as hs
from . import quadrature as quad
from .context import AccuracyError, DomainError, PrecisionContext, resolve
from .exact_polynomials import (
    RationalPolynomial,
    bernoulli_polynomial,
    c_coefficient,
    derivative,
    euler_polynomial,
    reconstruct_from_bernoulli,
    zeta_even_exact,
)
from .special_functions import catalan_constant, gamma, hurwitz_zeta, riemann_zeta

__all__ = [
    "IdentitySpec",
    "IdentityReport",
    "SuiteResult",
    "REGISTRY",
    "register",
    "get_identity",
    "run_identity",
    "run_suite",
    "reports_to_json",
    "reports_from_json",
    "reports_to_csv",
    "test_polynomials",
]

DEFAULT_TOL = 1e-8
STATUSES = ("pass", "fail", "skipped")

Value = float | complex


@dataclass(frozen=True)
class IdentitySpec:
    """One identity family.

    ``evaluate(params, ctx)`` returns ``(lhs, rhs)``.  ``grid`` is the default
    list of parameter dicts; ``reference`` is the formula being checked.
    """

    id: str
    reference: str
    parameter_domain: str
    evaluate: Callable[[dict, PrecisionContext], tuple[Value, Value]]
    grid: tuple[dict, ...]
    default_tol: float = DEFAULT_TOL
    method_notes: str = ""
    validate: Callable[[dict], None] | None = None


@dataclass
class IdentityReport:
    id: str
    params: dict
    lhs_value: Value
    rhs_value: Value
    abs_err: float
    rel_err: float
    tol: float
    status: str
    elapsed_ms: float
    method_notes: str
    reference: str = ""

    def comparable(self) -> dict:
        """Fields that must agree across repeated runs (timing excluded)."""
        d = asdict(self)
        d.pop("elapsed_ms")
        return d


@dataclass
class SuiteResult:
    reports: list[IdentityReport]
    families: int
    passed: int
    failed: int
    skipped: int

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary_line(self) -> str:
        return (
            f"families: {self.families}, reports: {len(self.reports)}, "
            f"passed: {self.passed}, failures: {self.failed}, skipped: {self.skipped}"
        )


REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in REGISTRY:
        raise ValueError(f"duplicate identity id {spec.id}")
    REGISTRY[spec.id] = spec
    return spec


def get_identity(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


# Helpers ---------------------------------------------------------------------------


def _zeta_int(n: int) -> float:
    """zeta at a nonnegative integer with zeta(0) = -1/2."""
    return -0.5 if n == 0 else riemann_zeta(n)


def _zeta_h_pos(n: int, ctx) -> float:
    return hs.zeta_h_series(n, ctx)


def _L(f, ctx, oscillation: int = 0) -> float:
    return quad.log_tangent_integral(f, ctx, oscillation=oscillation, tol=ctx.tol_abs * 1e-2).value


def _poly_integrand(p: RationalPolynomial):
    scale = 2.0 / math.pi
    coeffs = p.to_float_coeffs()

    def f(x):
        u = scale * np.asarray(x)
        acc = np.zeros_like(u)
        for c in reversed(coeffs):
            acc = acc * u + c
        return acc

    return f


def _grid(name: str, values: Iterable) -> tuple[dict, ...]:
    return tuple({name: v} for v in values)


def _positive_int(name: str, lo: int = 1, hi: int | None = None):
    def check(params: dict) -> None:
        v = params.get(name)
        if not isinstance(v, int) or v < lo or (hi is not None and v > hi):
            rng = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise DomainError(f"{name} must be an integer in {rng}", v)

    return check


def _real_range(name: str, lo: float, hi: float):
    def check(params: dict) -> None:
        v = params.get(name)
        if not isinstance(v, (int, float)) or not lo <= v <= hi:
            raise DomainError(f"{name} must lie in [{lo}, {hi}]", v)

    return check


# Polynomial inputs ------------------------------------------------------------------


def test_polynomials(seed: int = 20240601, count: int = 5) -> list[tuple[str, RationalPolynomial]]:
    """Odd Bernoulli and Euler polynomials up to degree 9 plus seeded random
    antisymmetric combinations of B_1, B_3, ..., B_9."""
    polys = [(f"B{n}", bernoulli_polynomial(n)) for n in (1, 3, 5, 7, 9)]
    polys += [(f"E{n}", euler_polynomial(n)) for n in (1, 3, 5, 7, 9)]
    rng = random.Random(seed)
    for i in range(count):
        m = rng.randint(1, 5)
        lam = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(m)]
        if lam[-1] == 0:
            lam[-1] = Fraction(1)
        polys.append((f"R{i}", reconstruct_from_bernoulli(lam)))
    return polys


_POLYS = {name: p for name, p in test_polynomials()}
_POLYS_GENERAL = dict(_POLYS)
_POLYS_GENERAL["x^2"] = RationalPolynomial([0, 0, 1])
_POLYS_GENERAL["x^3+x"] = RationalPolynomial([0, 1, 0, 1])
_POLYS_GENERAL["1-3x+x^4"] = RationalPolynomial([1, -3, 0, 0, 1])


def _poly_param(table: dict):
    def check(params: dict) -> None:
        if params.get("P") not in table:
            raise DomainError(f"P must be one of {sorted(table)}", params.get("P"))

    return check


# Identity definitions --------------------------------------------------------------


def _lemma1(p, ctx):
    n = p["n"]
    lhs = _L(lambda x: np.sin(4 * n * x), ctx, oscillation=n)
    return lhs, -float(hs.h(n)) / n


register(IdentitySpec(
    "LEMMA1", "int_0^{pi/2} sin(4nx) log(tan x) dx = -h_n/n", "n >= 1",
    _lemma1, _grid("n", range(1, 13)), 1e-9,
    "lhs: tanh-sinh quadrature; rhs: exact h_n", _positive_int("n"),
))


def _logtan_fourier(p, ctx):
    x = p["x"]
    k_cut = 400
    k = np.arange(k_cut)
    head = math.fsum((np.cos(2 * (2 * k + 1) * x) / (2 * k + 1)).tolist())
    # 1/(2k+1) = sum_i (-1)^i 2^(-1-i) k^(-1-i)
    expn = asy.Expansion([((-1) ** i * 2.0 ** (-1 - i), 1 + i, 0) for i in range(30)])
    z = complex(math.cos(4 * x), math.sin(4 * x))
    tail, _ = expn.oscillatory_tail(k_cut, z, depth=10)
    tail *= complex(math.cos(2 * x), math.sin(2 * x))
    return float(quad.log_tan(x)), -2 * (head + tail.real)


register(IdentitySpec(
    "LOGTAN-FOURIER", "log(tan x) = -2 sum_{k>=0} cos(2(2k+1)x)/(2k+1)", "0 < x < pi/2",
    _logtan_fourier, _grid("x", (0.1, 0.3, 0.5, 0.7, 1.0, 1.3)), DEFAULT_TOL,
    "lhs: direct log tan; rhs: partial sum plus Euler-Boole oscillatory tail",
    _real_range("x", 0.05, math.pi / 2 - 0.05),
))


def _parseval_pi3(p, ctx):
    lhs = _L(quad.log_tan, ctx)
    return lhs, math.pi**3 / 8


register(IdentitySpec(
    "PARSEVAL-PI3", "int_0^{pi/2} log^2(tan x) dx = pi^3/8", "none",
    _parseval_pi3, ({},), 1e-10, "lhs: tanh-sinh quadrature; rhs: closed form",
))


def _hsq(p, ctx):
    return hs.weighted_h_sum("squared", 2.0, ctx=ctx), math.pi**4 / 32


register(IdentitySpec(
    "HSQ-PI4", "sum h_n^2/n^2 = pi^4/32", "none",
    _hsq, ({},), 1e-10, "lhs: direct sum plus Euler-Maclaurin tail; rhs: closed form",
))


def _chen(p, ctx):
    return hs.zeta_h_series(2, ctx), 1.75 * riemann_zeta(3, ctx)


register(IdentitySpec(
    "CHEN", "sum h_n/n^2 = 7/4 zeta(3)", "none",
    _chen, ({},), 1e-10, "lhs: h-series; rhs: Riemann zeta",
))


def _catalan_step(p, ctx):
    if p["route"] == "quadrature":
        a = quad.integrate_finite(quad.log_tan, 0.0, math.pi / 4, ctx, "log_at_0", tol=ctx.tol_abs * 1e-2).value
        b = quad.integrate_finite(quad.log_tan, math.pi / 4, math.pi / 2, ctx, "log_at_both", tol=ctx.tol_abs * 1e-2).value
        lhs = -0.5 * a + 0.5 * b
    else:
        lhs = 2 / math.pi * hs.weighted_h_sum("odd_indices", 2.0, ctx=ctx)
    return lhs, catalan_constant(ctx)


def _route_check(params):
    if params.get("route") not in ("quadrature", "series"):
        raise DomainError("route must be 'quadrature' or 'series'", params.get("route"))


register(IdentitySpec(
    "CATALAN-STEP", "L(step at pi/4) = 2/pi sum h_{2n+1}/(2n+1)^2 = G", "route in {quadrature, series}",
    _catalan_step, ({"route": "quadrature"}, {"route": "series"}), DEFAULT_TOL,
    "lhs: quadrature of the step function or odd-index h-series; rhs: Catalan constant from its own series",
    _route_check,
))


def _alt_sum(p, ctx):
    return hs.weighted_h_sum("alternating", 2.0, ctx=ctx), 1.75 * riemann_zeta(3) - math.pi * catalan_constant()


register(IdentitySpec(
    "ALT-SUM", "sum (-1)^n h_n/n^2 = 7/4 zeta(3) - pi G", "none",
    _alt_sum, ({},), DEFAULT_TOL, "lhs: parity-split h-series; rhs: constants",
))


def _even_sum(p, ctx):
    lhs = hs.weighted_h_sum("even_indices", 2.0, ctx=ctx) / 4
    return lhs, 1.75 * riemann_zeta(3) - math.pi / 2 * catalan_constant()


register(IdentitySpec(
    "EVEN-INDEX-SUM", "sum h_{2n}/(2n)^2 = 7/4 zeta(3) - pi/2 G", "none",
    _even_sum, ({},), DEFAULT_TOL,
    "lhs: h-series over even indices with rescaled tail; rhs: constants. "
    "The sum runs over even n of h_n/n^2, i.e. the denominator is (2n)^2",
))

_R_GRID = tuple(round(0.025 * i, 3) for i in range(11))


def _cor1(p, ctx):
    r = p["r"]
    lhs = quad.T(r, ctx)
    rhs = -7 / (4 * math.pi) * riemann_zeta(3) + hs.weighted_h_sum("cos", 2.0, r=r, ctx=ctx) / math.pi
    return lhs, rhs


register(IdentitySpec(
    "COR1", "T(r) = -7/(4 pi) zeta(3) + 1/pi sum h_n cos(4 n r pi)/n^2", "0 <= r <= 1/4",
    _cor1, _grid("r", _R_GRID), 1e-6,
    "lhs: quadrature of log tan; rhs: cosine-weighted h-series by residue classes",
    _real_range("r", 0.0, 0.25),
))


def _t_symmetry(p, ctx):
    r = p["r"]
    return quad.T(0.5 - r, ctx), quad.T(r, ctx)


register(IdentitySpec(
    "T-SYM", "T(1/2 - r) = T(r)", "0 <= r <= 1/2",
    _t_symmetry, _grid("r", tuple(round(0.05 * i, 2) for i in range(11))), 1e-9,
    "both sides: independent quadratures over different intervals",
    _real_range("r", 0.0, 0.5),
))


def _apery(p, ctx):
    c = lambda r: hs.weighted_h_sum("cos", 2.0, r=r, ctx=ctx)  # noqa: E731
    rhs = 2 / 7 * (5 * c(0.05) - 5 * c(0.15) + 2 * c(0.25))
    return riemann_zeta(3, ctx), rhs


register(IdentitySpec(
    "APERY-REP",
    "zeta(3) = 2/7 sum h_n/n^2 (5 cos(n pi/5) - 5 cos(3 n pi/5) + 2 (-1)^n)", "none",
    _apery, ({},), 1e-5,
    "lhs: Riemann zeta; rhs: periodic weights summed per residue class mod 10 with Euler-Maclaurin tails",
))


def _cor2(p, ctx):
    m = p["m"]
    rhs = -0.5 * math.fsum((2 ** (2 * k + 1) - 1) * _zeta_int(2 * m - 2 * k) * riemann_zeta(2 * k + 1) for k in range(1, m + 1))
    return _zeta_h_pos(2 * m, ctx), rhs


register(IdentitySpec(
    "COR2", "zeta_h(2m) = -1/2 sum_{k=1}^m (2^(2k+1) - 1) zeta(2m-2k) zeta(2k+1)", "m >= 1",
    _cor2, _grid("m", range(1, 6)), 1e-10, "lhs: h-series; rhs: Riemann zeta values", _positive_int("m"),
))


def _cor2_rewrite(p, ctx):
    m = p["m"]
    rhs = (2 ** (2 * m + 1) - 1) / 4 * riemann_zeta(2 * m + 1) - 0.5 * math.fsum(
        (2 ** (2 * k + 1) - 1) * riemann_zeta(2 * m - 2 * k) * riemann_zeta(2 * k + 1) for k in range(1, m)
    )
    return _zeta_h_pos(2 * m, ctx), rhs


register(IdentitySpec(
    "COR2-REWRITE",
    "zeta_h(2m) = (2^(2m+1) - 1)/4 zeta(2m+1) - 1/2 sum_{k=1}^{m-1} (2^(2k+1) - 1) zeta(2m-2k) zeta(2k+1)",
    "m >= 2", _cor2_rewrite, _grid("m", range(2, 6)), 1e-10,
    "lhs: h-series; rhs: Riemann zeta values", _positive_int("m", 2),
))


def _cor3_rhs(m: int, zh: Callable[[int], float]) -> float:
    s = math.fsum(zh(k) * (2 ** (2 * m - 2 * k + 2) - 1) * riemann_zeta(2 * m - 2 * k + 2) for k in range(1, m + 1))
    return 8 / math.pi**2 / (2 ** (2 * m + 1) - 1) * s


def _cor3(p, ctx):
    m = p["m"]
    return riemann_zeta(2 * m + 1, ctx), _cor3_rhs(m, lambda k: _zeta_h_pos(2 * k, ctx))


register(IdentitySpec(
    "COR3",
    "zeta(2m+1) = 8/pi^2 / (2^(2m+1) - 1) sum_{k=1}^m zeta_h(2k) (2^(2m-2k+2) - 1) zeta(2m-2k+2)",
    "m >= 1", _cor3, _grid("m", range(1, 6)), 1e-10,
    "lhs: Riemann zeta; rhs: h-series values", _positive_int("m"),
))


def _roundtrip(p, ctx):
    m = p["m"]

    def zh_from_odd(k):
        return -0.5 * math.fsum((2 ** (2 * j + 1) - 1) * _zeta_int(2 * k - 2 * j) * riemann_zeta(2 * j + 1) for j in range(1, k + 1))

    return riemann_zeta(2 * m + 1, ctx), _cor3_rhs(m, zh_from_odd)


register(IdentitySpec(
    "COR2-COR3-ROUNDTRIP", "zeta(2m+1) recovered from zeta_h(2k) built out of odd zeta values", "m >= 1",
    _roundtrip, _grid("m", range(1, 6)), 1e-9,
    "lhs: Riemann zeta; rhs: the two recursions composed, no h-series", _positive_int("m"),
))


def _th2(p, ctx):
    P = _POLYS[p["P"]]
    lhs = _L(_poly_integrand(P), ctx)
    m = (P.degree + 1) // 2
    rhs = 4 * math.fsum(
        (-1) ** k / (2 * math.pi) ** (2 * k - 1) * float(derivative(P, 2 * k - 2)(Fraction(0))) * _zeta_h_pos(2 * k, ctx)
        for k in range(1, m + 1)
    )
    return lhs, rhs


register(IdentitySpec(
    "TH2",
    "int_0^{pi/2} P(2x/pi) log(tan x) dx = 4 sum_k (-1)^k/(2 pi)^(2k-1) P^(2k-2)(0) zeta_h(2k), P(1-x) = -P(x)",
    "antisymmetric P from the test set", _th2, tuple({"P": k} for k in _POLYS), DEFAULT_TOL,
    "lhs: quadrature; rhs: exact derivatives and h-series", _poly_param(_POLYS),
))


def _lp(p, ctx):
    P = _POLYS_GENERAL[p["P"]]
    lhs = _L(_poly_integrand(P), ctx)
    kmax = (P.degree + 1) // 2
    rhs = math.fsum(
        (-1) ** (k - 1) / math.pi ** (2 * k - 1) * float(c_coefficient(P, k)) * riemann_zeta(2 * k + 1)
        for k in range(1, kmax + 1)
    )
    return lhs, rhs


register(IdentitySpec(
    "LP",
    "int_0^{pi/2} P(2x/pi) log(tan x) dx = sum_k (-1)^(k-1)/pi^(2k-1) c_k(P) zeta(2k+1)",
    "polynomials from the test set plus non-antisymmetric ones", _lp,
    tuple({"P": k} for k in _POLYS_GENERAL), DEFAULT_TOL,
    "lhs: quadrature; rhs: exact c_k(P) and Riemann zeta", _poly_param(_POLYS_GENERAL),
))


def _brn(p, ctx):
    m = p["m"]
    lhs = _L(_poly_integrand(bernoulli_polynomial(2 * m - 1)), ctx)
    rhs = 2 * (-1) ** (m - 1) * factorial(2 * m - 1) / (2 * math.pi) ** (2 * m - 1) * _zeta_h_pos(2 * m, ctx)
    return lhs, rhs


register(IdentitySpec(
    "BRN",
    "int_0^{pi/2} B_(2m-1)(2x/pi) log(tan x) dx = 2 (-1)^(m-1) (2m-1)!/(2 pi)^(2m-1) zeta_h(2m)",
    "m >= 1", _brn, _grid("m", range(1, 6)), DEFAULT_TOL, "lhs: quadrature; rhs: h-series", _positive_int("m"),
))


def _complex_param(name):
    def check(params):
        try:
            complex(params[name])
        except (KeyError, TypeError, ValueError):
            raise DomainError(f"{name} must be a number", params.get(name)) from None

    return check


def _expz(p, ctx):
    return cont.exp_kernel_identity(complex(p["z"]), ctx)


register(IdentitySpec(
    "EXPZ", "int_0^{pi/2} e^(2xz) log(tan x) dx = (e^(pi z) - 1)/pi sum h_n/(n^2 + (z/2)^2)", "z != 2ik",
    _expz, _grid("z", (1, "1+1j", 3, 0.5, -1, "0.5+2j")), DEFAULT_TOL,
    "lhs: complex quadrature; rhs: h-kernel series", _complex_param("z"),
))


def _expz_limit(p, ctx):
    return cont.exp_kernel_limit(p["k"], ctx)


def _nonzero_int(params):
    k = params.get("k")
    if not isinstance(k, int) or k == 0:
        raise DomainError("k must be a nonzero integer", k)


register(IdentitySpec(
    "EXPZ-LIMIT", "int_0^{pi/2} e^(4ikx) log(tan x) dx = -i h_|k|/k", "k nonzero integer",
    _expz_limit, _grid("k", (1, 2, 3, 4, 5, 6, -1, -4)), 1e-9,
    "lhs: complex quadrature; rhs: exact h_k", _nonzero_int,
))


def _digamma(p, ctx):
    return cont.digamma_identity_check(complex(p["z"]), ctx)


register(IdentitySpec(
    "DIGAMMA-ID",
    "pi/(2z) (psi((1+iz)/2) - psi(1/2) - i pi/2 tanh(pi z/2)) = tanh(pi z/2) sum h_n/(n^2 + (z/2)^2)",
    "tanh(pi z/2) != 0", _digamma, _grid("z", (0.5, 1, 2, "1+0.5j", 3)), DEFAULT_TOL,
    "lhs: complex digamma; rhs: h-kernel series", _complex_param("z"),
))


def _tan_sc(p, ctx):
    return cont.tan_series_check(p["x"], ctx)


register(IdentitySpec(
    "TAN-SC", "tan x = S(x)/C(x), S = 1/4 sum (2^(2n+1)-1) alpha_n x^(2n-1), C = sum beta_n x^(2n-2)",
    "|x| <= 1.2", _tan_sc, _grid("x", (0.25, 0.5, 1.0)), DEFAULT_TOL,
    "lhs: math.tan; rhs: power series in alpha_n (zeta) and beta_n (h-series)", _real_range("x", -1.2, 1.2),
))


def _gf(p, ctx):
    x = p["x"]
    return hs.generating_function_lhs(x, ctx), hs.generating_function_rhs(x)


register(IdentitySpec(
    "GF", "sum h_k x^(2k)/k = 1/4 log^2((1+x)/(1-x))", "|x| <= 0.99",
    _gf, _grid("x", (0.1, 0.5, 0.9, -0.5)), DEFAULT_TOL, "lhs: power series; rhs: closed form",
    _real_range("x", -0.99, 0.99),
))


def _alpha_beta(p, ctx):
    n, kind = p["n"], p["kind"]
    r = lambda j: float(zeta_even_exact(j))  # noqa: E731
    if kind == "beta":
        lhs = cont.beta(n, ctx)
        rhs = -0.5 * math.fsum((2 ** (2 * k + 1) - 1) * r(n - k) * cont.alpha(k, ctx) for k in range(1, n + 1))
    elif kind == "alpha":
        lhs = cont.alpha(n, ctx)
        rhs = 8 / (2 ** (2 * n + 1) - 1) * math.fsum(
            (2 ** (2 * n - 2 * k + 2) - 1) * r(n - k + 1) * cont.beta(k, ctx) for k in range(1, n + 1)
        )
    else:
        lhs, rhs = cont.recursion_residual(n, ctx), 0.0
    return lhs, rhs


def _ab_check(params):
    if params.get("kind") not in ("alpha", "beta", "residual"):
        raise DomainError("kind must be alpha, beta or residual", params.get("kind"))
    _positive_int("n", 2 if params["kind"] == "residual" else 1)(params)


register(IdentitySpec(
    "ALPHA-BETA",
    "beta_n = -1/2 sum (2^(2k+1)-1) r_(n-k) alpha_k; alpha_n = 8/(2^(2n+1)-1) sum (2^(2n-2k+2)-1) r_(n-k+1) beta_k",
    "kind in {alpha, beta, residual}, n >= 1 (residual: n >= 2)", _alpha_beta,
    tuple({"kind": kd, "n": n} for kd in ("beta", "alpha") for n in range(1, 7))
    + tuple({"kind": "residual", "n": n} for n in range(2, 8)),
    1e-10, "alpha_n from Riemann zeta, beta_n from the h-series", _ab_check,
))


def _mellin_zh(p, ctx):
    s = complex(p["s"])
    lhs = complex(quad.mellin_log_tanh_sq(s, ctx))
    rhs = 4 ** (2 - s) * complex(hs.zeta_h_series(s, ctx)) * complex(gamma(s - 1))
    return lhs, rhs


register(IdentitySpec(
    "MELLIN-ZH", "int_0^inf log^2(tanh x) x^(s-2) dx = 4^(2-s) zeta_h(s) Gamma(s-1)", "Re s > 1.05",
    _mellin_zh, _grid("s", (2, 3, 2.5, "2+3j", 1.5)), DEFAULT_TOL,
    "lhs: split Mellin quadrature; rhs: h-series", _complex_param("s"),
))


def _ach(p, ctx):
    s = complex(p["s"])
    return complex(cont.zeta_h_via_hurwitz(s, ctx)), complex(hs.zeta_h_series(s, ctx))


register(IdentitySpec(
    "ACH-CROSS",
    "zeta_h(s) = (2 pi)^(s-1)/(2 Gamma(s-1) cos(pi s/2)) int_0^{pi/2} zeta(2-s, 2x/pi) log(tan x) dx",
    "Re s > 1, s not odd", _ach, _grid("s", (2.2, 2.5, 3.5, 4.0, "2+2j")), DEFAULT_TOL,
    "lhs: Hurwitz-zeta quadrature; rhs: h-series", _complex_param("s"),
))


def _paths(p, ctx):
    s = complex(p["s"])
    a = complex(cont.zeta_h(s, ctx, method="mellin"))
    other = "series" if s.real > cont.SERIES_BOUNDARY else "g_route"
    return a, complex(cont.zeta_h(s, ctx, method=other))


register(IdentitySpec(
    "CONTINUATION-PATHS",
    "Mellin-split continuation = series (Re s > 1) = -2^(s-1) pi^(s-2) sin(pi s/2) Gamma(2-s) G(2-s)",
    "s off the poles", _paths, _grid("s", (1.5, 2.5, 0.5, -0.5, "0.3+2j", -2.5, "-1.5+1j")), DEFAULT_TOL,
    "lhs: log^2 tanh Mellin split; rhs: series or G via the w-integral", _complex_param("s"),
))


def _em_paths(p, ctx):
    s = complex(p["s"])
    return complex(cont.zeta_h(s, ctx, method="em")), complex(cont.zeta_h(s, ctx, method="g_route"))


register(IdentitySpec(
    "EM-CONTINUATION",
    "sum_{n<=N} h_n n^-s + continued Euler-Maclaurin tail = -2^(s-1) pi^(s-2) sin(pi s/2) Gamma(2-s) G(2-s)",
    "Re s > -1, s off the poles", _em_paths, _grid("s", (0.5, 0.3, "0.5+5j", "-0.5+1j", "0.9+4j")), 1e-9,
    "lhs: Euler-Maclaurin continuation of the series; rhs: G via the w-integral", _complex_param("s"),
))


def _g_paths(p, ctx):
    z = complex(p["z"])
    return complex(cont.G(z, ctx, path="direct")), complex(cont.G(z, ctx, path="w_integral"))


register(IdentitySpec(
    "G-PATHS", "G(z) by Hurwitz quadrature = G(z) by the w(y) Mellin integral", "z off 1, 3, 5, ...",
    _g_paths, _grid("z", (0.5, -1, "0.5+1j", -0.5)), DEFAULT_TOL,
    "lhs: quadrature of zeta(z, 1 + 2x/pi) log tan; rhs: integral of w(y) e^-y y^(z-1)", _complex_param("z"),
))


def _residue(p, ctx):
    k = p["k"]
    info = cont.pole_info(k, ctx)
    return complex(info.numeric_residue), info.residue


register(IdentitySpec(
    "RESIDUE", "Res_{s=1} zeta_h = log 2 + gamma/2; Res_{s=1-2n} zeta_h = -B_2n(1/2)/(4n)", "k >= 0",
    _residue, _grid("k", (0, 1, 2)), 1e-6,
    "lhs: contour trapezoid on the Mellin continuation; rhs: exact Bernoulli values", _positive_int("k", 0),
))


def _laurent_lead(p, ctx):
    info = cont.pole_info(0, ctx)
    return complex(info.numeric_leading), 0.5


register(IdentitySpec(
    "LAURENT-LEAD", "lim_{s->1} (s-1)^2 zeta_h(s) = 1/2", "none",
    _laurent_lead, ({},), 1e-6, "lhs: contour trapezoid; rhs: exact",
))


def _trivial_zero(p, ctx):
    s0 = -2 * p["n"]
    nodes, radius = 64, 0.25
    vals = [
        complex(cont.zeta_h(s0 + radius * complex(math.cos(a), math.sin(a)), ctx, method="mellin"))
        for a in (2 * math.pi * (j + 0.5) / nodes for j in range(nodes))
    ]
    return complex(np.mean(vals)), 0.0


register(IdentitySpec(
    "TRIVIAL-ZERO", "zeta_h(-2n) = 0", "n >= 1",
    _trivial_zero, _grid("n", (1, 2, 3)), 1e-8,
    "lhs: mean value of zeta_h on a circle around -2n (no evaluation at the zero itself); rhs: 0",
    _positive_int("n"),
))


def _hurwitz_sum(p, ctx):
    s = complex(p["s"])
    return complex(cont.hurwitz_sum(s, ctx)), complex(hs.zeta_h_series(s, ctx))


register(IdentitySpec(
    "HURWITZ-SUM", "zeta_h(s) = sum_{n>=1} zeta(s, n)/(2n - 1)", "Re s > 1",
    _hurwitz_sum, _grid("s", (3, 2.5, 4, "3+1j")), DEFAULT_TOL,
    "lhs: Hurwitz zeta values plus asymptotic tail; rhs: h-series", _complex_param("s"),
))


def _zhodd(p, ctx):
    return cont.zhodd_polylog_check(p["n"], ctx)


register(IdentitySpec(
    "ZHODD-POLYLOG", "int_0^{pi/2} Li_2n(e^(4ix)) log(tan x) dx = -i zeta_h(2n+1)", "n >= 1",
    _zhodd, _grid("n", (1, 2, 3)), DEFAULT_TOL,
    "lhs: quadrature of the unit-circle polylog; rhs: h-series", _positive_int("n"),
))


def _h4(p, ctx):
    s = complex(p["s"])
    lhs = complex(quad.mellin_log_tanh(s, ctx))
    rhs = 4 ** (1 - s) * complex(gamma(s - 1)) * complex(hurwitz_zeta(s, 0.5))
    return lhs, rhs


register(IdentitySpec(
    "H4-MELLIN", "H(s) = -int_0^inf log(tanh x) x^(s-2) dx = 4^(1-s) Gamma(s-1) zeta(s, 1/2)", "Re s > 1",
    _h4, _grid("s", (2, 3, 2.5)), 1e-9, "lhs: Mellin quadrature; rhs: Hurwitz zeta", _complex_param("s"),
))


def _parseval_mellin(p, ctx):
    sigma = p["sigma"]

    def g(s):
        return abs(complex(gamma(s - 1)) * complex(hurwitz_zeta(s, 0.5))) ** 2

    lhs = quad.vertical_line_integral(g, sigma, ctx) / (8 * math.pi)
    rhs = complex(gamma(2 * sigma - 2)).real * hs.zeta_h_series(2 * sigma - 1, ctx)
    return lhs, rhs


register(IdentitySpec(
    "PARSEVAL-MELLIN",
    "1/(8 pi) int_{Re s = sigma} |Gamma(s-1) zeta(s, 1/2)|^2 |ds| = Gamma(2 sigma - 2) zeta_h(2 sigma - 1)",
    "sigma > 1.025", _parseval_mellin, _grid("sigma", (1.5, 1.75)), 1e-6,
    "lhs: vertical-line quadrature; rhs: h-series", _real_range("sigma", 1.03, 10.0),
))


def _zeta3_line(p, ctx):
    c = 4 * math.sqrt(2)
    ln2 = math.log(2)

    def g(s):
        t = s.imag
        return (9 - c * math.cos(t * ln2)) / math.cosh(math.pi * t) * abs(complex(riemann_zeta(s))) ** 2

    lhs = quad.vertical_line_integral(g, 1.5, ctx) / 2 / 7
    return lhs, riemann_zeta(3, ctx)


register(IdentitySpec(
    "ZETA3-LINE", "zeta(3) = 1/7 int_0^inf (9 - 4 sqrt2 cos(t log 2))/cosh(pi t) |zeta(3/2 + it)|^2 dt",
    "none", _zeta3_line, ({},), 1e-6, "lhs: line quadrature of |zeta|^2; rhs: Riemann zeta",
))


def _classical(kind):
    def f(p, ctx):
        return hs.classical_euler_sums(kind, p["m"], ctx)

    return f


register(IdentitySpec(
    "CLASSICAL-EULER", "2 sum H_n/n^m = (m+2) zeta(m+1) - sum_{k=1}^{m-2} zeta(k+1) zeta(m-k)", "m >= 2",
    _classical("euler_Hn"), _grid("m", range(2, 6)), DEFAULT_TOL,
    "lhs: harmonic series with Euler-Maclaurin tail; rhs: zeta products", _positive_int("m", 2),
))
register(IdentitySpec(
    "CLASSICAL-GP", "sum H_n/n^(2m+1) = 1/2 sum_{k=2}^{2m} (-1)^k zeta(k) zeta(2m+2-k)", "m >= 1",
    _classical("georghiou_philippou"), _grid("m", range(1, 5)), DEFAULT_TOL,
    "lhs: harmonic series with Euler-Maclaurin tail; rhs: zeta products", _positive_int("m"),
))
register(IdentitySpec(
    "CLASSICAL-EVEN", "(2n+1) zeta(2n) = 2 sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k)", "n >= 2",
    _classical("zeta_even_recursion"), _grid("m", range(2, 7)), 1e-10,
    "lhs: Euler-Maclaurin zeta; rhs: exact r_k times pi powers", _positive_int("m", 2),
))


def _logtan_taylor(p, ctx):
    x = p["x"]
    terms = [math.log(x)]
    ratio = (x / math.pi) ** 2
    pw = 1.0
    for k in range(1, 2000):
        pw *= ratio
        t = 2 * (2 ** (2 * k - 1) - 1) / k * riemann_zeta(2 * k) * pw
        terms.append(t)
        if abs(t) < 1e-18:
            break
    return float(quad.log_tan(x)), math.fsum(terms)


register(IdentitySpec(
    "LOGTAN-TAYLOR", "log(tan x) = log x + 2 sum_k (2^(2k-1) - 1)/k zeta(2k) (x/pi)^(2k)", "0 < x < pi/2",
    _logtan_taylor, _grid("x", (0.1, 0.5, 1.0, 1.4)), DEFAULT_TOL,
    "lhs: direct log tan; rhs: power series with Riemann zeta coefficients", _real_range("x", 1e-6, 1.45),
))


# Runner ---------------------------------------------------------------------------


def _errors(lhs: Value, rhs: Value) -> tuple[float, float]:
    d = abs(complex(lhs) - complex(rhs))
    scale = max(abs(complex(lhs)), abs(complex(rhs)))
    return d, (d / scale if scale > 0 else (0.0 if d == 0 else math.inf))


def _plain(v: Value) -> Value:
    v = complex(v)
    return v.real if v.imag == 0 else v


def run_identity(
    identity_id: str,
    params: dict | None = None,
    ctx: PrecisionContext | None = None,
    tol: float | None = None,
) -> IdentityReport:
    """Evaluate one identity instance.

    Raises ``KeyError`` for an unknown id and :class:`DomainError` when the
    parameters fall outside the identity's domain.  Numerical failures
    (non-convergence) become a ``fail`` report rather than an exception.
    """
    spec = get_identity(identity_id)
    ctx = resolve(ctx)
    params = dict(params or {})
    if spec.validate is not None:
        spec.validate(params)
    limit = spec.default_tol if tol is None else tol
    t0 = time.perf_counter()
    notes = spec.method_notes
    try:
        lhs, rhs = spec.evaluate(params, ctx)
        lhs, rhs = _plain(lhs), _plain(rhs)
        abs_err, rel_err = _errors(lhs, rhs)
        status = "pass" if (abs_err <= limit or rel_err <= limit) else "fail"
    except AccuracyError as exc:
        lhs = rhs = math.nan
        abs_err = rel_err = math.inf
        status = "fail"
        notes = f"{notes}; accuracy error: {exc}"
    elapsed = (time.perf_counter() - t0) * 1e3
    return IdentityReport(
        id=spec.id,
        params=params,
        lhs_value=lhs,
        rhs_value=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        tol=limit,
        status=status,
        elapsed_ms=elapsed,
        method_notes=notes,
        reference=spec.reference,
    )


def _matches(identity_id: str, patterns: Sequence[str]) -> bool:
    return any(fnmatch.fnmatchcase(identity_id, p) for p in patterns)


def run_suite(
    pattern: str | Sequence[str] | None = None,
    ctx: PrecisionContext | None = None,
    jobs: int = 1,
    tol: float | None = None,
) -> SuiteResult:
    """Run every registered identity whose id matches ``pattern`` over its default grid.

    ``pattern`` is a glob (``COR*``) or a comma-separated list of globs;
    empty means all.  Instances run on up to ``jobs`` threads, and reports
    come back in registry and grid order regardless of completion order.
    """
    ctx = resolve(ctx)
    if pattern is None or pattern == "":
        patterns = ["*"]
    elif isinstance(pattern, str):
        patterns = [p.strip() for p in pattern.split(",") if p.strip()]
    else:
        patterns = list(pattern)
    specs = [s for s in REGISTRY.values() if _matches(s.id, patterns)]
    tasks = [(s.id, params) for s in specs for params in s.grid]

    def one(task):
        return run_identity(task[0], task[1], ctx, tol)

    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, tasks))
    else:
        reports = [one(t) for t in tasks]
    counts = {k: sum(r.status == k for r in reports) for k in STATUSES}
    return SuiteResult(reports, len(specs), counts["pass"], counts["fail"], counts["skipped"])


# Serialization -------------------------------------------------------------------


def _encode_value(v: Value):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def _decode_value(v) -> Value:
    if isinstance(v, dict):
        return complex(v["re"], v["im"])
    return float(v)


def _encode_params(params: dict) -> dict:
    return {k: _encode_value(v) if isinstance(v, complex) else v for k, v in params.items()}


def _report_dict(r: IdentityReport) -> dict:
    return {
        "id": r.id,
        "params": _encode_params(r.params),
        "lhs": _encode_value(r.lhs_value),
        "rhs": _encode_value(r.rhs_value),
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "tol": r.tol,
        "status": r.status,
        "elapsed_ms": r.elapsed_ms,
        "method_notes": r.method_notes,
        "reference": r.reference,
    }


def reports_to_json(reports: Sequence[IdentityReport], summary: dict | None = None, indent: int | None = 2) -> str:
    """One top-level object ``{"summary": ..., "reports": [...]}``; floats keep full precision."""
    doc: dict[str, Any] = {"reports": [_report_dict(r) for r in reports]}
    if summary is not None:
        doc["summary"] = summary
    return json.dumps(doc, indent=indent, ensure_ascii=False, allow_nan=True)


def reports_from_json(text: str) -> list[IdentityReport]:
    doc = json.loads(text)
    out = []
    for d in doc["reports"]:
        params = {k: _decode_value(v) if isinstance(v, dict) else v for k, v in d["params"].items()}
        out.append(IdentityReport(
            id=d["id"],
            params=params,
            lhs_value=_decode_value(d["lhs"]),
            rhs_value=_decode_value(d["rhs"]),
            abs_err=float(d["abs_err"]),
            rel_err=float(d["rel_err"]),
            tol=float(d["tol"]),
            status=d["status"],
            elapsed_ms=float(d["elapsed_ms"]),
            method_notes=d["method_notes"],
            reference=d.get("reference", ""),
        ))
    return out


CSV_COLUMNS = ("id", "params", "lhs", "rhs", "abs_err", "rel_err", "status", "ms")


def format_number(v: Value, digits: int = 17) -> str:
    if isinstance(v, complex):
        return f"{v.real:.{digits}g}{v.imag:+.{digits}g}j"
    return f"{v:.{digits}g}"


def reports_to_csv(reports: Sequence[IdentityReport], digits: int = 17) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([
            r.id,
            json.dumps(_encode_params(r.params), sort_keys=True),
            format_number(r.lhs_value, digits),
            format_number(r.rhs_value, digits),
            format_number(r.abs_err, 3),
            format_number(r.rel_err, 3),
            r.status,
            f"{r.elapsed_ms:.1f}",
        ])
    return buf.getvalue()

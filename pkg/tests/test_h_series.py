import math
import threading
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hzeta import AccuracyError, DomainError, PoleError
from hzeta import h_series as hs
from hzeta.special_functions import catalan_constant, euler_gamma, riemann_zeta

G = catalan_constant()
Z3 = riemann_zeta(3)


def _brute(s: float, n_max: int = 10**6) -> tuple[float, float]:
    """Partial sum of h_n n^-s and a bound on the neglected tail."""
    n = np.arange(1, n_max + 1)
    hn = np.cumsum(1.0 / (2 * n - 1.0))
    partial = math.fsum(hn / n.astype(float) ** s)
    # h_n <= (log 4n + gamma)/2 + 1/(24 n^2); integral comparison of the tail
    big = float(n_max)
    bound = ((math.log(4 * big) + euler_gamma()) / 2 + 1) * big ** (1 - s) / (s - 1)
    return partial, bound


def test_odd_harmonic_examples():
    assert hs.h(1) == 1
    assert hs.h(2) == Fraction(4, 3)
    assert hs.h(3) == Fraction(23, 15)
    assert hs.harmonic(4) == Fraction(25, 12)
    with pytest.raises(DomainError):
        hs.h(0)
    with pytest.raises(DomainError):
        hs.harmonic(0)


def test_cache_coherence():
    for n in range(1, 10_001, 37):
        assert hs.h(n) == hs.harmonic(2 * n) - hs.harmonic(n) / 2
        assert hs.h(n + 1) - hs.h(n) == Fraction(1, 2 * n + 1)


def test_cache_limit():
    cache = hs.HarmonicCache(limit=50)
    with pytest.raises(DomainError):
        cache.odd_harmonic(51)


def test_cache_concurrent_growth():
    cache = hs.HarmonicCache(limit=5000)
    out = {}

    def work(i):
        out[i] = cache.odd_harmonic(1000 + i)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, v in out.items():
        assert v == hs.h(1000 + i)


def test_h_float_matches_exact():
    n = np.array([1, 5, 29, 30, 31, 100, 1000, 5000])
    got = hs.h_float(n)
    for ni, gi in zip(n, got):
        assert abs(gi - float(hs.h(int(ni)))) < 1e-14 * float(hs.h(int(ni)))


def test_harmonic_float_matches_exact():
    n = np.array([1, 7, 40, 900])
    got = hs.harmonic_float(n)
    for ni, gi in zip(n, got):
        assert abs(gi - float(hs.harmonic(int(ni)))) < 1e-14 * gi


def test_zeta_h_series_examples(ctx):
    assert abs(hs.zeta_h_series(2, ctx) - 1.75 * Z3) < 1e-13
    expected = 31 / 4 * riemann_zeta(5) - 3.5 * riemann_zeta(2) * Z3
    assert abs(hs.zeta_h_series(4, ctx) - expected) < 1e-13


@pytest.mark.parametrize("s", [2, 3, 4])
def test_zeta_h_series_against_brute_force(ctx, s):
    partial, bound = _brute(float(s))
    v = hs.zeta_h_series(s, ctx)
    assert partial - 1e-12 <= v <= partial + bound + 1e-12


def test_zeta_h_series_complex_against_mellin_oracle(ctx):
    # 4^(2-s) Gamma(s-1) zeta_h(s) = int_0^inf log^2(tanh x) x^(s-2) dx, by mpmath quadrature
    s = mpmath.mpc(2, 3)
    m = mpmath.quad(lambda x: mpmath.log(mpmath.tanh(x)) ** 2 * x ** (s - 2), [0, 1, 4, mpmath.inf])
    ref = complex(m / (4 ** (2 - s) * mpmath.gamma(s - 1)))
    assert abs(hs.zeta_h_series(2 + 3j, ctx) - ref) < 1e-10


def test_zeta_h_series_full_result(ctx):
    r = hs.zeta_h_series(3.0, ctx, full=True)
    assert r.tail.kind == "euler_maclaurin"
    assert r.error >= 0 and r.error == r.tail.bound


def test_zeta_h_series_domain():
    with pytest.raises(DomainError):
        hs.zeta_h_series(1.05)
    with pytest.raises(DomainError):
        hs.zeta_h_series(0.5 + 3j)


def test_zeta_h_series_high_mode(high_ctx):
    v = hs.zeta_h_series(2, high_ctx)
    assert abs(v - 1.75 * Z3) < 1e-15


def test_continued_series_matches_reference(ctx):
    # zeta_h(0.3) from the G route, computed independently
    r = hs.zeta_h_series(0.5 + 5j, ctx, full=True, continued=True)
    assert abs(r.value - (0.6416644950825 + 0.2846276747242j)) < 1e-11
    with pytest.raises(PoleError):
        hs.zeta_h_series(1, ctx, continued=True)


def test_weighted_sum_examples(ctx):
    assert abs(hs.weighted_h_sum("squared", 2.0, ctx=ctx) - math.pi**4 / 32) < 1e-12
    alt = hs.weighted_h_sum("alternating", 2.0, ctx=ctx)
    assert abs(alt - (1.75 * Z3 - math.pi * G)) < 1e-12
    assert abs(hs.weighted_h_sum("cos", 2.0, r=0.25, ctx=ctx) - alt) < 1e-12
    assert abs(hs.weighted_h_sum("cos", 2.0, r=0.0, ctx=ctx) - 1.75 * Z3) < 1e-12


def test_even_and_odd_split(ctx):
    even = hs.weighted_h_sum("even_indices", 2.0, ctx=ctx)
    odd = hs.weighted_h_sum("odd_indices", 2.0, ctx=ctx)
    # sum h_n/n^2 = sum h_{2n}/(2n)^2 + sum h_{2n+1}/(2n+1)^2
    assert abs(even / 4 + odd - 1.75 * Z3) < 1e-12
    assert abs(odd - math.pi / 2 * G) < 1e-12


@pytest.mark.parametrize("r", [0.05, 0.1, 1 / 6, 0.2, 0.123456789])
def test_cos_weight_against_brute_force(ctx, r):
    n = np.arange(1, 2_000_001)
    hn = np.cumsum(1.0 / (2 * n - 1.0))
    terms = hn * np.cos(4 * math.pi * r * n) / n.astype(float) ** 2
    partial = math.fsum(terms)
    # oscillatory tail is far below 1e-8 at N = 2e6 for these r
    assert abs(hs.weighted_h_sum("cos", 2.0, r=r, ctx=ctx) - partial) < 1e-8


def test_cos_weight_error_estimate_is_honest(ctx):
    r = hs.weighted_h_sum("cos", 2.0, r=0.123456789, ctx=ctx, full=True)
    finer = hs.weighted_h_sum("cos", 2.0, r=0.123456789, ctx=ctx.replace(tol_abs=1e-13))
    assert abs(r.value - finer) <= r.error + 1e-15


def test_weighted_sum_domain(ctx):
    with pytest.raises(DomainError):
        hs.weighted_h_sum("cubic", 2.0)
    with pytest.raises(DomainError):
        hs.weighted_h_sum("cos", 2.0, r=0.3)
    with pytest.raises(DomainError):
        hs.weighted_h_sum("squared", 1.5)
    with pytest.raises(AccuracyError):
        hs.weighted_h_sum("cos", 2.0, r=1e-7)


def test_generating_function_examples(ctx):
    assert hs.generating_function_lhs(0.0) == 0.0
    assert abs(hs.generating_function_lhs(0.5, ctx) - 0.25 * math.log(3) ** 2) < 1e-14
    assert abs(hs.generating_function_lhs(0.9, ctx) - hs.generating_function_rhs(0.9)) < 1e-12
    with pytest.raises(AccuracyError):
        hs.generating_function_lhs(0.995)


@given(st.floats(min_value=-0.95, max_value=0.95))
def test_generating_function_is_even(x):
    assert hs.generating_function_lhs(x) == hs.generating_function_lhs(-x)


def test_w_and_c_coefficients():
    assert hs.w_coefficient(1) == Fraction(-1, 6)
    assert hs.w_coefficient(2) == Fraction(7, 180)
    assert hs.c_coefficient_series(2) == Fraction(1, 36)
    with pytest.raises(DomainError):
        hs.w_coefficient(0)
    with pytest.raises(DomainError):
        hs.c_coefficient_series(1)


def test_w_coefficients_are_taylor_of_log_tanh():
    # (log tanh x - log x)/2 = sum w_n x^(2n)
    x = mpmath.mpf("0.3")
    lhs = (mpmath.log(mpmath.tanh(x)) - mpmath.log(x)) / 2
    rhs = sum(mpmath.mpf(hs.w_coefficient(n).numerator) / hs.w_coefficient(n).denominator * x ** (2 * n) for n in range(1, 30))
    assert abs(lhs - rhs) < 1e-25


def test_w_function_examples(ctx):
    assert abs(hs.w_function(0.0, ctx) - 1.75 * Z3) < 1e-13
    assert hs.w_function(1.0, ctx) < hs.w_function(0.0, ctx)
    n = np.arange(1, 2_000_001)
    hn = np.cumsum(1.0 / (2 * n - 1.0))
    partial = math.fsum(hn / (n.astype(float) ** 2 + 1.0))
    tail_bound = hs.w_function_bound(2_000_000)
    assert partial <= hs.w_function(2 * math.pi, ctx) <= partial + tail_bound
    with pytest.raises(DomainError):
        hs.w_function(-1.0)


def test_w_values_vectorized(ctx):
    y = np.array([0.0, 0.5, 3.0, 40.0, 200.0])
    got = hs.w_values(y)
    for yi, gi in zip(y, got):
        assert abs(gi - hs.w_function(float(yi), ctx)) < 1e-13
    with pytest.raises(DomainError):
        hs.w_values(np.array([1000.0]))


def test_h_kernel_sum_pole():
    with pytest.raises(PoleError):
        hs.h_kernel_sum(-4.0)


def test_classical_euler_sums(ctx):
    lhs, rhs = hs.classical_euler_sums("euler_Hn", 2, ctx)
    assert abs(lhs / 2 - 2 * Z3) < 1e-12 and abs(lhs - rhs) < 1e-12
    lhs, rhs = hs.classical_euler_sums("zeta_even_recursion", 2, ctx)
    assert abs(lhs - 2 * riemann_zeta(2) ** 2) < 1e-13 and abs(lhs - rhs) < 1e-13
    lhs, rhs = hs.classical_euler_sums("georghiou_philippou", 1, ctx)
    assert abs(lhs - math.pi**4 / 72) < 1e-12 and abs(lhs - rhs) < 1e-12
    with pytest.raises(DomainError):
        hs.classical_euler_sums("euler_Hn", 1, ctx)

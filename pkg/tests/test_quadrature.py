import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hzeta import AccuracyError, DomainError, PrecisionContext
from hzeta.continuation import zeta_h
from hzeta.h_series import h, zeta_h_series
from hzeta.quadrature import (
    Integrand1D,
    K,
    T,
    integrate_finite,
    integrate_piecewise,
    log_tan,
    log_tangent_integral,
    mellin_log_tanh,
    mellin_log_tanh_sq,
    vertical_line_integral,
)
from hzeta.special_functions import catalan_constant, gamma, hurwitz_zeta, riemann_zeta

HALF_PI = math.pi / 2


def test_integrate_finite_examples(ctx):
    assert abs(integrate_finite(lambda x: x, 0.0, 1.0, ctx).value - 0.5) < 1e-14
    assert abs(integrate_finite(log_tan, 0.0, HALF_PI, ctx, "log_at_both").value) < 1e-13
    sq = integrate_finite(lambda x: log_tan(x) ** 2, 0.0, HALF_PI, ctx, "log_at_both")
    assert abs(sq.value - math.pi**3 / 8) < 1e-10


@given(st.lists(st.floats(min_value=-3, max_value=3), min_size=1, max_size=11))
def test_polynomials_integrate_exactly(coeffs):
    ctx = PrecisionContext()
    p = np.polynomial.Polynomial(coeffs)
    exact = p.integ()(1.0) - p.integ()(0.0)
    r = integrate_finite(lambda x: p(x), 0.0, 1.0, ctx)
    assert abs(r.value - exact) <= ctx.tol_abs


def test_integrate_finite_rejects_empty_interval():
    with pytest.raises(DomainError):
        integrate_finite(lambda x: x, 1.0, 1.0)


def test_unknown_singularity_hint():
    with pytest.raises(DomainError):
        Integrand1D(lambda x: x, "cusp")


def test_scalar_integrand():
    f = Integrand1D(math.cos, vectorized=False)
    assert abs(integrate_finite(f, 0.0, HALF_PI).value - 1.0) < 1e-13


def test_non_convergence_raises_with_best_value():
    ctx = PrecisionContext(quad_depth=4)
    with pytest.raises(AccuracyError) as exc:
        integrate_finite(lambda x: np.sin(200 * x), 0.0, 10.0, ctx, tol=1e-14)
    assert exc.value.value is not None


def test_piecewise_matches_single_interval(ctx):
    f = lambda x: np.exp(x) * np.cos(3 * x)  # noqa: E731
    a = integrate_finite(f, 0.0, 2.0, ctx).value
    b = integrate_piecewise(f, [0.0, 0.5, 1.3, 2.0], ctx).value
    assert abs(a - b) < 1e-13


@pytest.mark.parametrize("n", [1, 2, 3, 7, 40])
def test_log_tangent_sine(ctx, n):
    r = log_tangent_integral(lambda x: np.sin(4 * n * x), ctx, oscillation=n)
    assert abs(r.value + float(h(n)) / n) < 1e-10


def test_log_tangent_cosine_is_zero(ctx):
    assert abs(log_tangent_integral(lambda x: np.cos(4 * x), ctx).value) < 1e-12


def test_even_functions_are_orthogonal(ctx):
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.normal(size=5)
        f = lambda x, a=a: sum(a[k] * np.cos(4 * (k + 1) * x) for k in range(5))  # noqa: E731
        assert abs(log_tangent_integral(f, ctx).value) < 1e-10


def test_T_examples(ctx):
    assert T(0.0) == 0.0
    assert abs(T(0.25, ctx) + catalan_constant()) < 1e-12
    assert abs(T(0.1, ctx) - T(0.4, ctx)) < 1e-10
    assert abs(T(0.5, ctx)) < 1e-10


@pytest.mark.parametrize("r", [i / 20 for i in range(11)])
def test_T_symmetry_grid(ctx, r):
    assert abs(T(r, ctx) - T(0.5 - r, ctx)) < 1e-9


def test_T_full_result(ctx):
    res = T(0.3, ctx, full=True)
    ref = float(mpmath.quad(lambda x: mpmath.log(mpmath.tan(x)), [0, 0.3 * mpmath.pi]))
    assert abs(res.value - ref) < 1e-12
    assert res.error >= 0


def test_T_domain():
    with pytest.raises(DomainError):
        T(0.6)


@pytest.mark.parametrize("s", [2.0, 3.0, 2.5, 2 + 3j])
def test_mellin_log_tanh_sq(ctx, s):
    expected = 4 ** (2 - s) * complex(gamma(s - 1)) * complex(zeta_h_series(s, ctx))
    assert abs(complex(mellin_log_tanh_sq(s, ctx)) - expected) < 1e-10


def test_mellin_log_tanh_sq_at_two_is_chen(ctx):
    assert abs(mellin_log_tanh_sq(2.0, ctx) - 1.75 * riemann_zeta(3)) < 1e-10


def test_mellin_domain():
    with pytest.raises(DomainError):
        mellin_log_tanh_sq(1.0)
    with pytest.raises(DomainError):
        mellin_log_tanh(0.5)


def test_mellin_split_is_additive(ctx):
    s = 2.5
    head = float(mpmath.quad(lambda x: mpmath.log(mpmath.tanh(x)) ** 2 * x ** (s - 2), [0, 1]))
    assert abs(mellin_log_tanh_sq(s, ctx) - head - K(s, ctx)) < 1e-10


def test_K_positive_and_smooth(ctx):
    k2 = K(2.0, ctx)
    assert 0 < k2 < 4 * math.exp(-4) / 4 * 1.5
    hstep = 0.3
    second = (K(1 + hstep, ctx) - 2 * K(1.0, ctx) + K(1 - hstep, ctx)) / hstep**2
    assert math.isfinite(second)
    ref = float(mpmath.quad(lambda x: mpmath.log(mpmath.tanh(x)) ** 2 * x ** (-0.5), [1, mpmath.inf]))
    assert abs(K(1.5, ctx) - ref) < 1e-12


@pytest.mark.parametrize("s", [2.0, 3.0, 2.5])
def test_mellin_log_tanh(ctx, s):
    expected = 4 ** (1 - s) * gamma(s - 1) * hurwitz_zeta(s, 0.5)
    assert abs(mellin_log_tanh(s, ctx) - expected) < 1e-9


def test_vertical_line_gaussian(ctx):
    v = vertical_line_integral(lambda s: math.exp(-(s.imag**2)), 0.0, ctx)
    assert abs(v - math.sqrt(math.pi)) < 1e-10


def test_vertical_line_asymmetric(ctx):
    # g(t) = e^{-t^2} (1 + t/2) is not even; the odd part integrates to zero
    g = lambda s: math.exp(-(s.imag**2)) * (1 + s.imag / 2)  # noqa: E731
    assert abs(vertical_line_integral(g, 0.0, ctx, symmetric=False) - math.sqrt(math.pi)) < 1e-10


def test_vertical_line_parseval(ctx):
    def g(s):
        return abs(complex(mellin_log_tanh(s, ctx))) ** 2

    v = vertical_line_integral(g, 1.5, ctx) / (2 * math.pi)
    assert abs(v - gamma(1.0) * zeta_h(2.0)) < 1e-6


def test_vertical_line_no_decay():
    with pytest.raises(AccuracyError):
        vertical_line_integral(lambda s: 1.0, 0.0, max_height=10.0)


def test_error_estimates_are_honest(ctx):
    cases = [
        (lambda x: log_tan(x) ** 2, 0.0, HALF_PI, "log_at_both", math.pi**3 / 8),
        (lambda x: np.sqrt(x) * np.log(x), 0.0, 1.0, "log_at_0", -4 / 9),
        (lambda x: np.exp(-x) * np.cos(5 * x), 0.0, 3.0, "none",
         float(mpmath.quad(lambda x: mpmath.exp(-x) * mpmath.cos(5 * x), [0, 3]))),
    ]
    for f, a, b, kind, exact in cases:
        coarse = PrecisionContext(tol_abs=1e-6, tol_rel=1e-6)
        r = integrate_finite(f, a, b, coarse, kind)
        assert abs(r.value - exact) <= max(r.error, 1e-15)

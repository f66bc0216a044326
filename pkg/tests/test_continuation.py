import cmath
import math
import warnings
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hzeta import AccuracyError, ConditioningWarning, DomainError, PoleError
from hzeta import continuation as cont
from hzeta.exact_polynomials import bernoulli_polynomial
from hzeta.h_series import h, zeta_h_series
from hzeta.special_functions import euler_gamma, riemann_zeta

Z3 = riemann_zeta(3)
RES1 = math.log(2) + euler_gamma() / 2


def _mellin_reference(s):
    """zeta_h(s) for Re s > 1 by mpmath quadrature of the log^2 tanh Mellin integral."""
    s = mpmath.mpmathify(s)
    # x = exp(-u) tames the endpoint singularity at x = 0
    f = lambda u: mpmath.log(mpmath.tanh(mpmath.exp(-u))) ** 2 * mpmath.exp(-u * (s - 1))
    m = mpmath.quad(f, [-3, 0, 5, 20, 80, mpmath.inf])
    return complex(m / (4 ** (2 - s) * mpmath.gamma(s - 1)))


def test_zeta_h_examples(ctx):
    assert abs(cont.zeta_h(2, ctx) - 1.75 * Z3) < 1e-13
    assert abs(cont.zeta_h(-2.0, ctx)) < 1e-8
    assert abs(cont.zeta_h(2.5, ctx, method="mellin") - cont.zeta_h(2.5, ctx, method="series")) < 1e-10


@pytest.mark.parametrize("s", [1.2, 1.5, 3 + 1j, 2 - 5j])
def test_zeta_h_against_mpmath_mellin(ctx, s):
    ref = _mellin_reference(s)
    assert abs(complex(cont.zeta_h(s, ctx)) - ref) < 1e-9 * max(1.0, abs(ref))


@pytest.mark.parametrize("s", [0.5, 0.3, -0.5, "0.3+2j", -2.5, "-1.5+1j", 1.02, 0.98])
def test_mellin_and_g_route_agree(ctx, s):
    s = complex(s)
    a = complex(cont.zeta_h(s, ctx, method="mellin"))
    b = complex(cont.zeta_h(s, ctx, method="g_route"))
    assert abs(a - b) < 1e-9 * max(1.0, abs(a))


@pytest.mark.parametrize("s", [1.06, 1.2, 1.5])
def test_overlap_strip_series_vs_mellin(ctx, s):
    assert abs(cont.zeta_h(s, ctx, method="series") - cont.zeta_h(s, ctx, method="mellin")) < 1e-9


@pytest.mark.parametrize("s", [0.5 + 4j, 0.5 + 10j, -0.5 + 6j, 0.9 + 5j])
def test_em_continuation_agrees_with_mellin(ctx, s):
    a = cont.zeta_h(s, ctx, method="em", full=True)
    b = cont.zeta_h(s, ctx, method="mellin", full=True)
    assert abs(a.value - b.value) <= a.error + b.error + 1e-12


def test_auto_dispatch(ctx):
    assert cont.zeta_h(3.0, ctx, full=True).method == "series"
    assert cont.zeta_h(0.5, ctx, full=True).method == "mellin"
    assert cont.zeta_h(0.5 + 20j, ctx, full=True).method == "em"
    assert cont.zeta_h(-3.5 + 20j, ctx, full=True).method == "mellin"


def test_high_on_critical_line_is_stable(ctx):
    # the Mellin split cannot resolve this height; the continued series can
    r = cont.zeta_h(0.5 + 30j, ctx, full=True)
    assert r.error < 1e-10
    near = cont.zeta_h(0.5 + 30.001j, ctx)
    assert abs(near - r.value) < 0.05


@given(
    st.floats(min_value=-8, max_value=6),
    st.floats(min_value=0.05, max_value=6),
)
def test_conjugate_symmetry(sigma, t):
    s = complex(sigma, t)
    assume(cont.poles_near(s, 1e-3) is None)
    a = complex(cont.zeta_h(s))
    b = complex(cont.zeta_h(s.conjugate()))
    assert abs(b - a.conjugate()) <= 1e-12 * max(1.0, abs(a))


def test_real_input_gives_real_output(ctx):
    assert isinstance(cont.zeta_h(0.5, ctx), float)
    assert isinstance(cont.zeta_h(0.5 + 0j, ctx), complex)


@pytest.mark.parametrize("s, k", [(1, 0), (-1, 1), (-3, 2), (-9.0, 5)])
def test_pole_errors_carry_info(s, k):
    with pytest.raises(PoleError) as exc:
        cont.zeta_h(s)
    info = exc.value.info
    assert info.location == 1 - 2 * k
    assert info.order == (2 if k == 0 else 1)


def test_pole_message_names_the_residue():
    with pytest.raises(PoleError) as exc:
        cont.zeta_h(1)
    assert exc.value.info.describe() == "s=1, order 2, residue log2+γ/2"
    with pytest.raises(PoleError) as exc:
        cont.zeta_h(-1)
    assert exc.value.info.describe() == "s=-1, order 1, residue 1/48"


def test_near_pole_warns():
    with pytest.warns(ConditioningWarning):
        v = cont.zeta_h(1 + 1e-7)
    # (s-1)^-2 / 2 dominates
    assert abs(v * 1e-14 - 0.5) < 1e-6


def test_even_negative_integers_are_not_poles():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cont.zeta_h(-4.0)


def test_domain_limits():
    with pytest.raises(DomainError):
        cont.zeta_h(-151.0)
    with pytest.raises(DomainError):
        cont.zeta_h(2.0, method="magic")
    with pytest.raises(DomainError):
        cont.zeta_h(float("nan"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_zeros(ctx, n):
    assert abs(cont.zeta_h(-2.0 * n, ctx)) <= 1e-8


def test_residues(ctx):
    p0 = cont.pole_info(0, ctx)
    assert p0.order == 2
    assert p0.leading_coefficient == 0.5
    assert abs(p0.residue - RES1) < 1e-15
    assert abs(p0.numeric_leading - 0.5) < 1e-6
    assert abs(p0.numeric_residue - RES1) < 1e-6
    p1 = cont.pole_info(1, ctx)
    assert p1.exact_residue == Fraction(1, 48)
    assert abs(p1.numeric_residue - 1 / 48) < 1e-6
    p2 = cont.pole_info(2, ctx)
    assert p2.exact_residue == -bernoulli_polynomial(4)(Fraction(1, 2)) / 8
    assert abs(p2.numeric_residue - float(p2.exact_residue)) < 1e-6
    with pytest.raises(DomainError):
        cont.pole_info(-1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_residue_matches_w_coefficient(k):
    # -w_k 4^(-2k) (2k)! = -B_2k(1/2)/(4k)
    from hzeta.h_series import w_coefficient

    assert -w_coefficient(k) * Fraction(math.factorial(2 * k), 4 ** (2 * k)) == cont.pole_info(k, numeric=False).exact_residue


def test_laurent_limit_by_approach(ctx):
    eps = 1e-3
    v = cont.zeta_h(1 + eps, ctx)
    # (s-1)^2 zeta_h -> 1/2 with slope equal to the residue
    assert abs(eps**2 * v - 0.5 - RES1 * eps) < 1e-5


@pytest.mark.parametrize("s", [2.2, 2.5, 3.5, 4.0, 2 + 2j])
def test_hurwitz_route(ctx, s):
    a = complex(cont.zeta_h_via_hurwitz(s, ctx))
    b = complex(zeta_h_series(s, ctx))
    assert abs(a - b) < 1e-9


def test_hurwitz_route_domain():
    with pytest.raises(DomainError):
        cont.zeta_h_via_hurwitz(0.5)
    with pytest.raises(DomainError):
        cont.zeta_h_via_hurwitz(3.0)


@pytest.mark.parametrize("z", [-1.0, 0.5, -2.5, -0.5 + 1j, 0.3 - 2j])
def test_G_paths_agree(ctx, z):
    a = cont.G(z, ctx, path="direct", full=True)
    b = cont.G(z, ctx, path="w_integral", full=True)
    assert abs(a.value - b.value) < 1e-9


def test_G_against_mpmath(ctx):
    z = -0.5
    ref = float(mpmath.quad(lambda x: mpmath.zeta(z, 2 * x / mpmath.pi) * mpmath.log(mpmath.tan(x)),
                            [0, mpmath.pi / 4, mpmath.pi / 2]))
    assert abs(cont.G(z, ctx) - ref) < 1e-11


def test_G_chained_to_zeta_h(ctx):
    s = 3.5
    factor = (2 * math.pi) ** (s - 1) / (2 * math.gamma(s - 1) * math.cos(math.pi * s / 2))
    assert abs(factor * cont.G(2 - s, ctx) - zeta_h_series(s, ctx)) < 1e-9


def test_G_error_estimate_is_honest_far_left(ctx):
    z = -10.5
    ref = float(mpmath.quad(lambda x: mpmath.zeta(z, 2 * x / mpmath.pi) * mpmath.log(mpmath.tan(x)),
                            [0, mpmath.pi / 4, mpmath.pi / 2]))
    for path in ("direct", "w_integral"):
        r = cont.G(z, ctx, path=path, full=True)
        assert abs(r.value - ref) <= r.error + 1e-13


@pytest.mark.parametrize("z", [1, 3, 5])
def test_G_poles(z):
    with pytest.raises(PoleError):
        cont.G(z)


def test_G_unknown_path():
    with pytest.raises(DomainError):
        cont.G(0.5, path="nope")


def test_alpha_beta(ctx):
    assert abs(cont.beta(1, ctx) - 1.75 * Z3 / math.pi**3) < 1e-15
    assert abs(cont.beta(1, ctx) - 1.75 * cont.alpha(1, ctx)) < 1e-15
    ab = cont.alpha_beta(6, ctx)
    assert all(v > 0 for v in ab.alpha + ab.beta)
    for n in range(2, 7):
        assert abs(cont.recursion_residual(n, ctx)) < 1e-10
    with pytest.raises(DomainError):
        cont.alpha(0)
    with pytest.raises(DomainError):
        cont.recursion_residual(1)


@pytest.mark.parametrize("x, tol", [(1e-4, 1e-12), (0.5, 1e-10), (1.0, 1e-8)])
def test_tan_series(ctx, x, tol):
    lhs, rhs = cont.tan_series_check(x, ctx)
    assert abs(lhs - rhs) < tol


def test_tan_series_limit():
    with pytest.raises(AccuracyError):
        cont.tan_series_check(1.3)


@pytest.mark.parametrize("z", [0, 1, 1 + 1j, 3])
def test_exp_kernel(ctx, z):
    lhs, rhs = cont.exp_kernel_identity(z, ctx)
    assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))


def test_exp_kernel_rejects_integer_points():
    with pytest.raises(DomainError):
        cont.exp_kernel_identity(2j + 1e-6)


@pytest.mark.parametrize("k", [1, 2, -3, 6])
def test_exp_kernel_limit(ctx, k):
    lhs, rhs = cont.exp_kernel_limit(k, ctx)
    assert abs(rhs - (-1j * float(h(abs(k))) / k)) == 0
    assert abs(lhs - rhs) < 1e-10


@pytest.mark.parametrize("z", [0.5, 1, 2, 1e-3, 0.7 + 0.4j])
def test_digamma_identity(ctx, z):
    lhs, rhs = cont.digamma_identity_check(z, ctx)
    assert abs(lhs - rhs) < 1e-10


def test_digamma_identity_singular_points():
    with pytest.raises(DomainError):
        cont.digamma_identity_check(0)
    with pytest.raises(DomainError):
        cont.digamma_identity_check(2j)


@pytest.mark.parametrize("n", [1, 2])
def test_zhodd_polylog(ctx, n):
    lhs, rhs = cont.zhodd_polylog_check(n, ctx)
    assert abs(lhs.imag + zeta_h_series(2 * n + 1, ctx)) < 1e-10
    assert abs(lhs.real) < 1e-10
    assert rhs == -1j * zeta_h_series(2 * n + 1, ctx)


def test_hurwitz_sum(ctx):
    r = cont.hurwitz_sum(3.0, ctx, full=True)
    assert abs(r.value - zeta_h_series(3, ctx)) < 1e-10
    with pytest.raises(DomainError):
        cont.hurwitz_sum(1.0)


def test_power_part_matches_definition(ctx):
    # G(z) - power part is the smooth integral against zeta(z, 1 + 2x/pi)
    z = -0.25
    total = cont.G(z, ctx)
    smooth = float(mpmath.quad(lambda x: mpmath.zeta(z, 1 + 2 * x / mpmath.pi) * mpmath.log(mpmath.tan(x)),
                               [0, mpmath.pi / 4, mpmath.pi / 2]))
    assert abs(complex(cont.power_part(z, ctx)) - (total - smooth)) < 1e-11
    assert cmath.isfinite(complex(cont.power_part(0.5 + 2j, ctx)))

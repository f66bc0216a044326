"""Tanh-sinh quadrature and the integrals built on it: log-tangent integrals,
the transformation T(r), the Mellin transform of log^2(tanh x), its entire tail K(s),
and integrals along vertical lines.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .context import AccuracyError, DomainError, PrecisionContext, resolve

__all__ = [
    "Integrand1D",
    "QuadResult",
    "integrate_finite",
    "integrate_piecewise",
    "log_tan",
    "log_tanh",
    "log_tangent_integral",
    "T",
    "mellin_log_tanh_sq",
    "mellin_log_tanh",
    "K",
    "vertical_line_integral",
]

SINGULARITY_KINDS = ("none", "log_at_0", "log_at_both", "algebraic_log_at_0")

# t-range of the tanh-sinh rule on a regular side and on a hinted side
_TMAX_REGULAR = 4.0
_TMAX_SINGULAR = 6.5
_MIN_LEVELS = 3


@dataclass(frozen=True)
class Integrand1D:
    """Integrand plus a hint about endpoint singularities.

    ``evaluator`` receives a NumPy array of abscissae when ``vectorized`` is
    true, otherwise one float at a time.  ``exponent`` documents the
    algebraic order for ``algebraic_log_at_0``.
    """

    evaluator: Callable
    singularity: str = "none"
    exponent: float | None = None
    vectorized: bool = True

    def __post_init__(self):
        if self.singularity not in SINGULARITY_KINDS:
            raise DomainError(f"unknown singularity hint {self.singularity!r}", self.singularity)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        if self.vectorized:
            return np.asarray(self.evaluator(x))
        return np.array([self.evaluator(float(v)) for v in x])


class QuadResult(NamedTuple):
    value: float | complex
    error: float


def _as_integrand(f, singularity: str | None) -> Integrand1D:
    if isinstance(f, Integrand1D):
        if singularity is not None and singularity != f.singularity:
            return Integrand1D(f.evaluator, singularity, f.exponent, f.vectorized)
        return f
    return Integrand1D(f, singularity or "none")


@functools.cache
def _level_nodes(level: int, tmax: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nonnegative tanh-sinh abscissae new at ``level``.

    Returns ``(t, d, w)`` with ``d = 1 - tanh(pi/2 sinh t)`` (distance to the
    endpoint, computed without cancellation) and the standard weight ``w``.
    """
    h = 2.0**-level
    if level == 0:
        t = np.arange(0.0, tmax + 1e-12, 1.0)
    else:
        t = np.arange(h, tmax + 1e-12, 2 * h)
    u = 0.5 * np.pi * np.sinh(t)
    e = np.exp(-2 * u)
    d = 2 * e / (1 + e)
    w = 0.5 * np.pi * np.cosh(t) * 4 * e / (1 + e) ** 2
    t.flags.writeable = d.flags.writeable = w.flags.writeable = False
    return t, d, w


def _sides(kind: str) -> tuple[float, float]:
    if kind == "log_at_both":
        return _TMAX_SINGULAR, _TMAX_SINGULAR
    if kind in ("log_at_0", "algebraic_log_at_0"):
        return _TMAX_SINGULAR, _TMAX_REGULAR
    return _TMAX_REGULAR, _TMAX_REGULAR


def integrate_finite(
    f,
    a: float,
    b: float,
    ctx: PrecisionContext | None = None,
    singularity: str | None = None,
    tol: float | None = None,
) -> QuadResult:
    """Tanh-sinh quadrature of ``f`` over (a, b).

    Levels halve the step until two successive estimates differ by less than
    ``max(tol_abs, tol_rel*|I|)`` (or ``tol`` when given); that difference is
    returned as the error estimate.  Raises :class:`AccuracyError` (carrying
    the best value) if ``ctx.quad_depth`` levels are not enough.
    """
    ctx = resolve(ctx)
    if not a < b:
        raise DomainError("integrate_finite needs a < b", (a, b))
    g = _as_integrand(f, singularity)
    tl, tr = _sides(g.singularity)
    half = 0.5 * (b - a)
    acc = 0.0
    absacc = 0.0
    prev = None
    err = math.inf
    for level in range(ctx.quad_depth + 1):
        h = 2.0**-level
        t, d, w = _level_nodes(level, max(tl, tr))
        xs, ws = [], []
        right = t <= tr
        xs.append(b - half * d[right])
        ws.append(w[right])
        left = (t <= tl) & (t > 0)
        xs.append(a + half * d[left])
        ws.append(w[left])
        x = np.concatenate(xs)
        wt = np.concatenate(ws)
        keep = (x > a) & (x < b) & (wt > 1e-300)
        x, wt = x[keep], wt[keep]
        if x.size:
            fx = g(x)
            contrib = wt * fx
            acc = acc + contrib.sum()
            absacc += float(np.abs(contrib).sum())
        est = half * h * acc
        if prev is not None:
            err = abs(est - prev)
            floor = 64 * 2.2e-16 * half * h * absacc
            target = tol if tol is not None else ctx.tol_for(est)
            if level >= _MIN_LEVELS and err <= max(target, floor):
                err = max(err, floor) if err > 0 else floor
                return QuadResult(_clean(est), err)
        prev = est
    raise AccuracyError(
        f"tanh-sinh did not converge in {ctx.quad_depth} levels (estimate {err:.3g})",
        _clean(prev),
        err,
    )


def _clean(v):
    v = complex(v)
    return v.real if v.imag == 0 else v


def integrate_piecewise(
    f,
    breakpoints: Sequence[float],
    ctx: PrecisionContext | None = None,
    first: str = "log_at_0",
    last: str = "log_at_both",
    tol: float | None = None,
) -> QuadResult:
    """Sum of tanh-sinh integrals over consecutive breakpoint intervals.

    The first and last pieces get the given singularity hints; interior
    pieces are treated as regular.
    """
    ctx = resolve(ctx)
    g = _as_integrand(f, None)
    pieces = list(zip(breakpoints[:-1], breakpoints[1:]))
    per_tol = (tol if tol is not None else ctx.tol_abs) / max(1, len(pieces))
    total = 0j
    err = 0.0
    for i, (lo, hi) in enumerate(pieces):
        kind = first if i == 0 else "none"
        if i == len(pieces) - 1:
            kind = last if len(pieces) > 1 else "log_at_both"
        r = integrate_finite(g.evaluator if g.vectorized else g, lo, hi, ctx, kind, tol=per_tol)
        total += r.value
        err += r.error
    return QuadResult(_clean(total), err)


# Log-tangent integrals -----------------------------------------------------


def log_tan(x):
    """log(tan x) on (0, pi/2), accurate near both endpoints."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    lo = x <= np.pi / 4
    out[lo] = np.log(np.tan(x[lo]))
    out[~lo] = -np.log(np.tan(np.pi / 2 - x[~lo]))
    return out if out.ndim else float(out)


def log_tanh(x):
    """log(tanh x) for x > 0 without cancellation for large x."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < 0.5
    out[small] = np.log(np.tanh(x[small]))
    xl = x[~small]
    with np.errstate(over="ignore"):
        out[~small] = np.log1p(-2.0 / (np.exp(2 * xl) + 1.0))
    return out if out.ndim else float(out)


def log_tangent_integral(
    f, ctx: PrecisionContext | None = None, oscillation: int = 0, tol: float | None = None
) -> QuadResult:
    """L(f) = int_0^{pi/2} f(x) log(tan x) dx.

    ``oscillation=n`` declares that f oscillates like sin(4nx); for n > 32 the
    interval is cut at the zeros k*pi/(4n) so each piece stays smooth.
    """
    ctx = resolve(ctx)
    g = _as_integrand(f, None)

    def integrand(x):
        return g(x) * log_tan(x)

    if oscillation > 32:
        n = int(oscillation)
        bps = [k * np.pi / (4 * n) for k in range(2 * n + 1)]
        bps[-1] = np.pi / 2
        return integrate_piecewise(integrand, bps, ctx, tol=tol)
    return integrate_finite(integrand, 0.0, np.pi / 2, ctx, "log_at_both", tol=tol)


def T(r: float, ctx: PrecisionContext | None = None, full: bool = False):
    """T(r) = int_0^{r pi} log(tan x) dx, 0 <= r <= 1/2.

    With ``full=True`` returns the :class:`QuadResult` ``(value, error)``.
    """
    ctx = resolve(ctx)
    if not 0 <= r <= 0.5:
        raise DomainError("T(r) needs 0 <= r <= 1/2", r)
    if r == 0:
        return QuadResult(0.0, 0.0) if full else 0.0
    kind = "log_at_both" if r > 0.45 else "log_at_0"
    res = integrate_finite(log_tan, 0.0, r * np.pi, ctx, kind, tol=ctx.tol_abs * 1e-2)
    return res if full else res.value


# Mellin transforms of log tanh ---------------------------------------------


def _decay_cutoff(sigma: float, tol: float, rate: float = 4.0) -> float:
    # integrand ~ 4 e^{-rate X} X^{sigma-2}; push the neglected tail below tol
    x = 2.0
    while 4 * math.exp(-rate * x) * x ** max(sigma - 2, 0.0) * max(1.0, x / rate) > tol * 1e-3:
        x += 1.0
    return x


def _mellin_piece(s: complex, lo: float, hi: float, kind: str, ctx: PrecisionContext, power: int):
    sm2 = s - 2

    def integrand(x):
        lt = log_tanh(x)
        return lt**power * np.exp(sm2 * np.log(x))

    return integrate_finite(integrand, lo, hi, ctx, kind, tol=ctx.tol_abs * 1e-3)


def K(s, ctx: PrecisionContext | None = None):
    """K(s) = int_1^inf log^2(tanh x) x^(s-2) dx; entire in s."""
    ctx = resolve(ctx)
    z = complex(s)
    top = _decay_cutoff(z.real, ctx.tol_abs)
    r = _mellin_piece(z, 1.0, top, "none", ctx, 2)
    return _real_if(s, r.value)


def _real_if(s, v):
    v = complex(v)
    return v.real if isinstance(s, (int, float)) else v


def mellin_log_tanh_sq(s, ctx: PrecisionContext | None = None):
    """int_0^inf log^2(tanh x) x^(s-2) dx for Re s > 1, split at x = 1."""
    ctx = resolve(ctx)
    z = complex(s)
    if z.real <= 1:
        raise DomainError("Mellin integral of log^2 tanh needs Re s > 1", s)
    head = _mellin_piece(z, 0.0, 1.0, "algebraic_log_at_0", ctx, 2).value
    return _real_if(s, head + complex(K(z, ctx)))


def mellin_log_tanh(s, ctx: PrecisionContext | None = None):
    """H(s) = -int_0^inf log(tanh x) x^(s-2) dx for Re s > 1."""
    ctx = resolve(ctx)
    z = complex(s)
    if z.real <= 1:
        raise DomainError("Mellin integral of log tanh needs Re s > 1", s)
    top = _decay_cutoff(z.real, ctx.tol_abs, rate=2.0)
    head = _mellin_piece(z, 0.0, 1.0, "algebraic_log_at_0", ctx, 1).value
    tail = _mellin_piece(z, 1.0, top, "none", ctx, 1).value
    return _real_if(s, -(head + tail))


# Vertical lines ---------------------------------------------------------------


def vertical_line_integral(
    g: Callable[[complex], float],
    sigma: float,
    ctx: PrecisionContext | None = None,
    symmetric: bool = True,
    chunk: float = 2.0,
    max_height: float = 400.0,
) -> float:
    """int_{-inf}^{inf} g(sigma + i t) dt for an integrand decaying in |t|.

    Integrates chunks [T, T + chunk] outward until the geometric tail bound
    c_k q / (1 - q), q = |c_k / c_{k-1}|, drops below tol_abs.  With
    ``symmetric`` the integrand is assumed to satisfy g(conj s) = g(s) and
    only t >= 0 is integrated.
    """
    ctx = resolve(ctx)

    def side(sign: float) -> float:
        total = 0.0
        prev = None
        t0 = 0.0
        while t0 < max_height:
            def fn(t, t_sign=sign):
                return np.array([float(g(complex(sigma, t_sign * tv))) for tv in t])

            c = integrate_finite(fn, t0, t0 + chunk, ctx, tol=ctx.tol_abs * 1e-3).value
            total += c
            t0 += chunk
            if prev is not None and prev != 0:
                q = abs(c / prev)
                if q < 0.9 and abs(c) * q / (1 - q) < ctx.tol_abs * 1e-2:
                    return total
            prev = c
        raise AccuracyError("vertical line integral did not decay", total, abs(prev or 0))

    if symmetric:
        return 2 * side(1.0)
    return side(1.0) + side(-1.0)

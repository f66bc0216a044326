"""Asymptotic expansions in x^(-u) (log x)^p and the series tails built on them.

A slowly convergent sum  sum_{n>=a} F(n)  is split into a direct part and a
tail; when F has an asymptotic expansion  F(x) ~ sum c x^(-u) (log x)^p  the
tail follows from Euler-Maclaurin (non-oscillatory weights) or from the
Euler-Boole type expansion  sum_{m>=0} z^m F(M+m) = sum_k F^(k)(M)/k! Li_{-k}(z)
(unimodular weights z^n, z != 1).  Both need only exact derivatives of each
term, which stay inside the same family.
"""

from __future__ import annotations

import cmath
import functools
import math
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .exact_polynomials import bernoulli_number

Term = tuple[complex, complex, int]  # coefficient, exponent u, log power p


@functools.cache
def _b2j_over_fact(j: int) -> float:
    return float(bernoulli_number(2 * j) / factorial(2 * j))


def _key(u: complex) -> tuple[float, float]:
    u = complex(u)
    return (round(u.real, 12), round(u.imag, 12))


class Expansion:
    """Finite sum of terms ``c * x**(-u) * log(x)**p``.

    Terms with Re u beyond ``order`` past the leading exponent are dropped on
    multiplication, so products stay bounded.
    """

    def __init__(self, terms: Iterable[Term] = (), order: float = 48.0):
        acc: dict[tuple, list] = {}
        for c, u, p in terms:
            if c == 0:
                continue
            k = (_key(u), p)
            if k in acc:
                acc[k][0] += c
            else:
                acc[k] = [complex(c), complex(u), int(p)]
        self.terms: list[Term] = [tuple(v) for v in acc.values() if v[0] != 0]
        self.order = order

    # construction -------------------------------------------------------
    def __add__(self, other: "Expansion") -> "Expansion":
        return Expansion(self.terms + other.terms, min(self.order, other.order))

    def scale(self, c: complex) -> "Expansion":
        return Expansion(((c * a, u, p) for a, u, p in self.terms), self.order)

    def shift(self, s: complex) -> "Expansion":
        """Multiply by x^(-s)."""
        return Expansion(((a, u + s, p) for a, u, p in self.terms), self.order)

    def __mul__(self, other: "Expansion") -> "Expansion":
        if not self.terms or not other.terms:
            return Expansion(order=min(self.order, other.order))
        lead = min(u.real for _, u, _ in self.terms) + min(u.real for _, u, _ in other.terms)
        order = min(self.order, other.order)
        out = []
        for a, u, p in self.terms:
            for b, v, q in other.terms:
                if (u + v).real <= lead + order:
                    out.append((a * b, u + v, p + q))
        return Expansion(out, order)

    def rescale(self, lam: float) -> "Expansion":
        """Expansion of F(lam * x)."""
        ll = math.log(lam)
        out = []
        for a, u, p in self.terms:
            base = a * cmath.exp(-u * ll)
            for j in range(p + 1):
                out.append((base * comb(p, j) * ll ** (p - j), u, j))
        return Expansion(out, self.order)

    # evaluation ---------------------------------------------------------
    def __call__(self, x: float) -> complex:
        lx = math.log(x)
        return sum(a * cmath.exp(-u * lx) * lx**p for a, u, p in self.terms)

    def derivative(self) -> "Expansion":
        out = []
        for a, u, p in self.terms:
            out.append((-u * a, u + 1, p))
            if p:
                out.append((p * a, u + 1, p - 1))
        return Expansion(out, self.order)

    def integral_from(self, a: float, continued: bool = False) -> complex:
        """int_a^inf F(x) dx; every term needs Re u > 1.

        ``continued`` allows any u != 1, giving the analytic continuation in u.
        """
        la = math.log(a)
        total = 0j
        for c, u, p in self.terms:
            v = u - 1
            if (v.real <= 0 and not continued) or v == 0:
                raise ValueError("tail integral diverges: exponent too small")
            inner = sum(
                factorial(p) / factorial(p - j) * la ** (p - j) / v ** (j + 1) for j in range(p + 1)
            )
            total += c * cmath.exp(-v * la) * inner
        return total

    def em_tail(
        self, a: float, step: float = 1.0, depth: int = 10, continued: bool = False
    ) -> tuple[complex, float]:
        """Euler-Maclaurin value of sum_{m>=0} F(a + m*step) and an error estimate.

        The estimate is the magnitude of the first omitted correction.
        ``continued`` returns the analytic continuation when the sum diverges.
        """
        val = self.integral_from(a, continued) / step + 0.5 * self(a)
        d = self.derivative()
        last = 0.0
        for j in range(1, depth + 2):
            corr = _b2j_over_fact(j) * step ** (2 * j - 1) * d(a)
            if j <= depth:
                val -= corr
            else:
                last = abs(corr)
            d = d.derivative().derivative()
        return val, last

    def oscillatory_tail(self, big_m: int, z: complex, depth: int = 8) -> tuple[complex, float]:
        """sum_{n>=M} z^n F(n) for |z| = 1, z != 1, and an error estimate."""
        val = 0j
        d = self
        last = 0.0
        zm = z**big_m
        for k in range(depth + 2):
            term = d(big_m) / factorial(k) * neg_polylog(k, z)
            if k <= depth:
                val += term
            else:
                last = abs(term)
            d = d.derivative()
        return zm * val, last


# Library of expansions ---------------------------------------------------------


@functools.cache
def _a_coeff(k: int) -> float:
    # h(x) correction: (1 - 2^(1-2k)) B_2k / (2k)
    return float((1 - Fraction(2) ** (1 - 2 * k)) * bernoulli_number(2 * k) / (2 * k))


def odd_harmonic_expansion(euler_gamma: float, depth: int = 12) -> Expansion:
    """h(x) = (psi(x + 1/2) - psi(1/2)) / 2 for large x."""
    terms = [(0.5, 0, 1), (math.log(2) + euler_gamma / 2, 0, 0)]
    terms += [(0.5 * _a_coeff(k), 2 * k, 0) for k in range(1, depth + 1)]
    return Expansion(terms)


def harmonic_expansion(euler_gamma: float, depth: int = 12) -> Expansion:
    """H(x) = psi(x + 1) + gamma for large x."""
    terms = [(1.0, 0, 1), (euler_gamma, 0, 0), (0.5, 1, 0)]
    terms += [(-float(bernoulli_number(2 * k)) / (2 * k), 2 * k, 0) for k in range(1, depth + 1)]
    return Expansion(terms)


def power(u: complex, c: complex = 1.0) -> Expansion:
    return Expansion([(c, u, 0)])


def inverse_quadratic(b: complex, depth: int = 24) -> Expansion:
    """1 / (x^2 + b) for x^2 > |b|."""
    return Expansion([((-b) ** j, 2 + 2 * j, 0) for j in range(depth)])


def inverse_linear(depth: int = 30) -> Expansion:
    """1 / (2x - 1) = sum_i 2^(-1-i) x^(-1-i)."""
    return Expansion([(2.0 ** (-1 - i), 1 + i, 0) for i in range(depth)])


def hurwitz_expansion(s: complex, depth: int = 14) -> Expansion:
    """zeta(s, x) for large x (the Euler-Maclaurin asymptotic series)."""
    terms = [(1 / (s - 1), s - 1, 0), (0.5, s, 0)]
    rising = s
    for j in range(1, depth + 1):
        terms.append((_b2j_over_fact(j) * rising, s + 2 * j - 1, 0))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return Expansion(terms)


# Polylogarithms of negative order ----------------------------------------------


@functools.cache
def _eulerian_row(k: int) -> tuple[int, ...]:
    row = [1]
    for n in range(2, k + 1):
        new = [0] * n
        for m in range(n):
            left = row[m - 1] if m >= 1 else 0
            here = row[m] if m < len(row) else 0
            new[m] = (m + 1) * here + (n - m) * left
        row = new
    return tuple(row)


def neg_polylog(k: int, z: complex) -> complex:
    """sum_{n>=0} n^k z^n in the Abel sense (z != 1); the n = 0 term counts only for k = 0."""
    if k == 0:
        return 1 / (1 - z)
    row = _eulerian_row(k)
    num = sum(a * z ** (m + 1) for m, a in enumerate(row))
    return num / (1 - z) ** (k + 1)

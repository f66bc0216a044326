"""Log-tangent integrals and odd harmonic numbers.

Run with ``python3 demos/log_tangent_integrals.py``.
"""

import numpy as np

from hzeta import T, catalan_constant, h, log_tangent_integral, riemann_zeta, zeta_h

print("Fourier coefficients of log tan x against sin(4nx):")
for n in range(1, 6):
    value = log_tangent_integral(lambda x, n=n: np.sin(4 * n * x), oscillation=n).value
    print(f"  n={n}: integral {value:+.15f}   -h_n/n {-float(h(n)) / n:+.15f}   h_n = {h(n)}")

print("\nThe transformation T(r) is symmetric about r = 1/4:")
for r in (0.05, 0.1, 0.2):
    print(f"  T({r}) = {T(r):+.15f}   T({0.5 - r:.2f}) = {T(0.5 - r):+.15f}")
print(f"  T(1/4) = {T(0.25):+.15f}   -Catalan = {-catalan_constant():+.15f}")

print("\nThe h-zeta function at s = 2:")
print(f"  zeta_h(2)      = {zeta_h(2):.15f}")
print(f"  7/4 zeta(3)    = {1.75 * riemann_zeta(3):.15f}")

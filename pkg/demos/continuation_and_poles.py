"""Analytic continuation of zeta_h: independent routes, poles and trivial zeros.

Run with ``python3 demos/continuation_and_poles.py``.
"""

import warnings

from hzeta import ConditioningWarning, PoleError, pole_info, zeta_h

print("Independent evaluation routes agree:")
for s in (0.5, -1.5 + 1j, 0.5 + 6j):
    paths = {m: complex(zeta_h(s, method=m)) for m in ("mellin", "g_route")}
    if abs(complex(s).imag) >= 4:
        paths["em"] = complex(zeta_h(s, method="em"))
    spread = max(abs(a - b) for a in paths.values() for b in paths.values())
    print(f"  s={s}: {paths['mellin']:.12f}  (spread over {len(paths)} routes {spread:.1e})")

print("\nPoles: a double pole at s=1, simple poles at s=1-2k")
for k in range(4):
    info = pole_info(k)
    print(f"  {info.describe():40s} numeric residue {complex(info.numeric_residue).real:+.12f}")

try:
    zeta_h(-3)
except PoleError as exc:
    print(f"\nEvaluating at a pole raises PoleError: {exc.info.describe()}")

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always", ConditioningWarning)
    v = zeta_h(1 + 1e-6)
print(f"Close to s=1 the value is {v:.6e} and a warning is issued: {bool(caught)}")

print("\nTrivial zeros at negative even integers:")
for n in (1, 2, 3):
    print(f"  zeta_h({-2 * n}) = {zeta_h(-2.0 * n):+.2e}")

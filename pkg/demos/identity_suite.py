"""Run the identity registry and show a few reports in detail.

Run with ``python3 demos/identity_suite.py``.
"""

from hzeta import run_identity, run_suite

result = run_suite(jobs=4)
print(result.summary_line())

for identity_id, params in (("LEMMA1", {"n": 3}), ("COR2", {"m": 2}), ("RESIDUE", {"k": 1})):
    r = run_identity(identity_id, params)
    print(f"\n{r.id} {r.params}: {r.reference}")
    print(f"  lhs {r.lhs_value!r}")
    print(f"  rhs {r.rhs_value!r}")
    print(f"  abs err {r.abs_err:.1e}, status {r.status}")

slowest = sorted(result.reports, key=lambda r: r.elapsed_ms, reverse=True)[:3]
print("\nSlowest instances:")
for r in slowest:
    print(f"  {r.id} {r.params}: {r.elapsed_ms:.0f} ms")

"""Dirichlet approximation and near-unimodular trigonometric moments.

Run with ``python3 demos/moments.py``.
"""
# %%
# Simultaneous approximation: one denominator b <= n serves every
# coordinate to within 1/(b n^(1/k)).
import math

from schauderkit import (
    geometric_irrational_measure,
    near_unimodular_exponent,
    simultaneous_approx,
    verify_bound,
)

x = [math.sqrt(2) % 1, math.sqrt(3) % 1]
for n in (10, 100, 1000):
    r = simultaneous_approx(x, n)
    print(f"n={n:5d}  b={r.b:4d}  a={r.a}  err={r.err:.2e}  ok={verify_bound(x, r, n)}")

# %%
# For a discrete measure, some moment nu^(b) is almost as large as the
# total mass. The search reports the first such b.
nu = geometric_irrational_measure(30)
for eps in (0.2, 0.1, 0.05):
    r = near_unimodular_exponent(nu, eps, 10**6)
    print(f"eps={eps:.2f}  b={r.b}  |moment|={r.moment_abs:.4f}  k={r.k}  ceiling={r.n}")

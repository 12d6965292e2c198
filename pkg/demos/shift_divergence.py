"""Multiplication by z as a shift, and why the monomials fail to be a basis.

Run with ``python3 demos/shift_divergence.py``.
"""
# %%
# On n equally weighted roots of unity, M_z in the monomial basis is
# exactly the cyclic permutation.
import numpy as np

from schauderkit import (
    DiscreteMeasure,
    geometric_irrational_measure,
    shift_divergence_experiment,
    shift_representation,
)

rep = shift_representation(DiscreteMeasure(np.arange(4) / 4, np.full(4, 0.25)), 4)
print(np.round(rep.companion.real, 12) + 0.0)

# %%
# For an irrational measure, truncating to more atoms makes some pair of
# monomials nearly parallel and the basis constant explodes.
rows = shift_divergence_experiment(geometric_irrational_measure(24), 24)
print(f"{'d':>3} {'M_d':>12} {'theta_min':>10} {'bound':>8}")
for r in rows:
    print(f"{r.d:3d} {r.basis_constant:12.4g} {r.min_angle:10.4f} {r.angle_bound:8.4f}")

"""Basis constants and angles of small Schauder systems.

Run with ``python3 demos/basis_constant.py``.
"""
# %%
# Two unit vectors at angle theta span C^2. The first natural projection
# kills the second vector, and its norm grows like 1/sin(theta).
import math

import numpy as np

from schauderkit import SchauderSystem, angle_bound, basis_constant, min_angle

for theta in (math.pi / 2, math.pi / 4, math.pi / 12, 0.01):
    s = SchauderSystem([[1.0, math.cos(theta)], [0.0, math.sin(theta)]])
    m = basis_constant(s).basis_constant
    print(f"theta={theta:.4f}  M={m:10.4f}  1/sin={1 / math.sin(theta):10.4f}")

# %%
# Random systems: the smallest pairwise angle never drops below the
# bound implied by the basis constant.
rng = np.random.default_rng(0)
for d in (3, 6, 12):
    f = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    s = SchauderSystem(SchauderSystem(f).normalized())
    m = basis_constant(s).basis_constant
    print(f"d={d:2d}  M={m:8.3f}  theta_min={min_angle(s):.4f}  bound={angle_bound(m):.4f}")

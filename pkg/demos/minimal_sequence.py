"""A minimal sequence whose angles collapse while M grows.

Run with ``python3 demos/minimal_sequence.py``.
"""
# %%
# Each 2x2 block pairs e1 with c e1 + sqrt(1-c^2) e2. As c -> 1 the pair
# becomes almost parallel, so no uniform basis constant can exist.
import math

from schauderkit import basis_constant, example_minimal_sequence, min_angle

print(f"{'N':>4} {'theta_min':>10} {'arccos(1-1/N)':>14} {'M':>9} {'sqrt(N/8)':>10}")
for n in (2, 4, 16, 64):
    s = example_minimal_sequence(n)
    m = basis_constant(s).basis_constant
    print(f"{n:4d} {min_angle(s):10.6f} {math.acos(1 - 1 / n):14.6f} {m:9.4f} {math.sqrt(n / 8):10.4f}")

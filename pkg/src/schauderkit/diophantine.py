"""Simultaneous rational approximation with a common bounded denominator.

For reals ``x_1..x_k`` and a ceiling ``n`` there is always a denominator
``0 < b <= n`` and integers ``a_i`` with ``|b x_i - a_i| <= n**(-1/k)``. The
solver finds the smallest such ``b`` by scanning.
"""
from dataclasses import dataclass

import numpy as np

#: Absolute slack added to ``n**(-1/k)`` to absorb rounding at the boundary.
BOUND_SLACK = 1e-12

_CHUNK = 1 << 16


@dataclass(frozen=True)
class ApproxResult:
    a: tuple
    b: int
    err: float
    satisfied: bool

    def to_json(self):
        return {"a": list(self.a), "b": self.b, "err": self.err, "satisfied": self.satisfied}


def _as_reals(x):
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1 or v.size == 0:
        raise ValueError("x must be a nonempty vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("x contains non-finite entries")
    return v


def threshold(n, k):
    """Allowed ``max_i |b x_i - a_i|`` for ceiling `n` in dimension `k`."""
    return float(n) ** (-1.0 / k) + BOUND_SLACK


def simultaneous_approx(x, n):
    """Smallest ``b`` in ``1..n`` with ``max_i |b x_i - round(b x_i)| <= n**(-1/k)``.

    ``a_i`` is the nearest integer to ``b x_i`` with ties to even. If no ``b``
    passes the test, which only rounding near the boundary can cause, the
    ``b`` with the smallest error is returned with ``satisfied=False``.
    """
    v = _as_reals(x)
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    limit = threshold(n, v.size)
    best = None
    for start in range(1, n + 1, _CHUNK):
        b = np.arange(start, min(start + _CHUNK, n + 1), dtype=float)[:, None]
        scaled = b * v[None, :]
        nearest = np.rint(scaled)
        errs = np.max(np.abs(scaled - nearest), axis=1)
        hits = np.flatnonzero(errs <= limit)
        if hits.size:
            i = int(hits[0])
            return ApproxResult(tuple(int(a) for a in nearest[i]), start + i, float(errs[i]), True)
        i = int(np.argmin(errs))
        if best is None or errs[i] < best.err:
            best = ApproxResult(tuple(int(a) for a in nearest[i]), start + i, float(errs[i]), False)
    return best


def verify_bound(x, result, n):
    """Independent re-check of ``|x_i - a_i/b| <= 1/(b n**(1/k))``."""
    v = _as_reals(x)
    a = np.asarray(result.a, dtype=float)
    if a.shape != v.shape:
        raise ValueError(f"result has {a.size} numerators for {v.size} reals")
    b = result.b
    if not 0 < b <= n:
        return False
    worst = float(np.max(np.abs(v - a / b)))
    return worst <= 1.0 / (b * float(n) ** (1.0 / v.size)) + BOUND_SLACK

"""Finite discrete measures on the unit circle and their monomial systems.

An atom sits at ``z = exp(2 pi i t)`` with ``t`` in ``[0, 1)``. Countable
measures are handled by truncation: a measure may carry a ``tail`` mass that
is not represented by atoms but still counts towards the total.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from .schauder import SchauderSystem


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Atoms ``(t_j, w_j)`` sorted by descending weight.

    Ties keep their input order. Positions are compared exactly; near
    duplicates are not merged.
    """

    t: np.ndarray
    w: np.ndarray
    tail: float = 0.0
    atom_mass: float = field(init=False)
    total_mass: float = field(init=False)

    def __post_init__(self):
        t = np.atleast_1d(np.asarray(self.t, dtype=float))
        w = np.atleast_1d(np.asarray(self.w, dtype=float))
        if t.ndim != 1 or t.shape != w.shape:
            raise ValueError("t and w must be 1-D arrays of equal length")
        if t.size == 0:
            raise ValueError("measure has no atoms")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(w))):
            raise ValueError("atom data contains non-finite values")
        if np.any((t < 0.0) | (t >= 1.0)):
            raise ValueError("atom positions must lie in [0, 1)")
        if np.any(w <= 0.0):
            raise ValueError("atom weights must be positive")
        if np.unique(t).size != t.size:
            raise ValueError("atom positions must be pairwise distinct")
        if not (math.isfinite(self.tail) and self.tail >= 0.0):
            raise ValueError("tail mass must be finite and nonnegative")
        order = np.argsort(-w, kind="stable")
        t, w = t[order], w[order]
        t.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "tail", float(self.tail))
        object.__setattr__(self, "atom_mass", float(math.fsum(w)))
        object.__setattr__(self, "total_mass", self.atom_mass + self.tail)

    def __len__(self):
        return self.t.size

    @property
    def points(self):
        return np.exp(2j * np.pi * self.t)

    def head(self, d):
        """The first `d` atoms as a measure, with the rest moved to the tail."""
        if not 1 <= d <= len(self):
            raise ValueError(f"cannot take {d} of {len(self)} atoms")
        rest = float(math.fsum(self.w[d:])) + self.tail
        return DiscreteMeasure(self.t[:d], self.w[:d], tail=rest)

    def normalized(self):
        s = self.total_mass
        return DiscreteMeasure(self.t, self.w / s, tail=self.tail / s)

    def l2_norm(self, values):
        """``L^2`` norm of a function given by its values at the atoms."""
        v = np.asarray(values, dtype=np.complex128)
        if v.shape != self.t.shape:
            raise ValueError(f"expected {len(self)} values, got shape {v.shape}")
        return math.sqrt(float(np.sum(np.abs(v) ** 2 * self.w)))

    def to_json(self):
        obj = {"atoms": [{"t": float(a), "w": float(b)} for a, b in zip(self.t, self.w)]}
        if self.tail:
            obj["tail"] = self.tail
        return obj

    @classmethod
    def from_json(cls, obj):
        try:
            atoms = obj["atoms"]
            t = [float(a["t"]) for a in atoms]
            w = [float(a["w"]) for a in atoms]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed measure object: {exc}") from None
        return cls(t, w, tail=float(obj.get("tail", 0.0)))


def geometric_irrational_measure(count, alpha=math.sqrt(2.0), ratio=0.5):
    """Atoms at ``frac(j * alpha)``, ``j = 1..count``, weights ``ratio**j``.

    The weights are normalized so the full countable measure has mass 1; the
    mass beyond `count` atoms is recorded as the tail.
    """
    j = np.arange(1, count + 1)
    t = np.mod(j * alpha, 1.0)
    scale = (1.0 - ratio) / ratio
    w = scale * ratio ** j.astype(float)
    return DiscreteMeasure(t, w, tail=ratio ** count)


@dataclass(frozen=True)
class MomentSearchResult:
    b: int
    moment_abs: float
    epsilon: float
    k: int
    delta: float
    n: int
    scanned: int
    satisfied: bool

    def to_json(self):
        return {
            "b": self.b,
            "moment_abs": self.moment_abs,
            "epsilon": self.epsilon,
            "k": self.k,
            "delta": self.delta,
            "n": self.n,
            "scanned": self.scanned,
            "satisfied": self.satisfied,
        }


def moment(nu, b):
    """Trigonometric moment ``sum_j w_j exp(2 pi i b t_j)``."""
    b = int(b)
    if b == 0:
        return complex(nu.atom_mass)
    phase = np.mod(b * nu.t, 1.0)
    return complex(np.sum(nu.w * np.exp(2j * np.pi * phase)))


def moments(nu, exponents):
    """Vectorized `moment` over an integer array of exponents."""
    e = np.asarray(exponents, dtype=np.int64)
    phase = np.mod(np.multiply.outer(e.astype(float), nu.t), 1.0)
    return np.exp(2j * np.pi * phase) @ nu.w


def tail_cutoff(nu, eps):
    """Smallest ``k`` whose leading atoms carry mass ``>= (1 - eps)`` of the total.

    ``eps >= 1`` is clamped so that ``k = 1``.
    """
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if eps >= 1.0:
        return 1
    head = np.cumsum(nu.w)
    need = (1.0 - eps) * nu.total_mass
    hits = np.flatnonzero(head >= need)
    if not hits.size:
        raise ValueError(
            f"represented atoms carry {head[-1]:.6g} of {nu.total_mass:.6g}; "
            f"tail too heavy for eps={eps}"
        )
    return int(hits[0]) + 1


def delta_for(eps):
    """Largest ``delta`` with ``cos(2 pi x) > 1 - eps`` and
    ``|sin(2 pi x)| < eps`` for all ``|x| < delta``."""
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    e = min(eps, 1.0)
    return min(math.acos(1.0 - e), math.asin(e)) / (2.0 * math.pi)


def dirichlet_ceiling(delta, k):
    """Smallest integer ``n`` with ``n**(1/k) > 1/delta``, computed exactly
    for the floating value of `delta`."""
    return math.floor(1 / Fraction(delta) ** k) + 1


_SCAN_CHUNK = 1 << 15


def near_unimodular_exponent(nu, eps, cap):
    """First exponent ``b >= 1`` with ``|moment(b)| > (1 - 4 eps) * mass``.

    Also reports the ingredients of the existence argument: the head size
    ``k`` from `tail_cutoff`, ``delta`` from `delta_for` and the ceiling
    ``n`` below which a qualifying ``b`` must exist. The scan itself runs
    directly over ``b`` and stops at the first hit or at `cap`, in which case
    the best exponent seen is returned with ``satisfied=False``.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    cap = int(cap)
    if cap < 1:
        raise ValueError("cap must be a positive integer")
    k = tail_cutoff(nu, eps)
    delta = delta_for(eps)
    n = dirichlet_ceiling(delta, k)
    target = (1.0 - 4.0 * eps) * nu.total_mass
    best_b, best_abs = 0, -1.0
    for start in range(1, cap + 1, _SCAN_CHUNK):
        b = np.arange(start, min(start + _SCAN_CHUNK, cap + 1))
        vals = np.abs(moments(nu, b))
        hits = np.flatnonzero(vals > target)
        if hits.size:
            i = int(hits[0])
            return MomentSearchResult(int(b[i]), float(vals[i]), eps, k, delta, n, int(b[i]), True)
        i = int(np.argmax(vals))
        if vals[i] > best_abs:
            best_b, best_abs = int(b[i]), float(vals[i])
    return MomentSearchResult(best_b, best_abs, eps, k, delta, n, cap, False)


def pushforward(nu, f_values):
    """Measure with weights ``|f(t_j)|^2 w_j``; atoms where ``f`` vanishes
    are dropped.

    Multiplication by ``f`` is then an isometry from ``L^2`` of the result
    into ``L^2(nu)``.
    """
    f = np.asarray(f_values, dtype=np.complex128)
    if f.shape != nu.t.shape:
        raise ValueError(f"expected {len(nu)} values, got shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("f_values contains non-finite entries")
    keep = f != 0
    if not np.any(keep):
        raise ValueError("f vanishes on every atom; the pushforward is empty")
    return DiscreteMeasure(nu.t[keep], np.abs(f[keep]) ** 2 * nu.w[keep])


def embed(nu, values, d=None):
    """Coordinates ``g(t_j) sqrt(w_j)`` of a function on the first `d` atoms."""
    d = len(nu) if d is None else d
    v = np.asarray(values, dtype=np.complex128)
    return v[:d] * np.sqrt(nu.w[:d])


def monomial_system(nu, exponents):
    """Columns ``z**e`` for each exponent, embedded on the first ``d`` atoms.

    ``d = len(exponents)``. The embedding ``g -> (g(t_j) sqrt(w_j))_j`` makes
    coordinate inner products equal ``L^2`` inner products of the truncated
    measure, so the Gram matrix is ``[moment(e_m' - e_m)]``.
    """
    e = np.asarray(exponents, dtype=np.int64)
    if e.ndim != 1 or e.size == 0:
        raise ValueError("exponents must be a nonempty vector")
    d = e.size
    if d > len(nu):
        raise ValueError(f"{d} exponents but only {len(nu)} atoms")
    if np.unique(e).size != d:
        raise ValueError("exponents must be pairwise distinct")
    phase = np.mod(np.multiply.outer(nu.t[:d], e.astype(float)), 1.0)
    f = np.sqrt(nu.w[:d])[:, None] * np.exp(2j * np.pi * phase)
    return SchauderSystem(f, labels=tuple(int(v) for v in e))


def interleave_enumeration(d):
    """First `d` integers in the order ``0, 1, -1, 2, -2, ...``."""
    if d < 1:
        raise ValueError("d must be positive")
    return [(i + 1) // 2 if i % 2 else -(i // 2) for i in range(d)]

"""Finite Schauder systems: natural projections, basis constant and angles.

A system is an ordered family of vectors ``f_1, ..., f_m`` in ``C^d`` stored
as the columns of a ``d x m`` matrix ``F``. With ``G*`` the left inverse of
``F`` and ``P_n`` the coordinate projection onto the first ``n`` entries, the
natural projections are ``Q_n = F P_n G*`` and the basis constant is
``M = max_n ||Q_n||``.

Indices of individual vectors (``k``, ``l``) are 0-based; the projection
index ``n`` counts leading vectors and runs from 1 to ``d``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .numerics import (
    as_matrix,
    left_inverse,
    matrix_from_json,
    matrix_to_json,
    top_singular_value,
)

#: Slack used when checking the angle inequality numerically.
THEOREM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SchauderSystem:
    """Ordered column family; `labels` optionally tags each column."""

    matrix: np.ndarray
    labels: tuple = None

    def __post_init__(self):
        m = as_matrix(self.matrix)
        norms = np.linalg.norm(m, axis=0)
        if np.any(norms == 0.0):
            bad = int(np.flatnonzero(norms == 0.0)[0])
            raise ValueError(f"column {bad} has zero norm")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if self.labels is not None:
            labels = tuple(int(v) for v in self.labels)
            if len(labels) != m.shape[1]:
                raise ValueError(f"{len(labels)} labels for {m.shape[1]} columns")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def count(self):
        return self.matrix.shape[1]

    @property
    def is_square(self):
        return self.dim == self.count

    def normalized(self):
        """Unit-norm columns, as an array."""
        return self.matrix / np.linalg.norm(self.matrix, axis=0)

    def to_json(self):
        obj = matrix_to_json(self.matrix)
        if self.labels is not None:
            obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json(cls, obj):
        return cls(matrix_from_json(obj), obj.get("labels"))


@dataclass(frozen=True)
class ProjectionReport:
    """Norms and idempotency residuals of ``Q_1, ..., Q_d``."""

    norms: np.ndarray
    idempotency_residuals: np.ndarray

    @property
    def basis_constant(self):
        return float(np.max(self.norms))

    @property
    def argmax(self):
        """Projection index ``n`` (1-based) attaining the basis constant."""
        return int(np.argmax(self.norms)) + 1

    def to_json(self):
        return {
            "basis_constant": self.basis_constant,
            "argmax_n": self.argmax,
            "norm_Qn": [float(v) for v in self.norms],
            "idempotency_residual": [float(v) for v in self.idempotency_residuals],
        }


@dataclass(frozen=True)
class AngleTheoremReport:
    basis_constant: float
    min_angle: float
    bound: float
    passed: bool

    def to_json(self):
        return {
            "M": self.basis_constant,
            "theta_min": self.min_angle,
            "bound": self.bound,
            "pass": self.passed,
        }


def _require_square(sys):
    if not sys.is_square:
        raise ValueError(
            f"system must be square to act as a basis, got {sys.dim}x{sys.count}"
        )


def _check_index(sys, k):
    if not 0 <= k < sys.count:
        raise IndexError(f"vector index {k} out of range for {sys.count} vectors")


def natural_projection(sys, n):
    """Return ``Q_n = F P_n G*``, the projection onto ``span(f_1..f_n)``
    along ``span(f_{n+1}..f_d)``."""
    _require_square(sys)
    if not 1 <= n <= sys.count:
        raise IndexError(f"projection index {n} not in 1..{sys.count}")
    g = left_inverse(sys.matrix)
    return sys.matrix[:, :n] @ g[:n, :]


def basis_constant(sys):
    """Compute ``||Q_n||`` and ``||Q_n^2 - Q_n||`` for every ``n``.

    Both quantities are read off triangular factors instead of forming each
    ``Q_n``: with ``F = U R`` and ``(G*)^H = V S`` (thin QR), the leading
    ``n`` columns factor the same way, so ``||Q_n|| = ||R_n S_n^H||`` and
    ``||Q_n^2 - Q_n|| = ||R_n (G*F - I)_n S_n^H||`` where ``X_n`` denotes the
    leading ``n x n`` block. Cost is one QR pair plus ``2d`` top singular
    values of at most ``d x d`` matrices.
    """
    _require_square(sys)
    f = sys.matrix
    g = left_inverse(f)
    r = np.linalg.qr(f, mode="r")
    s = np.linalg.qr(g.conj().T, mode="r")
    defect = g @ f - np.eye(sys.count)
    d = sys.count
    norms = np.empty(d)
    residuals = np.empty(d)
    for n in range(1, d + 1):
        rn = r[:n, :n]
        sn_h = s[:n, :n].conj().T
        norms[n - 1] = top_singular_value(rn @ sn_h)
        residuals[n - 1] = top_singular_value(rn @ defect[:n, :n] @ sn_h)
    return ProjectionReport(norms, residuals)


def _cosine(sys, k, l):
    fk = sys.matrix[:, k]
    fl = sys.matrix[:, l]
    c = abs(np.vdot(fk, fl)) / (np.linalg.norm(fk) * np.linalg.norm(fl))
    return min(max(float(c), 0.0), 1.0)


def angle(sys, k, l):
    """Angle ``arccos(|(f_k, f_l)| / (||f_k|| ||f_l||))`` in ``[0, pi/2]``."""
    _check_index(sys, k)
    _check_index(sys, l)
    if k == l:
        raise ValueError("angle needs two distinct vectors")
    return math.acos(_cosine(sys, k, l))


def cosine_matrix(sys):
    """Normalized absolute Gram matrix with the diagonal zeroed."""
    u = sys.normalized()
    c = np.abs(u.conj().T @ u)
    np.fill_diagonal(c, 0.0)
    return np.clip(c, 0.0, 1.0)


def closest_pair(sys):
    """Indices ``(k, l)``, ``k < l``, of the pair with the smallest angle."""
    if sys.count < 2:
        raise ValueError("need at least two vectors")
    rows, cols = np.triu_indices(sys.count, 1)
    i = int(np.argmax(cosine_matrix(sys)[rows, cols]))
    return int(rows[i]), int(cols[i])


def min_angle(sys):
    k, l = closest_pair(sys)
    return angle(sys, k, l)


def angle_bound(m):
    """Smallest angle a basis with constant `m` may have:
    ``arccos(1 - 1/(8 m^2))``."""
    if not m >= 1.0:
        raise ValueError(f"basis constant must be >= 1, got {m}")
    return math.acos(1.0 - 1.0 / (8.0 * m * m))


def pair_lower_bound(sys, k, l):
    """Lower bound on the basis constant forced by the pair ``f_k, f_l``.

    After normalizing and rotating ``f_l`` by a unimodular phase so that
    ``(f_k, f_l) >= 0``, the difference projection ``Q_k - Q_{k-1}`` maps
    ``(f_k - f_l)/||f_k - f_l||`` to ``f_k/||f_k - f_l||`` while its norm is
    at most ``2M``. Hence ``M >= 1 / (2 ||f_k - f_l||)``, which equals
    ``1 / (2 sqrt(2 (1 - cos theta_kl)))``. The distance is evaluated
    directly rather than through the cosine to keep accuracy at tiny angles.
    """
    _check_index(sys, k)
    _check_index(sys, l)
    if k == l:
        raise ValueError("pair bound needs two distinct vectors")
    u = sys.normalized()
    inner = np.vdot(u[:, l], u[:, k])
    phase = inner / abs(inner) if inner != 0 else 1.0
    dist = float(np.linalg.norm(u[:, k] - phase * u[:, l]))
    if dist == 0.0:
        raise ValueError(f"vectors {k} and {l} are collinear; the system is not minimal")
    return 1.0 / (2.0 * dist)


def verify_angle_theorem(sys, tol=THEOREM_TOL):
    """Check ``min_angle(sys) >= angle_bound(M) - tol``."""
    m = basis_constant(sys).basis_constant
    theta = min_angle(sys)
    # M < 1 only through rounding on orthonormal input
    bound = angle_bound(max(m, 1.0))
    return AngleTheoremReport(m, theta, bound, theta >= bound - tol)


def example_minimal_sequence(n_blocks):
    """Block-diagonal system whose angles have no positive lower bound.

    Block ``n`` (1-based) of the ``2N``-dimensional space holds the unit
    vectors ``(1, 0)`` and ``(c_n, sqrt(1 - c_n^2))`` with ``c_n = 1 - 1/n``;
    block 1 uses ``c_1 = 1/2`` so the system stays invertible. Every finite
    truncation is minimal, yet the smallest angle is ``arccos(1 - 1/N)``.
    """
    if n_blocks < 1:
        raise ValueError("need at least one block")
    d = 2 * n_blocks
    f = np.zeros((d, d), dtype=np.complex128)
    for n in range(1, n_blocks + 1):
        c = 0.5 if n == 1 else 1.0 - 1.0 / n
        i = 2 * (n - 1)
        f[i, i] = 1.0
        f[i, i + 1] = c
        f[i + 1, i + 1] = math.sqrt(1.0 - c * c)
    return SchauderSystem(f)


def random_system(rng, d):
    """Square system of ``d`` normalized complex Gaussian vectors."""
    f = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return SchauderSystem(f / np.linalg.norm(f, axis=0))

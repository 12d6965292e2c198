"""Multiplication by ``z`` on finite discrete ``L^2`` spaces as a shift.

With ``d`` distinct atoms, ``M_z`` is diagonal with distinct unimodular
eigenvalues, so any vector with no zero coordinate is cyclic and
``f, M_z f, ..., M_z^{d-1} f`` is a basis on which ``M_z`` moves each vector
to the next one. The image of the last vector is fixed by the
characteristic polynomial (companion form).
"""
from dataclasses import dataclass
import math

import numpy as np

from .measure import interleave_enumeration, monomial_system
from .numerics import RankDeficiencyError, as_matrix, inverse_condition, left_inverse
from .schauder import (
    SchauderSystem,
    angle_bound,
    basis_constant,
    closest_pair,
    min_angle,
    pair_lower_bound,
)


@dataclass(frozen=True, eq=False)
class ShiftRepresentation:
    mz: np.ndarray
    cyclic_vector: np.ndarray
    basis: SchauderSystem
    companion: np.ndarray

    @property
    def d(self):
        return self.mz.shape[0]

    def similarity_residual(self):
        """``||F C - M_z F||`` for basis matrix ``F`` and companion ``C``."""
        f = self.basis.matrix
        return float(np.linalg.norm(f @ self.companion - self.mz @ f, 2))

    def to_json(self):
        c = self.companion
        defect = np.abs(c[:, :-1] - shift_pattern(self.d)[:, :-1])
        return {
            "d": self.d,
            "eigenvalues": {"re": self.mz.diagonal().real.tolist(), "im": self.mz.diagonal().imag.tolist()},
            "companion_last_column": {"re": c[:, -1].real.tolist(), "im": c[:, -1].imag.tolist()},
            "subdiagonal_defect": float(defect.max()) if defect.size else 0.0,
            "similarity_residual": self.similarity_residual(),
            "inverse_condition": inverse_condition(self.basis.matrix),
        }


def shift_pattern(d):
    """``d x d`` matrix with ones on the subdiagonal."""
    return np.eye(d, k=-1, dtype=np.complex128)


def cyclic_permutation_matrix(n):
    """Integer matrix of ``e_k -> e_{k+1 mod n}``."""
    return np.roll(np.eye(n, dtype=np.int64), 1, axis=0)


def multiplication_matrix(nu, d):
    """``diag(exp(2 pi i t_j))`` over the first `d` atoms."""
    if not 1 <= d <= len(nu):
        raise ValueError(f"cannot use {d} of {len(nu)} atoms")
    return np.diag(nu.points[:d])


def shift_representation(nu, d, f=None):
    """Cyclic basis ``{M_z^k f}`` of the first `d` atoms and the matrix of
    ``M_z`` in it.

    `f` is given in embedded coordinates (``g(t_j) sqrt(w_j)``) and defaults
    to all ones. The companion matrix is computed as ``G* M_z F``, not from a
    polynomial expansion, so its structure is a genuine check.
    """
    mz = multiplication_matrix(nu, d)
    lam = mz.diagonal()
    if d > 1:
        gaps = np.abs(lam[:, None] - lam[None, :]) + np.eye(d)
        if np.min(gaps) == 0.0:
            raise ValueError("eigenvalues of M_z are not distinct")
    vec = np.ones(d, dtype=np.complex128) if f is None else np.asarray(f, dtype=np.complex128)
    if vec.shape != (d,):
        raise ValueError(f"cyclic vector must have length {d}")
    zero = np.flatnonzero(vec == 0)
    if zero.size:
        j = int(zero[0])
        raise ValueError(f"vector is not cyclic: zero coordinate at atom {j} (t={nu.t[j]!r})")
    cols = [vec]
    for _ in range(d - 1):
        cols.append(lam * cols[-1])
    basis = SchauderSystem(as_matrix(np.column_stack(cols)))
    g = left_inverse(basis.matrix)
    companion = g @ mz @ basis.matrix
    return ShiftRepresentation(mz, vec, basis, companion)


def characteristic_coefficients(eigenvalues):
    """Monic polynomial coefficients, highest degree first."""
    return np.poly(np.asarray(eigenvalues, dtype=np.complex128))


def cyclic_shift_eigenvalues(n, tol=1e-10):
    """The ``n`` eigenvalues ``exp(2 pi i k/n)``, ``k = 1..n``, of the cyclic
    permutation matrix.

    Each is checked against the matrix with its Fourier eigenvector
    ``v_j = lambda^{-j}``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = np.arange(1, n + 1)
    lam = np.exp(2j * np.pi * k / n)
    s = cyclic_permutation_matrix(n)
    j = np.arange(n)
    for value in lam:
        v = value ** (-j) / math.sqrt(n)
        res = np.linalg.norm(s @ v - value * v)
        if res > tol:
            raise ArithmeticError(f"eigen-residual {res:.3e} for eigenvalue {value}")
    return lam


@dataclass(frozen=True)
class DivergenceRow:
    d: int
    basis_constant: float = None
    min_angle: float = None
    angle_bound: float = None
    pair_bound: float = None
    flag: str = "ok"

    def as_tuple(self):
        return (self.d, self.basis_constant, self.min_angle, self.angle_bound, self.pair_bound, self.flag)


def shift_divergence_experiment(nu, d_max):
    """Basis diagnostics of ``z^0, z^1, z^-1, ...`` over growing truncations.

    Any basis on which ``M_z`` acts as a shift is a family ``z^m f``, so the
    monomial systems (``f = 1``) on the first ``d`` atoms are the finite
    sections to watch. One row per even ``d <= d_max``; rows whose system
    fails the rank test carry ``flag="rank-deficient"`` and no numbers.
    """
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    if d_max > len(nu):
        raise ValueError(f"d_max={d_max} exceeds the {len(nu)} atoms of the measure")
    rows = []
    for d in range(2, d_max + 1, 2):
        sys = monomial_system(nu, interleave_enumeration(d))
        try:
            m = basis_constant(sys).basis_constant
        except RankDeficiencyError:
            rows.append(DivergenceRow(d, flag="rank-deficient"))
            continue
        k, l = closest_pair(sys)
        rows.append(DivergenceRow(
            d,
            m,
            min_angle(sys),
            angle_bound(max(m, 1.0)),
            pair_lower_bound(sys, k, l),
        ))
    return rows

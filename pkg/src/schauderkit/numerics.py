"""Dense complex linear algebra used throughout the package.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``; the
helpers here validate them, compute induced 2-norms and left inverses, and
convert to and from the JSON interchange format::

    {"rows": r, "cols": c, "re": [...], "im": [...]}

with row-major flattening.
"""
import numpy as np
from scipy.sparse.linalg import ArpackNoConvergence, svds

#: Relative singular-value threshold below which a matrix is treated as
#: rank deficient.
RANK_TOL = 1e-12


class RankDeficiencyError(ValueError):
    """Raised when a matrix fails the ``sigma_min / sigma_max`` rank test."""

    def __init__(self, message, ratio=None):
        super().__init__(message)
        self.ratio = ratio


def as_matrix(a):
    """Return `a` as a finite, nonempty 2-D complex128 array.

    Raises
    ------
    ValueError
        If `a` is not two-dimensional, is empty, or contains NaN/Inf.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if m.size == 0:
        raise ValueError("matrix is empty")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def _singular_values(m):
    return np.linalg.svd(m, compute_uv=False)


# above this size the top singular value comes from Lanczos (ARPACK)
_DENSE_LIMIT = 96


def top_singular_value(m):
    """Largest singular value of an already validated matrix.

    Deterministic: ARPACK is started from the normalized all-ones vector.
    """
    n = min(m.shape)
    if n <= _DENSE_LIMIT:
        return float(_singular_values(m)[0])
    v0 = np.full(n, 1.0 / np.sqrt(n), dtype=np.complex128)
    try:
        s = svds(m, k=1, v0=v0, return_singular_vectors=False)
    except ArpackNoConvergence:
        return float(_singular_values(m)[0])
    return float(s[0])


def operator_norm(a):
    """Induced 2-norm (largest singular value) of `a`."""
    m = as_matrix(a)
    return float(_singular_values(m)[0])


def _check_rank(s):
    smax = s[0]
    if smax == 0.0:
        raise RankDeficiencyError("matrix is zero", ratio=0.0)
    ratio = s[-1] / smax
    if ratio < RANK_TOL:
        raise RankDeficiencyError(
            f"rank deficient: sigma_min/sigma_max = {ratio:.3e} < {RANK_TOL:g}",
            ratio=float(ratio),
        )
    return float(ratio)


def inverse_condition(a):
    """Return ``sigma_min / sigma_max`` for `a` (0 for the zero matrix)."""
    s = _singular_values(as_matrix(a))
    return 0.0 if s[0] == 0.0 else float(s[-1] / s[0])


def left_inverse(f):
    """Left inverse of a full-column-rank matrix.

    Parameters
    ----------
    f : array_like, shape (d, m)
        Matrix with ``m <= d`` linearly independent columns.

    Returns
    -------
    ndarray, shape (m, d)
        The Moore-Penrose left inverse ``G*`` with ``G* @ f = I``. For square
        input this is the ordinary inverse.

    Raises
    ------
    RankDeficiencyError
        If ``sigma_min / sigma_max < RANK_TOL`` or ``m > d``; the column
        family is then not minimal in the ambient space.
    """
    m = as_matrix(f)
    d, k = m.shape
    if k > d:
        raise RankDeficiencyError(f"{k} columns cannot be independent in dimension {d}")
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    _check_rank(s)
    return (vh.conj().T / s) @ u.conj().T


def solve(a, y):
    """Solve the square system ``a @ x = y``.

    Uses the same rank test as `left_inverse` before an LU solve.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"solve needs a square matrix, got shape {m.shape}")
    rhs = np.asarray(y, dtype=np.complex128)
    if rhs.shape[0] != m.shape[0]:
        raise ValueError(f"right-hand side has length {rhs.shape[0]}, expected {m.shape[0]}")
    if not np.all(np.isfinite(rhs)):
        raise ValueError("right-hand side contains non-finite entries")
    _check_rank(_singular_values(m))
    return np.linalg.solve(m, rhs)


def matrix_to_json(a):
    m = as_matrix(a)
    flat = m.ravel(order="C")
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "re": [float(v) for v in flat.real],
        "im": [float(v) for v in flat.imag],
    }


def matrix_from_json(obj):
    """Parse the matrix interchange object; ``"im"`` may be omitted."""
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        re = np.asarray(obj["re"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from None
    im = np.asarray(obj.get("im", np.zeros(re.shape)), dtype=float)
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    if re.shape != (rows * cols,) or im.shape != (rows * cols,):
        raise ValueError(
            f"re/im must each have length rows*cols = {rows * cols}, "
            f"got {re.size} and {im.size}"
        )
    return as_matrix((re + 1j * im).reshape(rows, cols))

"""Small dense linear-algebra kernel.

Everything in the simulator happens on 6x6 (or, after Kronecker
vectorization, 36x36) matrices, so this module only cares about small dense
problems.  Matrices are plain ``numpy.ndarray`` values; no wrapper types.

Eigenvalues are delegated to LAPACK's backward-stable QR implementation via
numpy.  The linear solve is a hand-rolled LU factorization with partial
pivoting so that near-singularity is detected against an explicit pivot
threshold (``1e-13 * ||M||_F``) instead of whatever the vendor library
happens to do.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "NonConvergence",
    "SingularMatrix",
    "eigenvalues",
    "solve_linear",
    "det",
    "kron",
]

#: Relative pivot threshold below which a matrix is declared singular.
PIVOT_RTOL = 1e-13


class NonConvergence(RuntimeError):
    """The eigenvalue iteration failed to converge."""


class SingularMatrix(RuntimeError):
    """A pivot fell below the singularity threshold during elimination."""


def _as_square(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def eigenvalues(a) -> np.ndarray:
    """All eigenvalues (with multiplicity) of a small square matrix.

    Parameters
    ----------
    a : array_like
        Real or complex square matrix.

    Returns
    -------
    ndarray of complex
        Unordered eigenvalues.  For real input, non-real values come in
        conjugate pairs.

    Raises
    ------
    NonConvergence
        If the underlying QR iteration does not converge.
    """
    a = _as_square(a)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as err:  # pragma: no cover - pathological
        raise NonConvergence(str(err)) from err


def _lu_factor(m: np.ndarray):
    """LU factorization with partial pivoting, in place on a copy.

    Returns (lu, piv, sign) where ``lu`` holds L (unit diagonal, below) and
    U (on and above the diagonal) and ``piv`` the row permutation.
    """
    lu = np.array(m, dtype=float, copy=True)
    n = lu.shape[0]
    piv = np.arange(n)
    sign = 1.0
    threshold = PIVOT_RTOL * np.linalg.norm(m, "fro")
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= threshold:
            raise SingularMatrix(
                f"pivot {abs(lu[p, k]):.3e} below threshold {threshold:.3e} "
                f"at column {k}")
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            piv[[k, p]] = piv[[p, k]]
            sign = -sign
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, piv, sign


def solve_linear(m, rhs) -> np.ndarray:
    """Solve ``m @ x = rhs`` by LU with partial pivoting.

    Parameters
    ----------
    m : array_like
        Square, numerically nonsingular real matrix.
    rhs : array_like
        Right-hand side vector (or matrix of stacked columns).

    Returns
    -------
    ndarray
        Solution with the same trailing shape as ``rhs``.

    Raises
    ------
    SingularMatrix
        If a pivot falls below ``1e-13 * ||m||_F``.
    """
    m = _as_square(m)
    b = np.asarray(rhs, dtype=float)
    lu, piv, _ = _lu_factor(m)
    x = b[piv].astype(float, copy=True)
    n = lu.shape[0]
    # forward substitution, L has unit diagonal
    for k in range(1, n):
        x[k] -= lu[k, :k] @ x[:k]
    # back substitution
    for k in range(n - 1, -1, -1):
        if k + 1 < n:
            x[k] -= lu[k, k + 1:] @ x[k + 1:]
        x[k] /= lu[k, k]
    return x


def det(a) -> float:
    """Determinant of a small real matrix via the pivoted LU factors."""
    a = _as_square(a)
    try:
        lu, _, sign = _lu_factor(a)
    except SingularMatrix:
        return 0.0
    return sign * float(np.prod(np.diag(lu)))


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices (thin wrapper around numpy)."""
    return np.kron(np.asarray(a), np.asarray(b))

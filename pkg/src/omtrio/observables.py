"""Steady-state figures of merit computed from a covariance matrix.

All quantities use the convention that the vacuum quadrature variance is
1/2, i.e. a product vacuum state has covariance ``I/2`` and physicality
means every symplectic eigenvalue is at least 1/2.

The module provides:

* mean phonon numbers of the two resonators,
* quadrature squeezing in dB (both the fixed-``X`` convention and the
  optimal rotated quadrature),
* bipartite logarithmic negativity ``E_N = max(0, -ln(2*nu_min))`` for any
  one-vs-one or one-vs-two split of the three modes,
* the minimum residual contangle, whose positivity certifies genuine
  tripartite entanglement.

Partitions are written as strings such as ``"a|b1"`` or ``"b1|ab2"`` where
``a`` is the cavity and ``b1``/``b2`` the two mechanical modes; the mode
left of the bar is the one whose ``Y`` quadrature is flipped by the partial
transpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import det, eigenvalues

__all__ = [
    "NotSymmetric",
    "NotPositive",
    "ObservablesRecord",
    "symplectic_form",
    "symplectic_eigenvalues",
    "phonon_numbers",
    "squeezing_db",
    "squeezing_db_optimal",
    "log_negativity",
    "closed_form_numin_two_mode",
    "residual_contangle",
    "compute_observables",
]

#: Mode labels in quadrature order.
MODE_INDEX = {"a": 0, "b1": 1, "b2": 2}


class NotSymmetric(ValueError):
    """Input matrix is not symmetric within tolerance."""


class NotPositive(ValueError):
    """Input matrix is not positive definite."""


@dataclass(frozen=True)
class ObservablesRecord:
    """All figures of merit for one steady state (``None`` when unstable).

    ``en_one_vs_two`` holds ``(E_N^{a|b1b2}, E_N^{b1|ab2}, E_N^{b2|ab1})``
    and ``residuals`` the corresponding residual contangles in the same
    focus-mode order.
    """

    stable: bool
    n1: float | None = None
    n2: float | None = None
    s_db_b1: float | None = None
    s_db_b2: float | None = None
    s_db_b1_opt: float | None = None
    s_db_b2_opt: float | None = None
    en_a_b1: float | None = None
    en_a_b2: float | None = None
    en_b1_b2: float | None = None
    en_one_vs_two: tuple[float, float, float] | None = None
    residuals: tuple[float, float, float] | None = None
    r_min: float | None = None


def symplectic_form(n: int) -> np.ndarray:
    """Direct sum of ``n`` blocks ``[[0, 1], [-1, 0]]``."""
    omega = np.zeros((2 * n, 2 * n))
    for k in range(n):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def symplectic_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a symmetric positive-definite 2n x 2n matrix.

    The eigenvalues of ``i * Omega @ m`` come in ``+-nu`` pairs; the ``n``
    positive members are returned sorted ascending.  Imaginary residues up
    to ``1e-9 * ||m||_F`` are discarded.

    Raises
    ------
    NotSymmetric, NotPositive
        Diagnostics for invalid input.
    """
    m = np.asarray(m, dtype=float)
    n2 = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n2 or n2 % 2:
        raise ValueError(f"expected an even-dimension square matrix, "
                         f"got shape {m.shape}")
    scale = np.linalg.norm(m, "fro")
    if np.linalg.norm(m - m.T, "fro") > 1e-8 * (1.0 + scale):
        raise NotSymmetric("matrix is not symmetric")
    if np.min(eigenvalues(m).real) <= 0.0:
        raise NotPositive("matrix is not positive definite")
    n = n2 // 2
    w = eigenvalues(1j * (symplectic_form(n) @ m))
    if np.max(np.abs(w.imag)) > 1e-9 * scale:
        raise NotPositive("symplectic spectrum has a large imaginary residue")
    vals = np.sort(np.abs(w.real))
    # each symplectic eigenvalue appears twice (the +- pair)
    return vals[::2]


def phonon_numbers(v: np.ndarray) -> tuple[float, float]:
    """Mean phonon numbers ``n_j = (V_XX + V_YY - 1)/2`` of both resonators.

    Tiny negative values in ``[-1e-9, 0)`` (numerical noise around the
    ground state) are clamped to 0.
    """
    out = []
    for j in (1, 2):
        i = 2 * j
        n = (v[i, i] + v[i + 1, i + 1] - 1.0) / 2.0
        if -1e-9 <= n < 0.0:
            n = 0.0
        out.append(float(n))
    return out[0], out[1]


def squeezing_db(v: np.ndarray, mode: int) -> float:
    """Squeezing of a resonator's ``X`` quadrature relative to vacuum, in dB.

    ``S_dB = -10 * log10(2 * <dX^2>)``; positive values mean the variance is
    below the zero-point value of 1/2, and ~3.01 dB marks variance 1/4.

    Parameters
    ----------
    v : ndarray
        6x6 covariance matrix.
    mode : int
        Mechanical mode id, 1 or 2.
    """
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    vxx = v[2 * mode, 2 * mode]
    if vxx <= 0:
        raise NotPositive("X variance must be positive")
    return -10.0 * math.log10(2.0 * vxx)


def squeezing_db_optimal(v: np.ndarray, mode: int) -> float:
    """Squeezing of the optimally rotated quadrature of a resonator, in dB.

    Uses the minor eigenvalue of the mode's 2x2 covariance block, i.e. the
    variance of the most-squeezed quadrature direction.
    """
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    i = 2 * mode
    a, b, c = v[i, i], v[i + 1, i + 1], v[i, i + 1]
    minor = 0.5 * (a + b) - math.hypot(0.5 * (a - b), c)
    if minor <= 0:
        raise NotPositive("covariance block is not positive definite")
    return -10.0 * math.log10(2.0 * minor)


def _tokenize_modes(s: str) -> list[int]:
    modes, i = [], 0
    while i < len(s):
        if s[i] == "a":
            modes.append(0)
            i += 1
        elif s[i] == "b" and i + 1 < len(s) and s[i + 1] in "12":
            modes.append(1 if s[i + 1] == "1" else 2)
            i += 2
        else:
            raise ValueError(f"cannot parse mode labels in {s!r}")
    return modes


def _parse_partition(partition: str) -> tuple[int, list[int]]:
    try:
        left, right = partition.split("|")
    except ValueError:
        raise ValueError(f"partition {partition!r} must contain exactly "
                         f"one '|'") from None
    focus = _tokenize_modes(left)
    others = _tokenize_modes(right)
    if len(focus) != 1 or len(others) not in (1, 2):
        raise ValueError(f"partition {partition!r} must be one mode vs one "
                         f"or two modes")
    all_modes = focus + others
    if len(set(all_modes)) != len(all_modes):
        raise ValueError(f"partition {partition!r} repeats a mode")
    return focus[0], others


def log_negativity(v: np.ndarray, partition: str) -> float:
    """Logarithmic negativity across a bipartition of the three modes.

    The partial transpose flips the ``Y`` quadrature of the focus mode
    (left of the bar); the negativity is ``max(0, -ln(2*nu))`` with ``nu``
    the smallest symplectic eigenvalue of the transposed matrix.  One-vs-one
    splits act on the reduced 4x4 covariance, one-vs-two on the full 6x6.

    Examples
    --------
    ``log_negativity(v, "a|b1")`` — cavity vs first resonator;
    ``log_negativity(v, "b1|ab2")`` — first resonator vs the rest.
    """
    focus, others = _parse_partition(partition)
    v = np.asarray(v, dtype=float)
    if len(others) == 1:
        idx = []
        for mode in (focus, others[0]):
            idx.extend((2 * mode, 2 * mode + 1))
        sub = v[np.ix_(idx, idx)]
        p = np.diag([1.0, -1.0, 1.0, 1.0])
    else:
        sub = v
        p = np.eye(6)
        p[2 * focus + 1, 2 * focus + 1] = -1.0
    nu = symplectic_eigenvalues(p @ sub @ p)[0]
    return max(0.0, -math.log(2.0 * nu))


def closed_form_numin_two_mode(v4: np.ndarray) -> float:
    """Closed-form smallest PPT symplectic eigenvalue of a two-mode state.

    For ``V = [[A, C], [C^T, B]]`` in 2x2 blocks,

        nu^2 = (S - sqrt(S^2 - 4*det(V))) / 2,
        S = det(A) + det(B) - 2*det(C).

    Cross-check path for the eigenvalue-based method; only valid for
    two-mode (4x4) covariance matrices.
    """
    v4 = np.asarray(v4, dtype=float)
    if v4.shape != (4, 4):
        raise ValueError("closed form requires a 4x4 covariance matrix")
    det_a = det(v4[:2, :2])
    det_b = det(v4[2:, 2:])
    det_c = det(v4[:2, 2:])
    sigma = det_a + det_b - 2.0 * det_c
    disc = max(sigma * sigma - 4.0 * det(v4), 0.0)
    return math.sqrt(max((sigma - math.sqrt(disc)) / 2.0, 0.0))


_FOCUS_ORDER = (("a|b1b2", "a|b1", "a|b2"),
                ("b1|ab2", "b1|a", "b1|b2"),
                ("b2|ab1", "b2|a", "b2|b1"))


def residual_contangle(v: np.ndarray) -> tuple[tuple[float, float, float], float]:
    """Residual contangles for the three focus modes and their minimum.

    The contangle of a split is the squared logarithmic negativity; the
    residual for focus mode ``i`` is

        R_i = C_{i|jk} - C_{i|j} - C_{i|k}.

    ``r_min > 0`` certifies genuine tripartite entanglement.  Residuals are
    reported as computed (possibly negative); only the individual
    negativities are clamped at zero.
    """
    residuals = []
    for one_vs_two, pair1, pair2 in _FOCUS_ORDER:
        r = (log_negativity(v, one_vs_two) ** 2
             - log_negativity(v, pair1) ** 2
             - log_negativity(v, pair2) ** 2)
        residuals.append(r)
    res = (residuals[0], residuals[1], residuals[2])
    return res, min(res)


def compute_observables(v: np.ndarray) -> ObservablesRecord:
    """Assemble every figure of merit for a (stable) steady state."""
    n1, n2 = phonon_numbers(v)
    en = {p: log_negativity(v, p)
          for row in _FOCUS_ORDER for p in row}
    residuals = tuple(
        en[ovt] ** 2 - en[p1] ** 2 - en[p2] ** 2
        for ovt, p1, p2 in _FOCUS_ORDER)
    return ObservablesRecord(
        stable=True,
        n1=n1,
        n2=n2,
        s_db_b1=squeezing_db(v, 1),
        s_db_b2=squeezing_db(v, 2),
        s_db_b1_opt=squeezing_db_optimal(v, 1),
        s_db_b2_opt=squeezing_db_optimal(v, 2),
        en_a_b1=en["a|b1"],
        en_a_b2=en["a|b2"],
        en_b1_b2=en["b1|b2"],
        en_one_vs_two=(en["a|b1b2"], en["b1|ab2"], en["b2|ab1"]),
        residuals=residuals,
        r_min=min(residuals),
    )

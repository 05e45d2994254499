"""Linearized dynamics: drift/noise matrices, stability and steady state.

Quadrature ordering is ``(X_a, Y_a, X_b1, Y_b1, X_b2, Y_b2)`` with the
convention ``X = (O' + O)/sqrt(2)``, ``Y = i(O' - O)/sqrt(2)`` so that the
vacuum variance is 1/2.  The fluctuation vector ``u`` obeys

    du/dt = A u + noise,      d<uu^T>/dt = A V + V A^T + D,

with the 6x6 drift matrix ``A`` and diagonal noise matrix ``D`` built here.
The steady-state covariance solves the algebraic Lyapunov equation
``A V + V A^T + D = 0``, which we vectorize with a Kronecker product into a
single 36x36 linear system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import eigenvalues, kron, solve_linear
from .params import EffectiveParams

__all__ = [
    "Unstable",
    "StepTooLarge",
    "StabilityReport",
    "build_drift",
    "build_noise",
    "stability",
    "steady_state",
    "integrate_transient",
    "default_initial_covariance",
    "DEFAULT_DT",
    "MARGINAL_TOL",
]

#: Default fixed step for the transient integrator: 1/1000 of a mechanical
#: period in the dimensionless units where omega_m1 = 1.
DEFAULT_DT = 1e-3 * 2.0 * math.pi

#: Half-width of the band around zero within which the largest eigenvalue
#: real part is treated as marginal (and hence unusable for a steady state).
MARGINAL_TOL = 1e-9


class Unstable(RuntimeError):
    """The drift matrix is not strictly stable (or is marginal)."""


class StepTooLarge(RuntimeError):
    """The transient integration produced non-finite covariance entries."""


@dataclass(frozen=True)
class StabilityReport:
    """Eigenvalue-based stability summary of a drift matrix."""

    stable: bool
    max_real_part: float
    eigenvalues: np.ndarray


def build_drift(ep: EffectiveParams) -> np.ndarray:
    """Drift matrix of the linearized three-mode dynamics.

    The cavity block contains the parametric-amplifier contributions
    ``kappa_pm = -kappa/2 +- 2*chi*cos(theta)`` on the diagonal and
    ``+-Delta_a + 2*chi*sin(theta)`` off it.  The first mechanical block
    carries the Coulomb-induced parametric term, which shifts the
    ``X_b1``-column entry of the ``Y_b1`` row to ``-(omega_m1 + 4*lambda)``.
    Both resonators couple to the cavity amplitude with strength
    ``2*g_eff``.
    """
    k, chi, th = ep.kappa, ep.chi, ep.theta
    g1, g2 = ep.g1_eff, ep.g2_eff
    w1, w2 = ep.omega_m1, ep.omega_m2
    lam = ep.lambda_mpa
    c, s = chi * math.cos(th), chi * math.sin(th)
    return np.array([
        [-k / 2 + 2 * c,  ep.Delta_a + 2 * s,  0.0,            0.0,     0.0,     0.0],
        [-ep.Delta_a + 2 * s, -k / 2 - 2 * c,  2 * g1,         0.0,     2 * g2,  0.0],
        [0.0,             0.0,                 -ep.gamma1 / 2, w1,      0.0,     0.0],
        [2 * g1,          0.0,                 -w1 - 4 * lam,  -ep.gamma1 / 2, 0.0, 0.0],
        [0.0,             0.0,                 0.0,            0.0,     -ep.gamma2 / 2, w2],
        [2 * g2,          0.0,                 0.0,            0.0,     -w2,     -ep.gamma2 / 2],
    ])


def build_noise(ep: EffectiveParams) -> np.ndarray:
    """Diagonal noise correlation matrix.

    Vacuum input noise on the cavity quadratures and thermal noise at
    occupation ``n_th`` on each resonator:
    ``D = diag(kappa/2, kappa/2, gamma1*(2*n1+1)/2, ..., gamma2*(2*n2+1)/2)``.
    """
    d1 = ep.gamma1 * (2.0 * ep.n_th1 + 1.0) / 2.0
    d2 = ep.gamma2 * (2.0 * ep.n_th2 + 1.0) / 2.0
    return np.diag([ep.kappa / 2.0, ep.kappa / 2.0, d1, d1, d2, d2])


def stability(a: np.ndarray) -> StabilityReport:
    """Routh–Hurwitz style stability check via the eigenvalues of ``a``.

    The system is stable iff every eigenvalue has strictly negative real
    part; the largest real part is reported as the stability margin.
    """
    evs = eigenvalues(a)
    max_re = float(np.max(evs.real))
    return StabilityReport(stable=max_re < 0.0, max_real_part=max_re,
                           eigenvalues=evs)


def steady_state(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Steady-state covariance from the algebraic Lyapunov equation.

    Solves ``A V + V A^T + D = 0`` by Kronecker vectorization,
    ``(I (x) A + A (x) I) vec(V) = -vec(D)``, followed by symmetrization
    ``V <- (V + V^T)/2``.

    Raises
    ------
    Unstable
        If the drift matrix is unstable or within ``MARGINAL_TOL`` of
        marginal (the Lyapunov problem is ill-posed there).
    SingularMatrix
        Propagated from the linear solver on a numerically singular
        vectorized system.
    """
    rep = stability(a)
    if rep.max_real_part >= -MARGINAL_TOL:
        raise Unstable(
            f"max eigenvalue real part {rep.max_real_part:.3e} is not "
            f"strictly negative")
    n = a.shape[0]
    eye = np.eye(n)
    m = kron(eye, a) + kron(a, eye)
    v = solve_linear(m, -np.asarray(d, dtype=float).reshape(-1))
    v = v.reshape(n, n)
    return (v + v.T) / 2.0


def integrate_transient(a: np.ndarray, d: np.ndarray, v0: np.ndarray,
                        t_final: float, dt: float = DEFAULT_DT) -> np.ndarray:
    """Propagate ``dV/dt = A V + V A^T + D`` with classical fixed-step RK4.

    The covariance is symmetrized after every step.  For stable dynamics
    and ``t_final >= 10 / |max_real_part|`` the result agrees with
    :func:`steady_state` to high accuracy (the transient has decayed by
    ``exp(-20)``).

    Parameters
    ----------
    a, d : ndarray
        Drift and noise matrices.
    v0 : ndarray
        Initial covariance.
    t_final : float
        Integration horizon; ``t_final == 0`` returns ``v0`` unchanged.
    dt : float, optional
        Requested step size.  The actual step is ``t_final / n`` with ``n``
        the smallest integer keeping the step at or below ``dt``, so the
        integration lands exactly on ``t_final``.

    Raises
    ------
    StepTooLarge
        If any covariance entry becomes non-finite during the integration.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_final < 0:
        raise ValueError("t_final must be non-negative")
    v = np.array(v0, dtype=float, copy=True)
    if t_final == 0.0:
        return v
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    at = a.T
    n_steps = max(1, int(math.ceil(t_final / dt - 1e-12)))
    h = t_final / n_steps
    # divergence is detected explicitly below, so let overflow produce
    # inf/nan silently instead of warning
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(n_steps):
            k1 = a @ v + v @ at + d
            v2 = v + (0.5 * h) * k1
            k2 = a @ v2 + v2 @ at + d
            v3 = v + (0.5 * h) * k2
            k3 = a @ v3 + v3 @ at + d
            v4 = v + h * k3
            k4 = a @ v4 + v4 @ at + d
            v = v + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
            v = (v + v.T) / 2.0
            if not np.all(np.isfinite(v)):
                raise StepTooLarge(
                    f"covariance diverged with step {h:.3e}; reduce dt")
    return v


def default_initial_covariance(ep: EffectiveParams) -> np.ndarray:
    """Vacuum cavity and thermal resonators: the natural pre-cooling state."""
    return np.diag([0.5, 0.5,
                    ep.n_th1 + 0.5, ep.n_th1 + 0.5,
                    ep.n_th2 + 0.5, ep.n_th2 + 0.5])

"""Classical mean-field steady state of the driven three-mode system.

Linearizing the dynamics requires the classical amplitudes around which to
expand.  They solve the coupled fixed-point equations

    0 = -(i*Delta_a + kappa/2) * alpha + 2*chi*e^{i*theta} * alpha^* + E
    0 = -(i*omega_m1' + gamma1/2) * beta1 + i*g1*|alpha|^2 - 2i*lam*beta1^*
    0 = -(i*omega_m2  + gamma2/2) * beta2 + i*g2*|alpha|^2

with the self-consistent detuning
``Delta_a = Delta_a' - 2*g1*Re(beta1) - 2*g2*Re(beta2)`` and the drive
amplitude ``E = sqrt(kappa * P / (hbar * omega_d))``.

The drive phase is chosen so that ``alpha`` is real and non-negative, which
makes the linearized couplings ``g_eff_j = g_j * alpha`` real.  The system
is solved by damped fixed-point (Picard) iteration on the intracavity
intensity ``|alpha|^2``; each inner step is a closed-form or 2x2 linear
solve.  The sweep presets elsewhere in the package pin the effective
parameters directly and do not need this module — it completes the path
from raw drive parameters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .linalg import solve_linear
from .params import CODATA2018, PhysicalConstants

__all__ = [
    "NoConvergence",
    "DriveParams",
    "MeanFieldState",
    "solve_mean_field",
]

MAX_ITERATIONS = 10_000
DAMPING = 0.5


class NoConvergence(RuntimeError):
    """Fixed-point iteration failed (bistability or instability).

    Carries the last iterate and its residual for diagnosis.
    """

    def __init__(self, message: str, state: "MeanFieldState | None" = None):
        super().__init__(message)
        self.state = state


@dataclass(frozen=True)
class DriveParams:
    """Raw drive-level inputs, all in SI units.

    ``P`` is the drive power [W]; ``g1``/``g2`` the single-photon coupling
    rates [rad/s]; ``chi``/``theta`` the parametric-amplifier gain and
    phase; ``lambda_mpa`` the mechanical parametric strength [rad/s].
    """

    omega_a: float
    omega_d: float
    P: float
    g1: float
    g2: float
    chi: float = 0.0
    theta: float = 0.0
    lambda_mpa: float = 0.0

    def __post_init__(self):
        if self.omega_d <= 0:
            raise ValueError("omega_d must be positive")
        if self.P < 0:
            raise ValueError("P must be non-negative")
        if self.chi < 0:
            raise ValueError("chi must be non-negative")


@dataclass(frozen=True)
class MeanFieldState:
    """Classical fixed point and the derived effective parameters.

    ``alpha`` is real and non-negative by the drive-phase convention; the
    phase actually applied to the drive is ``drive_phase``.  ``residual``
    is the Euclidean norm of the three fixed-point equation residuals.
    """

    alpha: complex
    beta1: complex
    beta2: complex
    Delta_a_eff: float
    g_eff_1: float
    g_eff_2: float
    drive_phase: float
    residual: float
    iterations: int


def _beta2(g2: float, intensity: float, omega_m2: float,
           gamma2: float) -> complex:
    return 1j * g2 * intensity / complex(gamma2 / 2.0, omega_m2)


def _beta1(g1: float, intensity: float, omega_m1: float, gamma1: float,
           lam: float) -> complex:
    # real/imaginary parts of the beta1 equation, using omega_m1' = w1 + 2*lam:
    #   -(gamma1/2) x + omega_m1 y          = 0
    #   -(omega_m1 + 4*lam) x - (gamma1/2) y = -g1 * I
    m = np.array([[-gamma1 / 2.0, omega_m1],
                  [-(omega_m1 + 4.0 * lam), -gamma1 / 2.0]])
    rhs = np.array([0.0, -g1 * intensity])
    x, y = solve_linear(m, rhs)
    return complex(x, y)


def _residual(d: DriveParams, kappa: float, gamma1: float, gamma2: float,
              omega_m1: float, omega_m2: float, delta_prime: float,
              e_amp: float, st: MeanFieldState) -> float:
    alpha, b1, b2 = st.alpha, st.beta1, st.beta2
    delta = delta_prime - 2.0 * d.g1 * b1.real - 2.0 * d.g2 * b2.real
    drive = e_amp * cmath.exp(1j * st.drive_phase)
    r_a = (-(1j * delta + kappa / 2.0) * alpha
           + 2.0 * d.chi * cmath.exp(1j * d.theta) * alpha.conjugate()
           + drive)
    intensity = abs(alpha) ** 2
    w1p = omega_m1 + 2.0 * d.lambda_mpa
    r_b1 = (-(1j * w1p + gamma1 / 2.0) * b1 + 1j * d.g1 * intensity
            - 2j * d.lambda_mpa * b1.conjugate())
    r_b2 = -(1j * omega_m2 + gamma2 / 2.0) * b2 + 1j * d.g2 * intensity
    return math.sqrt(abs(r_a) ** 2 + abs(r_b1) ** 2 + abs(r_b2) ** 2)


def solve_mean_field(d: DriveParams, rates: dict, frequencies: dict,
                     c: PhysicalConstants = CODATA2018,
                     max_iterations: int = MAX_ITERATIONS,
                     damping: float = DAMPING) -> MeanFieldState:
    """Solve the classical fixed point by damped Picard iteration.

    Parameters
    ----------
    d : DriveParams
    rates : dict
        ``{"kappa": ..., "gamma1": ..., "gamma2": ...}`` [rad/s].
    frequencies : dict
        ``{"omega_m1": ..., "omega_m2": ...}`` and either
        ``"Delta_a_prime"`` directly or nothing (then
        ``omega_a - omega_d`` is used) [rad/s].
    c : PhysicalConstants, optional

    Returns
    -------
    MeanFieldState

    Raises
    ------
    NoConvergence
        If the intensity iteration has not settled after
        ``max_iterations`` steps — a sign of bistability or operation past
        the parametric instability threshold.  The exception carries the
        last iterate.
    """
    kappa = rates["kappa"]
    gamma1, gamma2 = rates["gamma1"], rates["gamma2"]
    omega_m1, omega_m2 = frequencies["omega_m1"], frequencies["omega_m2"]
    delta_prime = frequencies.get("Delta_a_prime",
                                  d.omega_a - d.omega_d)
    e_amp = math.sqrt(kappa * d.P / (c.hbar * d.omega_d))

    def cavity_response(delta: float) -> complex:
        # alpha * w = E * exp(i*phi) for real alpha; w collects the
        # detuning and the parametric deamplification of the pump quadrature
        return complex(kappa / 2.0 - 2.0 * d.chi * math.cos(d.theta),
                       delta - 2.0 * d.chi * math.sin(d.theta))

    def step(intensity: float):
        b2 = _beta2(d.g2, intensity, omega_m2, gamma2)
        b1 = _beta1(d.g1, intensity, omega_m1, gamma1, d.lambda_mpa)
        delta = delta_prime - 2.0 * d.g1 * b1.real - 2.0 * d.g2 * b2.real
        w = cavity_response(delta)
        if abs(w) == 0.0:
            raise NoConvergence(
                "cavity response vanishes (parametric oscillation "
                "threshold); no steady amplitude exists")
        return b1, b2, delta, w

    intensity = 0.0
    iterations = 0
    if e_amp > 0.0:
        for iterations in range(1, max_iterations + 1):
            _, _, _, w = step(intensity)
            new_intensity = (e_amp / abs(w)) ** 2
            if not math.isfinite(new_intensity):
                break
            mixed = (1.0 - damping) * intensity + damping * new_intensity
            if abs(mixed - intensity) <= 1e-14 * max(intensity, mixed, 1.0):
                intensity = mixed
                break
            intensity = mixed

    b1, b2, delta, w = step(intensity)
    alpha = e_amp / abs(w) if e_amp > 0.0 else 0.0
    state = MeanFieldState(
        alpha=complex(alpha, 0.0),
        beta1=b1,
        beta2=b2,
        Delta_a_eff=delta,
        g_eff_1=d.g1 * alpha,
        g_eff_2=d.g2 * alpha,
        drive_phase=cmath.phase(w),
        residual=0.0,
        iterations=iterations,
    )
    residual = _residual(d, kappa, gamma1, gamma2, omega_m1, omega_m2,
                         delta_prime, e_amp, state)
    state = replace(state, residual=residual)
    scale = abs(e_amp) + kappa * alpha
    if residual > 1e-10 * max(scale, 1e-300):
        raise NoConvergence(
            f"fixed point not reached after {iterations} iterations "
            f"(residual {residual:.3e}, bound {1e-10 * scale:.3e})", state)
    return state

"""Parameter sets and unit conversions for the three-mode optomechanical model.

The model consists of one cavity mode coupled to two (nominally degenerate)
mechanical resonators.  The first resonator carries a surface charge and sits
opposite a biased gate electrode; the resulting Coulomb force contributes a
mechanical parametric term whose strength ``lambda`` is linear in the bias
voltage.  An intracavity parametric amplifier with gain ``chi`` and pump
phase ``theta`` acts on the cavity quadratures.

Two levels of description are provided:

* :class:`PhysicalParams` — raw SI quantities (masses, geometry, charge
  density, decay rates).
* :class:`EffectiveParams` — the dimensionless parameters, in units of the
  reference mechanical frequency, that fully determine the linearized
  dynamics.

Conversions between the two live here, together with the optimal choice of
parametric-amplifier gain and phase that suppresses the Stokes heating
sideband.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "PhysicalParams",
    "EffectiveParams",
    "REFERENCE_PARAMS",
    "lambda_from_voltage",
    "n_th_from_temperature",
    "x_zpf",
    "effective_from_physical",
    "optimal_opa",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants (CODATA 2018 exact/recommended values).

    Frozen so that every run of the simulator uses identical numbers.
    """

    e: float = 1.602176634e-19          # C, elementary charge (exact)
    epsilon0: float = 8.8541878128e-12  # F/m, vacuum permittivity
    hbar: float = 1.054571817e-34       # J*s, reduced Planck constant
    kB: float = 1.380649e-23            # J/K, Boltzmann constant (exact)

    def __post_init__(self):
        for name in ("e", "epsilon0", "hbar", "kB"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constant {name} must be positive")


#: The one set of constants used everywhere.
CODATA2018 = PhysicalConstants()


@dataclass(frozen=True)
class PhysicalParams:
    """Raw SI parameters of the optomechanical setup.

    Attributes
    ----------
    m1, m2 : float
        Effective masses of the two mechanical resonators [kg].
    omega_m1, omega_m2 : float
        Bare angular frequencies [rad/s].
    C0 : float
        Gate capacitance of the charged resonator [F].
    U0 : float
        Bias gate voltage [V]; controls the Coulomb-induced mechanical
        parametric amplification.
    L : float
        Equilibrium electrode separation scale [m].
    sigma1 : float
        Surface charge density on the first resonator [1/m^2].
    s : float
        Charged surface area [m^2]; the carried charge is ``e * s * sigma1``.
    gamma1, gamma2 : float
        Mechanical damping rates [rad/s].
    kappa : float
        Cavity amplitude decay rate [rad/s].
    T0 : float or None
        Bath temperature [K].  Optional — thermal occupations may instead be
        supplied directly on the effective level.
    """

    m1: float
    m2: float
    omega_m1: float
    omega_m2: float
    C0: float
    U0: float
    L: float
    sigma1: float
    s: float
    gamma1: float
    gamma2: float
    kappa: float
    T0: float | None = None

    def __post_init__(self):
        positive = ("m1", "m2", "omega_m1", "omega_m2", "C0", "L", "s",
                    "gamma1", "gamma2", "kappa")
        for name in positive:
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.sigma1 < 0:
            raise ValueError("sigma1 must be non-negative")
        if self.U0 < 0:
            raise ValueError("U0 must be non-negative")
        if self.T0 is not None and self.T0 < 0:
            raise ValueError("T0 must be non-negative")

    @property
    def Q1(self) -> float:
        """Total charge carried by the first resonator [C]."""
        return CODATA2018.e * self.s * self.sigma1


#: Reference experimental parameter set used by the bundled sweep presets:
#: 20 pg resonators at 2*pi*134 kHz with quality factor 1e6, a 27.5 nF gate
#: capacitance, 0.1 mm electrode separation and a charge density of
#: 1.25e13 cm^-2 over 0.08 um^2.
REFERENCE_PARAMS = PhysicalParams(
    m1=20e-15,               # 20 pg
    m2=20e-15,
    omega_m1=TWO_PI * 134e3,
    omega_m2=TWO_PI * 134e3,
    C0=27.5e-9,
    U0=0.0,
    L=0.1e-3,
    sigma1=1.25e13 * 1e4,    # 1.25e13 cm^-2 in m^-2
    s=0.08e-12,              # 0.08 um^2
    gamma1=1e-6 * TWO_PI * 134e3,
    gamma2=1e-6 * TWO_PI * 134e3,
    kappa=20 * TWO_PI * 134e3,
)


@dataclass(frozen=True)
class EffectiveParams:
    """Dimensionless model parameters, in units of the reference frequency.

    All rates and frequencies are expressed in units of the first
    resonator's bare frequency (so ``omega_m1 == 1.0`` in the degenerate
    reference case).  Together with the thermal occupations these uniquely
    determine the drift and noise matrices of the linearized dynamics.

    Attributes
    ----------
    g1_eff, g2_eff : float
        Linearized (field-enhanced) optomechanical couplings.
    Delta_a : float
        Effective cavity detuning.
    kappa : float
        Cavity decay rate.
    gamma1, gamma2 : float
        Mechanical damping rates.
    lambda_mpa : float
        Mechanical parametric amplification strength induced by the Coulomb
        interaction (linear in the bias voltage).
    chi, theta : float
        Optical parametric amplifier gain and pump phase.  ``theta`` is
        normalized into [0, 2*pi).
    omega_m1, omega_m2 : float
        Bare mechanical frequencies (both 1 for the degenerate case).
    n_th1, n_th2 : float
        Initial thermal phonon occupations of the two resonators.
    """

    g1_eff: float
    g2_eff: float
    Delta_a: float
    kappa: float
    gamma1: float
    gamma2: float
    lambda_mpa: float = 0.0
    chi: float = 0.0
    theta: float = 0.0
    omega_m1: float = 1.0
    omega_m2: float = 1.0
    n_th1: float = 0.0
    n_th2: float = 0.0

    def __post_init__(self):
        for name in ("kappa", "gamma1", "gamma2", "chi"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        for name in ("n_th1", "n_th2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        # keep the pump phase in its principal interval
        object.__setattr__(self, "theta", self.theta % TWO_PI)

    @property
    def omega_m1_prime(self) -> float:
        """Shifted frequency of the first resonator, ``omega_m1 + 2*lambda``."""
        return self.omega_m1 + 2.0 * self.lambda_mpa

    def with_voltage_lambda(self, lambda_mpa: float) -> "EffectiveParams":
        """Return a copy with a new parametric strength."""
        return replace(self, lambda_mpa=lambda_mpa)


def lambda_from_voltage(p: PhysicalParams,
                        c: PhysicalConstants = CODATA2018) -> float:
    """Coulomb-induced mechanical parametric strength for a bias voltage.

    The gate electrode at voltage ``U0`` exerts a force on the charged
    resonator whose second-order position dependence renormalizes the
    mechanical potential; expanding the interaction to second order gives

        lambda = C0 * U0 * Q1 / (4*pi*epsilon0 * L^3 * m1 * omega_m1)

    with ``Q1 = e * s * sigma1`` the carried charge.  The result is exactly
    linear in both ``U0`` and ``sigma1``.

    Parameters
    ----------
    p : PhysicalParams
        SI parameter set (uses C0, U0, s, sigma1, L, m1, omega_m1).
    c : PhysicalConstants, optional
        Constants to use.

    Returns
    -------
    float
        Parametric strength lambda [rad/s].
    """
    q1 = c.e * p.s * p.sigma1
    denom = 4.0 * math.pi * c.epsilon0 * p.L ** 3 * p.m1 * p.omega_m1
    return p.C0 * p.U0 * q1 / denom


def n_th_from_temperature(omega_m: float, T0: float,
                          c: PhysicalConstants = CODATA2018) -> float:
    """Bose–Einstein occupation of a mode at frequency ``omega_m``.

    Returns ``1 / (exp(hbar*omega_m / (kB*T0)) - 1)``, and exactly 0 at
    ``T0 = 0``.
    """
    if omega_m <= 0:
        raise ValueError("omega_m must be positive")
    if T0 < 0:
        raise ValueError("T0 must be non-negative")
    if T0 == 0.0:
        return 0.0
    x = c.hbar * omega_m / (c.kB * T0)
    return 1.0 / math.expm1(x)


def x_zpf(m: float, omega: float, c: PhysicalConstants = CODATA2018) -> float:
    """Zero-point fluctuation amplitude ``sqrt(hbar / (2*m*omega))`` [m]."""
    if m <= 0 or omega <= 0:
        raise ValueError("mass and frequency must be positive")
    return math.sqrt(c.hbar / (2.0 * m * omega))


def effective_from_physical(p: PhysicalParams, drive: dict,
                            c: PhysicalConstants = CODATA2018) -> EffectiveParams:
    """Convert SI parameters plus drive data into :class:`EffectiveParams`.

    All rates are divided by the reference frequency ``p.omega_m1``.  The
    parametric strength is computed from the bias voltage via
    :func:`lambda_from_voltage`.  The caller supplies the linearized
    couplings and the effective detuning directly — deriving them from a
    drive power requires the classical fixed point (see the
    :mod:`~omtrio.meanfield` module).

    Parameters
    ----------
    p : PhysicalParams
        SI parameter set.
    drive : dict
        SI drive-level data with keys ``g1_eff``, ``g2_eff``, ``Delta_a``
        [rad/s], ``chi`` [rad/s] and ``theta`` [rad].  Optional keys
        ``n_th1``/``n_th2`` override the occupation derived from ``p.T0``.
    c : PhysicalConstants, optional

    Returns
    -------
    EffectiveParams
    """
    if drive["chi"] < 0:
        raise ValueError("chi must be non-negative")
    w = p.omega_m1
    if p.T0 is not None:
        n1 = n_th_from_temperature(p.omega_m1, p.T0, c)
        n2 = n_th_from_temperature(p.omega_m2, p.T0, c)
    else:
        n1 = n2 = 0.0
    n1 = drive.get("n_th1", n1)
    n2 = drive.get("n_th2", n2)
    return EffectiveParams(
        g1_eff=drive["g1_eff"] / w,
        g2_eff=drive["g2_eff"] / w,
        Delta_a=drive["Delta_a"] / w,
        kappa=p.kappa / w,
        gamma1=p.gamma1 / w,
        gamma2=p.gamma2 / w,
        lambda_mpa=lambda_from_voltage(p, c) / w,
        chi=drive["chi"] / w,
        theta=drive["theta"],
        omega_m1=1.0,
        omega_m2=p.omega_m2 / w,
        n_th1=n1,
        n_th2=n2,
    )


def optimal_opa(Delta_a: float, omega_m1_prime: float,
                kappa: float) -> tuple[float, float]:
    """Parametric-amplifier gain and phase that cancel the Stokes sideband.

    The heating (Stokes) contribution to the cavity response vanishes for

        chi_opt   = sqrt(0.25*kappa^2 + (Delta_a - omega_m1')^2) / 2
        theta_opt : 2*chi_opt*exp(-i*theta_opt) = i*(Delta_a - omega_m1') - kappa/2

    The phase is returned as the principal-branch argument normalized into
    [0, 2*pi); on resonance (``Delta_a == omega_m1'``) this gives exactly
    ``(kappa/4, pi)``.

    Parameters
    ----------
    Delta_a, omega_m1_prime, kappa : float
        Any consistent units (the outputs inherit them).

    Returns
    -------
    (chi_opt, theta_opt) : tuple of float
    """
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    delta = Delta_a - omega_m1_prime
    chi_opt = math.sqrt(0.25 * kappa ** 2 + delta ** 2) / 2.0
    z = complex(-0.5 * kappa, delta) / (2.0 * chi_opt)
    theta_opt = (-cmath.phase(z)) % TWO_PI
    return chi_opt, theta_opt

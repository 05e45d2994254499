"""Bright/dark hybrid-mode decomposition of the two mechanical resonators.

The collective modes

    B = (g1*b1 + g2*b2) / g_plus,      D = (g2*b1 - g1*b2) / g_plus,

with ``g_plus = sqrt(g1^2 + g2^2)``, split the mechanics into a "bright"
combination that couples to the cavity with strength ``g_plus`` and a
"dark" combination that does not couple at all when the resonators are
degenerate and no direct mechanical coupling exists.  A dark mode traps
thermal phonons: it cannot be cooled, squeezed or entangled through the
cavity.

In the rotating frame the hybrid Hamiltonian coefficients are

    omega_B      = (w1*g1^2 + w2*g2^2) / g_plus^2
    omega_D      = (w1*g2^2 + w2*g1^2) / g_plus^2
    omega_B^lam  = lam * g1^2 / g_plus^2
    omega_D^lam  = lam * g2^2 / g_plus^2
    g_BD^omega   = (w1 - w2) * g1 * g2 / g_plus^2
    g_BD^lam     = lam * g1 * g2 / g_plus^2

so a frequency mismatch or a nonzero mechanical parametric strength
``lam`` (i.e. a bias voltage on the charged resonator) couples the dark
mode back to the bright one and thereby to the cavity.

This module is purely diagnostic: the quantitative dynamics elsewhere in the
package never uses the rotating-wave form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import EffectiveParams

__all__ = [
    "ZeroCoupling",
    "HybridModeParams",
    "hybrid_decomposition",
    "dark_mode_broken",
    "bd_rotation",
    "rotate_covariance_bd",
    "dark_mode_occupation",
]


class ZeroCoupling(ValueError):
    """Both optomechanical couplings vanish; the B/D basis is undefined."""


@dataclass(frozen=True)
class HybridModeParams:
    """Coefficients of the bright/dark hybrid-mode Hamiltonian."""

    g_plus: float
    omega_B: float
    omega_D: float
    omega_B_lambda: float
    omega_D_lambda: float
    g_BD_omega: float
    g_BD_lambda: float


def hybrid_decomposition(ep: EffectiveParams) -> HybridModeParams:
    """Hybrid-mode coefficients for a given effective parameter set.

    Raises
    ------
    ZeroCoupling
        If ``g1_eff == g2_eff == 0``.
    """
    g1, g2 = ep.g1_eff, ep.g2_eff
    gp2 = g1 * g1 + g2 * g2
    if gp2 == 0.0:
        raise ZeroCoupling("g1_eff and g2_eff are both zero")
    w1, w2, lam = ep.omega_m1, ep.omega_m2, ep.lambda_mpa
    return HybridModeParams(
        g_plus=math.sqrt(gp2),
        omega_B=(w1 * g1 * g1 + w2 * g2 * g2) / gp2,
        omega_D=(w1 * g2 * g2 + w2 * g1 * g1) / gp2,
        omega_B_lambda=lam * g1 * g1 / gp2,
        omega_D_lambda=lam * g2 * g2 / gp2,
        g_BD_omega=(w1 - w2) * g1 * g2 / gp2,
        g_BD_lambda=lam * g1 * g2 / gp2,
    )


def dark_mode_broken(ep: EffectiveParams, tol: float = 1e-12) -> bool:
    """Whether the dark mode couples back to the rest of the system.

    True iff ``|g_BD^omega| + |g_BD^lam| > tol``, i.e. the resonators are
    non-degenerate or the mechanical parametric term is switched on.
    """
    h = hybrid_decomposition(ep)
    return abs(h.g_BD_omega) + abs(h.g_BD_lambda) > tol


def bd_rotation(g1: float, g2: float) -> np.ndarray:
    """2x2 mode-mixing matrix with rows ``(g1, g2)/g+`` and ``(g2, -g1)/g+``.

    Orthogonal with determinant -1; maps ``(b1, b2)`` to ``(B, D)``.
    """
    gp = math.hypot(g1, g2)
    if gp == 0.0:
        raise ZeroCoupling("g1 and g2 are both zero")
    return np.array([[g1, g2], [g2, -g1]]) / gp


def rotate_covariance_bd(v: np.ndarray, ep: EffectiveParams) -> np.ndarray:
    """Covariance matrix in the ``(a, B, D)`` mode basis.

    The mixing coefficients are real, so both quadratures transform with
    the same 2x2 rotation; the cavity block is untouched.
    """
    r = bd_rotation(ep.g1_eff, ep.g2_eff)
    t = np.eye(6)
    # interleave the quadrature copies of the 2x2 mode rotation
    t[2:, 2:] = np.kron(r, np.eye(2))
    return t @ np.asarray(v, dtype=float) @ t.T


def dark_mode_occupation(v: np.ndarray, ep: EffectiveParams) -> float:
    """Occupation of the dark combination, ``(V_XX + V_YY - 1)/2``.

    With an unbroken dark mode this stays at the thermal value ``n_th``
    no matter how strongly the cavity is driven.
    """
    vbd = rotate_covariance_bd(v, ep)
    return float((vbd[4, 4] + vbd[5, 5] - 1.0) / 2.0)

"""Shared helpers for the test suite."""

import numpy as np

from omtrio import EffectiveParams, build_drift, stability


def draw_effective(rng, stable_only=True, max_tries=500):
    """Draw a random parameter set, by default rejecting unstable ones.

    The ranges are chosen so that a good fraction of draws is stable and
    reasonably damped (keeps transient-integration tests fast).
    """
    for _ in range(max_tries):
        kappa = rng.uniform(1.0, 4.0)
        ep = EffectiveParams(
            g1_eff=rng.uniform(0.0, 0.35),
            g2_eff=rng.uniform(0.0, 0.35),
            Delta_a=rng.uniform(0.5, 1.5),
            kappa=kappa,
            gamma1=rng.uniform(0.05, 0.5),
            gamma2=rng.uniform(0.05, 0.5),
            lambda_mpa=rng.uniform(0.0, 0.25),
            chi=rng.uniform(0.0, 0.2 * kappa),
            theta=rng.uniform(0.0, 2.0 * np.pi),
            omega_m1=1.0,
            omega_m2=rng.uniform(0.8, 1.2),
            n_th1=rng.uniform(0.0, 50.0),
            n_th2=rng.uniform(0.0, 50.0),
        )
        if not stable_only:
            return ep
        rep = stability(build_drift(ep))
        if rep.stable and rep.max_real_part < -1e-3:
            return ep
    raise RuntimeError("failed to draw a stable parameter set")


def random_physical_covariance(rng, n_modes):
    """Random physical covariance matrix: I/2 plus a PSD perturbation.

    Every ordinary eigenvalue is >= 1/2, and the symplectic eigenvalues of
    a symmetric matrix are bracketed by its ordinary extremal eigenvalues,
    so the result is a valid Gaussian state.
    """
    d = 2 * n_modes
    g = rng.normal(size=(d, d)) * rng.uniform(0.2, 1.0)
    v = 0.5 * np.eye(d) + g @ g.T
    return (v + v.T) / 2.0

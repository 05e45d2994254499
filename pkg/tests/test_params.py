"""Unit conversions, reference constants, and the optimal amplifier point."""

import cmath
import math
from dataclasses import replace

import numpy as np
import pytest

from omtrio.params import (CODATA2018, REFERENCE_PARAMS, EffectiveParams,
                           PhysicalParams, effective_from_physical,
                           lambda_from_voltage, n_th_from_temperature,
                           optimal_opa, x_zpf)

# frozen one-line oracle: direct evaluation of the formula chain with the
# CODATA constants below, recorded before the module was written
LAMBDA_WM_AT_6MV = 0.16758549053532298
XZPF_REFERENCE = 5.5958459659647895e-14  # sqrt(hbar/(2*m*omega)), 20 pg @ 134 kHz


def test_constants_are_codata2018():
    assert CODATA2018.e == 1.602176634e-19
    assert CODATA2018.epsilon0 == 8.8541878128e-12
    assert CODATA2018.hbar == 1.054571817e-34
    assert CODATA2018.kB == 1.380649e-23


def test_lambda_zero_at_zero_voltage():
    assert lambda_from_voltage(REFERENCE_PARAMS) == 0.0


def test_lambda_exactly_linear_in_voltage():
    p1 = replace(REFERENCE_PARAMS, U0=0.003)
    p2 = replace(REFERENCE_PARAMS, U0=0.006)
    assert lambda_from_voltage(p2) == 2.0 * lambda_from_voltage(p1)


def test_lambda_exactly_linear_in_charge_density():
    p1 = replace(REFERENCE_PARAMS, U0=0.01)
    p2 = replace(p1, sigma1=2.0 * p1.sigma1)
    assert lambda_from_voltage(p2) == 2.0 * lambda_from_voltage(p1)


def test_lambda_at_reference_voltage():
    """0.006 V on the reference device gives lambda/omega_m close to 0.17."""
    p = replace(REFERENCE_PARAMS, U0=0.006)
    lam_wm = lambda_from_voltage(p) / p.omega_m1
    assert math.isclose(lam_wm, LAMBDA_WM_AT_6MV, rel_tol=1e-13)
    assert round(lam_wm, 2) == 0.17


def test_nth_zero_temperature():
    assert n_th_from_temperature(2 * np.pi * 134e3, 0.0) == 0.0


def test_nth_is_one_at_ln2():
    # hbar*omega/(kB*T) = ln 2  ->  n = 1/(2 - 1) = 1
    omega = 2 * np.pi * 134e3
    T0 = CODATA2018.hbar * omega / (CODATA2018.kB * math.log(2.0))
    assert math.isclose(n_th_from_temperature(omega, T0), 1.0, rel_tol=1e-12)


def test_nth_high_temperature_expansion():
    # x = 1e-3: exact 1/(e^x - 1) against the 1/x - 1/2 + x/12 expansion
    omega = 1e6
    T0 = CODATA2018.hbar * omega / (CODATA2018.kB * 1e-3)
    n = n_th_from_temperature(omega, T0)
    assert math.isclose(n, 1e3 - 0.5 + 1e-3 / 12.0, rel_tol=1e-9)
    assert math.isclose(n, 999.500083333332, rel_tol=1e-12)


def test_nth_monotone_in_temperature_and_frequency():
    omega = 2 * np.pi * 134e3
    temps = [1e-4, 1e-3, 1e-2, 0.1, 1.0]
    occ = [n_th_from_temperature(omega, t) for t in temps]
    assert all(a < b for a, b in zip(occ, occ[1:]))
    freqs = [omega, 2 * omega, 5 * omega, 20 * omega]
    occ = [n_th_from_temperature(w, 0.1) for w in freqs]
    assert all(a > b for a, b in zip(occ, occ[1:]))


def test_nth_rejects_bad_arguments():
    with pytest.raises(ValueError):
        n_th_from_temperature(0.0, 1.0)
    with pytest.raises(ValueError):
        n_th_from_temperature(1.0, -1.0)


def test_x_zpf_reference_value():
    got = x_zpf(REFERENCE_PARAMS.m1, REFERENCE_PARAMS.omega_m1)
    assert math.isclose(got, XZPF_REFERENCE, rel_tol=1e-14)


def test_x_zpf_rejects_nonpositive():
    with pytest.raises(ValueError):
        x_zpf(-1.0, 1.0)
    with pytest.raises(ValueError):
        x_zpf(1.0, 0.0)


def test_effective_from_physical_figure_preset():
    """The working point (kappa=20, g=0.3, chi=kappa/4, theta=pi, Delta=omega)
    round-trips through the SI layer unchanged."""
    w = REFERENCE_PARAMS.omega_m1
    ep = effective_from_physical(
        REFERENCE_PARAMS,
        drive=dict(g1_eff=0.3 * w, g2_eff=0.3 * w, Delta_a=1.0 * w,
                   chi=5.0 * w, theta=np.pi, n_th1=1000.0, n_th2=1000.0))
    assert math.isclose(ep.g1_eff, 0.3, rel_tol=1e-15)
    assert math.isclose(ep.g2_eff, 0.3, rel_tol=1e-15)
    assert math.isclose(ep.Delta_a, 1.0, rel_tol=1e-15)
    assert math.isclose(ep.kappa, 20.0, rel_tol=1e-15)
    assert math.isclose(ep.gamma1, 1e-6, rel_tol=1e-15)
    assert math.isclose(ep.chi, 5.0, rel_tol=1e-15)
    assert ep.theta == np.pi % (2 * np.pi)
    assert ep.omega_m1 == 1.0
    assert ep.n_th1 == 1000.0


def test_effective_from_physical_zero_voltage():
    ep = effective_from_physical(
        REFERENCE_PARAMS,
        drive=dict(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, chi=0.0, theta=0.0))
    assert ep.lambda_mpa == 0.0
    assert ep.omega_m1_prime == ep.omega_m1


def test_effective_from_physical_rejects_negative_chi():
    with pytest.raises(ValueError):
        effective_from_physical(
            REFERENCE_PARAMS,
            drive=dict(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, chi=-1.0,
                       theta=0.0))


def test_effective_params_normalizes_theta():
    ep = EffectiveParams(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, kappa=1.0,
                         gamma1=0.1, gamma2=0.1, theta=-np.pi)
    assert ep.theta == np.pi
    ep = EffectiveParams(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, kappa=1.0,
                         gamma1=0.1, gamma2=0.1, theta=2 * np.pi)
    assert ep.theta == 0.0


def test_effective_params_validation():
    with pytest.raises(ValueError):
        EffectiveParams(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, kappa=-1.0,
                        gamma1=0.1, gamma2=0.1)
    with pytest.raises(ValueError):
        EffectiveParams(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, kappa=1.0,
                        gamma1=0.1, gamma2=0.1, n_th1=-2.0)


def test_physical_params_validation():
    with pytest.raises(ValueError):
        replace(REFERENCE_PARAMS, m1=0.0)
    with pytest.raises(ValueError):
        replace(REFERENCE_PARAMS, U0=-0.1)
    with pytest.raises(ValueError):
        replace(REFERENCE_PARAMS, T0=-1.0)


def test_omega_m1_prime_shift():
    ep = EffectiveParams(g1_eff=0.0, g2_eff=0.0, Delta_a=0.0, kappa=1.0,
                         gamma1=0.1, gamma2=0.1, lambda_mpa=0.05)
    assert ep.omega_m1_prime == 1.1


def test_optimal_opa_on_resonance_is_exact():
    for kappa in (1.0, 20.0):
        chi, theta = optimal_opa(Delta_a=1.0, omega_m1_prime=1.0, kappa=kappa)
        assert chi == kappa / 4.0
        assert theta == np.pi


def test_optimal_opa_small_kappa_limit():
    chi, _ = optimal_opa(Delta_a=2.0, omega_m1_prime=1.0, kappa=1e-9)
    assert math.isclose(chi, 0.5, rel_tol=1e-12)


def test_optimal_opa_half_kappa_detuning():
    kappa = 2.0
    chi, theta = optimal_opa(Delta_a=1.0 + kappa / 2.0, omega_m1_prime=1.0,
                             kappa=kappa)
    assert math.isclose(chi, kappa * math.sqrt(2.0) / 4.0, rel_tol=1e-15)
    target = complex(-0.5 * kappa, 0.5 * kappa)
    assert abs(2.0 * chi * cmath.exp(-1j * theta) - target) < 1e-12 * kappa


def test_optimal_opa_identity_randomized():
    rng = np.random.default_rng(7)
    for _ in range(200):
        kappa = rng.uniform(0.1, 50.0)
        delta = rng.uniform(-10.0, 10.0)
        chi, theta = optimal_opa(Delta_a=1.0 + delta, omega_m1_prime=1.0,
                                 kappa=kappa)
        assert 0.0 <= theta < 2 * np.pi
        lhs = 2.0 * chi * cmath.exp(-1j * theta)
        assert abs(lhs - complex(-0.5 * kappa, delta)) < 1e-12 * kappa


def test_optimal_opa_rejects_nonpositive_kappa():
    with pytest.raises(ValueError):
        optimal_opa(1.0, 1.0, 0.0)

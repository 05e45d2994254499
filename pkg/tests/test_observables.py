"""Phonon numbers, squeezing, negativity and the tripartite residual."""

import math
from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import random_physical_covariance
from omtrio.dynamics import build_drift, build_noise, steady_state
from omtrio.observables import (NotPositive, NotSymmetric,
                                closed_form_numin_two_mode,
                                compute_observables, log_negativity,
                                phonon_numbers, residual_contangle,
                                squeezing_db, squeezing_db_optimal,
                                symplectic_eigenvalues, symplectic_form)
from omtrio.params import (REFERENCE_PARAMS, EffectiveParams,
                           lambda_from_voltage, optimal_opa)

VACUUM6 = np.eye(6) / 2.0


def two_mode_squeezed(r):
    """Two-mode squeezed vacuum covariance (4x4).

    Diagonal blocks cosh(2r)/2 * I, off-diagonal sinh(2r)/2 * diag(1, -1);
    the smallest symplectic eigenvalue after partial transposition is
    exp(-2r)/2, so the logarithmic negativity is exactly 2r.
    """
    ch, sh = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    v = np.diag([ch, ch, ch, ch])
    v[0, 2] = v[2, 0] = sh
    v[1, 3] = v[3, 1] = -sh
    return v


def test_symplectic_form_properties():
    for n in (1, 2, 3):
        omega = symplectic_form(n)
        assert np.array_equal(omega.T, -omega)
        assert_allclose(omega @ omega, -np.eye(2 * n), atol=0.0)


def test_symplectic_eigenvalues_vacuum():
    assert_allclose(symplectic_eigenvalues(np.eye(4) / 2), [0.5, 0.5],
                    atol=1e-12)


def test_symplectic_eigenvalues_thermal_product():
    m = np.diag([3.0, 3.0, 0.7, 0.7])
    assert_allclose(symplectic_eigenvalues(m), [0.7, 3.0], atol=1e-10)


def test_symplectic_eigenvalues_determinant_identity():
    rng = np.random.default_rng(20)
    for n_modes in (2, 3):
        for _ in range(10):
            v = random_physical_covariance(rng, n_modes)
            nu = symplectic_eigenvalues(v)
            assert np.isclose(np.prod(nu ** 2), np.linalg.det(v), rtol=1e-10)


def test_symplectic_eigenvalues_input_checks():
    with pytest.raises(NotSymmetric):
        symplectic_eigenvalues(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(NotPositive):
        symplectic_eigenvalues(np.diag([1.0, -1.0]))
    with pytest.raises(ValueError):
        symplectic_eigenvalues(np.eye(3))


def test_phonon_numbers_vacuum_and_thermal():
    assert phonon_numbers(VACUUM6) == (0.0, 0.0)
    v = np.diag([0.5, 0.5, 7.5, 7.5, 1200.5, 1200.5])
    assert phonon_numbers(v) == (7.0, 1200.0)


def test_phonon_numbers_clamps_tiny_negative():
    v = np.diag([0.5, 0.5, 0.5 - 2e-10, 0.5, 0.5, 0.5])
    n1, n2 = phonon_numbers(v)
    assert n1 == 0.0 and n2 == 0.0


def test_squeezing_db_reference_points():
    assert squeezing_db(VACUUM6, 1) == 0.0
    v = VACUUM6.copy()
    v[2, 2] = 0.25
    assert math.isclose(squeezing_db(v, 1), -10 * math.log10(0.5),
                        rel_tol=1e-12)  # the 3 dB line
    v[4, 4] = 1.0
    assert math.isclose(squeezing_db(v, 2), -10 * math.log10(2.0),
                        rel_tol=1e-12)
    with pytest.raises(ValueError):
        squeezing_db(VACUUM6, 3)


def test_squeezing_db_optimal_sees_rotated_quadrature():
    # squeeze along a 45-degree direction: the X-variance alone misses it
    r = 0.8
    s = np.array([[math.cosh(r), math.sinh(r)],
                  [math.sinh(r), math.cosh(r)]])
    block = s @ np.eye(2) / 2 @ s.T
    v = VACUUM6.copy()
    v[2:4, 2:4] = block
    assert squeezing_db(v, 1) < 0.0  # looks anti-squeezed on X alone
    assert math.isclose(squeezing_db_optimal(v, 1),
                        -10 * math.log10(2 * math.exp(-2 * r) / 2),
                        rel_tol=1e-10)
    # on a diagonal block both conventions agree
    assert math.isclose(squeezing_db_optimal(VACUUM6, 2),
                        squeezing_db(VACUUM6, 2), abs_tol=1e-15)


def test_log_negativity_two_mode_squeezed():
    v = two_mode_squeezed(0.5)
    assert math.isclose(log_negativity(v, "a|b1"), 1.0, abs_tol=1e-9)
    # embedded in the full three-mode space with a vacuum spectator
    v6 = VACUUM6.copy()
    v6[:4, :4] = v
    assert math.isclose(log_negativity(v6, "a|b1"), 1.0, abs_tol=1e-9)
    assert log_negativity(v6, "a|b2") == 0.0
    assert math.isclose(log_negativity(v6, "a|b1b2"), 1.0, abs_tol=1e-9)


def test_log_negativity_vacuum_is_exactly_zero():
    for partition in ("a|b1", "a|b2", "b1|b2", "a|b1b2", "b1|ab2", "b2|ab1"):
        assert log_negativity(VACUUM6, partition) == 0.0


def test_log_negativity_partition_parsing():
    with pytest.raises(ValueError):
        log_negativity(VACUUM6, "a")
    with pytest.raises(ValueError):
        log_negativity(VACUUM6, "a|a")
    with pytest.raises(ValueError):
        log_negativity(VACUUM6, "ab1|b2x")


def test_closed_form_matches_eigen_method():
    rng = np.random.default_rng(21)
    p = np.diag([1.0, -1.0, 1.0, 1.0])
    for _ in range(100):
        v = random_physical_covariance(rng, 2)
        nu_eig = symplectic_eigenvalues(p @ v @ p)[0]
        nu_closed = closed_form_numin_two_mode(v)
        assert abs(nu_eig - nu_closed) < 1e-10


def test_partial_transpose_side_does_not_matter():
    rng = np.random.default_rng(22)
    p1 = np.diag([1.0, -1.0, 1.0, 1.0])
    p2 = np.diag([1.0, 1.0, 1.0, -1.0])
    for _ in range(25):
        v = random_physical_covariance(rng, 2)
        nu1 = symplectic_eigenvalues(p1 @ v @ p1)[0]
        nu2 = symplectic_eigenvalues(p2 @ v @ p2)[0]
        assert abs(nu1 - nu2) < 1e-10


def _local_symplectic(rng, n_modes):
    blocks = []
    for _ in range(n_modes):
        phi = rng.uniform(0, 2 * np.pi)
        c, s = math.cos(phi), math.sin(phi)
        rot = np.array([[c, s], [-s, c]])
        r = rng.uniform(-0.7, 0.7)
        sq = np.diag([math.exp(r), math.exp(-r)])
        blocks.append(rot @ sq)
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k, b in enumerate(blocks):
        out[2 * k:2 * k + 2, 2 * k:2 * k + 2] = b
    return out


def test_log_negativity_invariant_under_local_symplectics():
    rng = np.random.default_rng(23)
    for _ in range(10):
        v = random_physical_covariance(rng, 3)
        s = _local_symplectic(rng, 3)
        w = s @ v @ s.T
        for partition in ("a|b1", "a|b2", "b1|b2", "a|b1b2", "b1|ab2",
                          "b2|ab1"):
            assert math.isclose(log_negativity(v, partition),
                                log_negativity(w, partition),
                                rel_tol=1e-9, abs_tol=1e-9)


def test_residual_contangle_product_state():
    res, r_min = residual_contangle(VACUUM6)
    assert res == (0.0, 0.0, 0.0)
    assert r_min == 0.0


def test_residual_contangle_reports_true_minimum():
    rng = np.random.default_rng(24)
    for _ in range(10):
        v = random_physical_covariance(rng, 3)
        res, r_min = residual_contangle(v)
        assert r_min == min(res)


def test_residual_contangle_matches_definition():
    rng = np.random.default_rng(25)
    v = random_physical_covariance(rng, 3)
    res, _ = residual_contangle(v)
    expected = (
        log_negativity(v, "a|b1b2") ** 2 - log_negativity(v, "a|b1") ** 2
        - log_negativity(v, "a|b2") ** 2,
        log_negativity(v, "b1|ab2") ** 2 - log_negativity(v, "b1|a") ** 2
        - log_negativity(v, "b1|b2") ** 2,
        log_negativity(v, "b2|ab1") ** 2 - log_negativity(v, "b2|a") ** 2
        - log_negativity(v, "b2|b1") ** 2,
    )
    assert_allclose(res, expected, rtol=1e-12)


def test_compute_observables_vacuum_record():
    rec = compute_observables(VACUUM6)
    assert rec.stable
    assert rec.n1 == 0.0 and rec.n2 == 0.0
    assert rec.s_db_b1 == 0.0 and rec.s_db_b2 == 0.0
    assert rec.en_a_b1 == 0.0 and rec.en_a_b2 == 0.0 and rec.en_b1_b2 == 0.0
    assert rec.en_one_vs_two == (0.0, 0.0, 0.0)
    assert rec.r_min == 0.0


def _entanglement_point(u0, n_th):
    """Sideband-resolved working point that produces entanglement."""
    phys = replace(REFERENCE_PARAMS, U0=u0,
                   kappa=REFERENCE_PARAMS.omega_m1)
    lam = lambda_from_voltage(phys) / phys.omega_m1
    delta = 1.0 + 2.0 * lam
    chi, theta = optimal_opa(delta, delta, 1.0)
    return EffectiveParams(g1_eff=0.3, g2_eff=0.3, Delta_a=delta, kappa=1.0,
                           gamma1=1e-6, gamma2=1e-6, lambda_mpa=lam,
                           chi=chi, theta=theta, n_th1=n_th, n_th2=n_th)


def test_tripartite_entanglement_weakens_with_hotter_bath():
    # at a fixed small bias the residual is positive and shrinks when the
    # bath occupation goes from 100 to 1000
    values = {}
    for n_th in (100.0, 1000.0):
        ep = _entanglement_point(0.001, n_th)
        v = steady_state(build_drift(ep), build_noise(ep))
        _, r_min = residual_contangle(v)
        values[n_th] = r_min
    assert values[100.0] > 0.0
    assert values[1000.0] > 0.0
    assert values[1000.0] < values[100.0]

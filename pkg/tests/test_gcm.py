"""Unit tests for the generator coordinate method."""

from math import cos, pi, sin, sqrt

import numpy as np
import pytest
from scipy.integrate import quad

from lipkin3.gcm import (
    EmptyNaturalBasis,
    GcmConfig,
    GcmSolution,
    hamiltonian_kernel,
    hill_wheeler,
    i_integral,
    norm_eigenvalues,
    overlap_kernel,
)
from lipkin3.meanfield import energy_expectation, hf_amplitudes, hf_orbital
from lipkin3.model import ModelParams, exact_ground_state
from lipkin3.oracle import oracle_hamiltonian, oracle_slater_angles


def test_i_integral_against_quadrature():
    for (k1, k2, p) in [(0, 0, 0), (2, 1, 1), (3, 2, -3), (4, 0, 2), (1, 5, 0), (2, 2, 4)]:
        re = quad(lambda t: cos(p * t) * cos(t) ** k1 * sin(t) ** k2, 0, 2 * pi)[0]
        im = quad(lambda t: sin(p * t) * cos(t) ** k1 * sin(t) ** k2, 0, 2 * pi)[0]
        want = (re + 1j * im) / sqrt(2 * pi)
        assert abs(i_integral(k1, k2, p) - want) < 1e-12
    assert i_integral(2, 2, 1) == 0.0  # parity selection rule
    assert i_integral(1, 1, 5) == 0.0  # |p| > k1 + k2
    with pytest.raises(ValueError):
        i_integral(-1, 0, 0)


@pytest.mark.parametrize("chi", [0.5, 2.0, 4.0])
def test_kernels_match_oracle_determinants(chi):
    N = 4
    params = ModelParams.from_chi(N, chi)
    cfg = GcmConfig(params=params)
    phi1 = cfg.resolved_phi1()
    H = oracle_hamiltonian(params)
    for pa in np.linspace(0, 2 * pi, 5):
        va = oracle_slater_angles(phi1, pa, N)
        for pb in np.linspace(0.3, 2 * pi, 5):
            vb = oracle_slater_angles(phi1, pb, N)
            assert overlap_kernel(cfg, pa, pb) == pytest.approx(
                np.vdot(va, vb).real, abs=1e-12
            )
            assert hamiltonian_kernel(cfg, pa, pb) == pytest.approx(
                np.vdot(va, H @ vb).real, abs=1e-11
            )


def test_norm_eigenvalues_match_fourier_quadrature():
    cfg = GcmConfig(params=ModelParams.from_chi(5, 2.5))
    n = norm_eigenvalues(cfg)
    for p, np_val in n.items():
        want = quad(lambda d: overlap_kernel(cfg, d, 0.0) * cos(p * d), 0, 2 * pi)[0]
        assert np_val == pytest.approx(want, abs=1e-10)
    # Beyond |p| = N every eigenvalue vanishes.
    cfg_wide = GcmConfig(params=ModelParams.from_chi(5, 2.5), pmax=8)
    n_wide = norm_eigenvalues(cfg_wide)
    for p in (6, 7, 8, -6):
        assert n_wide[p] == 0.0


def test_hill_wheeler_energy_consistent_with_state():
    for chi in (0.5, 2.0, 4.0):
        params = ModelParams.from_chi(6, chi)
        sol = hill_wheeler(GcmConfig(params=params))
        assert isinstance(sol, GcmSolution)
        assert sol.energy == pytest.approx(
            energy_expectation(sol.state, params), abs=1e-9
        )


def test_gcm_between_exact_and_hf():
    for N in (4, 8):
        for chi in (0.5, 1.5, 2.5, 4.0):
            params = ModelParams.from_chi(N, chi)
            e_exact, _ = exact_ground_state(params)
            e_hf = energy_expectation(hf_amplitudes(params), params)
            e_gcm = hill_wheeler(GcmConfig(params=params)).energy
            assert e_exact - 1e-9 <= e_gcm <= e_hf + 1e-9


def test_gcm_chi_zero_recovers_uncorrelated_ground_state():
    params = ModelParams(N=6, epsilon=1.0, V=0.0)
    sol = hill_wheeler(GcmConfig(params=params))
    assert sol.energy == pytest.approx(-6.0, abs=1e-10)
    assert abs(sol.state.amps[0, 0]) == pytest.approx(1.0, abs=1e-10)


def test_gcm_state_even_parity():
    # phi2 -> -phi2 symmetry of the kernels keeps the GCM state even.
    sol = hill_wheeler(GcmConfig(params=ModelParams.from_chi(6, 2.0)))
    for p in range(7):
        for q in range(7 - p):
            if p % 2 or q % 2:
                assert abs(sol.state.amps[p, q]) < 1e-10


def test_norm_cutoff_and_empty_basis():
    params = ModelParams.from_chi(4, 2.0)
    sol = hill_wheeler(GcmConfig(params=params, norm_cutoff=1e-10))
    assert len(sol.n) >= 3
    with pytest.raises(EmptyNaturalBasis):
        hill_wheeler(GcmConfig(params=params, norm_cutoff=2.0))

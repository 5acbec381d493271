"""Unit tests for the analytic HF solution and parity projection."""

import numpy as np
import pytest

from lipkin3.meanfield import (
    HfOrbital,
    NullProjection,
    energy_expectation,
    hf_amplitudes,
    hf_orbital,
    phf_project,
)
from lipkin3.model import ModelParams, PQState, exact_ground_state


def test_orbital_normalized_everywhere():
    for chi in np.linspace(0.0, 8.0, 81):
        orb = hf_orbital(float(chi))
        assert orb.U00**2 + orb.U01**2 + orb.U02**2 == pytest.approx(1.0, abs=1e-12)


def test_orbital_phases():
    assert hf_orbital(0.5) == HfOrbital(1.0, 0.0, 0.0)
    orb = hf_orbital(2.0)
    assert orb.U02 == 0.0 and orb.U01 > 0
    orb = hf_orbital(4.0)
    assert orb.U02 > 0
    # Boundary values take the higher-chi branch.
    assert hf_orbital(1.0).U01 == pytest.approx(0.0, abs=1e-12)
    assert hf_orbital(3.0).U02 == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        hf_orbital(-0.5)


def test_unnormalized_orbital_rejected():
    with pytest.raises(ValueError):
        HfOrbital(1.0, 0.5, 0.0)


def test_hf_energy_per_particle():
    # Closed-form HF energy per particle (epsilon = 1): -1 for chi <= 1,
    # -(chi+1)^2 / (4 chi) for 1 <= chi <= 3, -(chi/3 + 1/chi) beyond;
    # continuous at both transitions.  N-independent by construction.
    for N in (6, 12):
        p = ModelParams.from_chi(N, 0.5)
        assert energy_expectation(hf_amplitudes(p), p) == pytest.approx(-N, abs=1e-10)
        for chi in (1.0, 2.0, 3.0):
            p = ModelParams.from_chi(N, chi)
            e = energy_expectation(hf_amplitudes(p), p) / N
            assert e == pytest.approx(-((chi + 1) ** 2) / (4 * chi), abs=1e-10)
        for chi in (3.0, 4.5):
            p = ModelParams.from_chi(N, chi)
            e = energy_expectation(hf_amplitudes(p), p) / N
            assert e == pytest.approx(-(chi / 3 + 1 / chi), abs=1e-10)


def test_hf_variational_bound():
    for chi in (0.5, 1.5, 2.5, 4.0):
        params = ModelParams.from_chi(N=6, chi=chi)
        e_exact, _ = exact_ground_state(params)
        e_hf = energy_expectation(hf_amplitudes(params), params)
        assert e_hf >= e_exact - 1e-10


def test_phf_zeroes_odd_and_renormalizes():
    params = ModelParams.from_chi(N=6, chi=2.0)
    proj = phf_project(hf_amplitudes(params))
    assert proj.norm() == pytest.approx(1.0, abs=1e-12)
    for p in range(7):
        for q in range(7):
            if p % 2 or q % 2:
                assert proj.amps[p, q] == 0.0


def test_phf_lowers_energy():
    for chi in (1.5, 2.5, 4.0):
        params = ModelParams.from_chi(N=8, chi=chi)
        hf = hf_amplitudes(params)
        phf = phf_project(hf)
        assert energy_expectation(phf, params) <= energy_expectation(hf, params) + 1e-12


def test_null_projection_raises():
    amps = np.zeros((3, 3), dtype=complex)
    amps[1, 0] = 1.0  # purely odd-parity state
    with pytest.raises(NullProjection):
        phf_project(PQState(N=2, amps=amps))


def test_energy_expectation_n_mismatch():
    params = ModelParams.from_chi(N=4, chi=1.0)
    with pytest.raises(ValueError):
        energy_expectation(hf_amplitudes(ModelParams.from_chi(N=5, chi=1.0)), params)

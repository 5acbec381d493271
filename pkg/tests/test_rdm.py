"""Unit tests for the 4-orbital reduced density matrices."""

import numpy as np
import pytest

from lipkin3.meanfield import hf_amplitudes, hf_orbital, phf_project
from lipkin3.model import ModelParams, PQState, exact_ground_state, pq_basis
from lipkin3.oracle import oracle_exact_ground, oracle_pq_vector, oracle_rdm, oracle_slater
from lipkin3.rdm import (
    SUBSYSTEMS,
    NineStateDensity,
    embed_to_fock,
    nine_state_fock_indices,
    rdm_from_hf,
    rdm_from_pq,
)


def random_symmetric_state(N, seed):
    rng = np.random.default_rng(seed)
    amps = np.zeros((N + 1, N + 1), dtype=complex)
    for p, q in pq_basis(N):
        amps[p, q] = rng.normal() + 1j * rng.normal()
    amps /= np.linalg.norm(amps)
    return PQState(N=N, amps=amps)


def oracle_vector_from_pq(state):
    v = None
    for p, q in pq_basis(state.N):
        term = state.amps[p, q] * oracle_pq_vector(state.N, p, q)
        v = term if v is None else v + term
    return v


def test_nine_state_validation():
    with pytest.raises(ValueError):
        NineStateDensity(matrix=np.eye(8))
    with pytest.raises(ValueError):
        NineStateDensity(matrix=np.eye(9))  # trace 9
    with pytest.raises(ValueError):
        rdm_from_pq(random_symmetric_state(4, 0), "bogus")


def test_rdm_is_density():
    st = random_symmetric_state(5, seed=11)
    for sub in SUBSYSTEMS:
        m = rdm_from_pq(st, sub).matrix
        assert np.trace(m).real == pytest.approx(1.0, abs=1e-12)
        assert np.min(np.linalg.eigvalsh(m)) > -1e-12


@pytest.mark.parametrize("sub", SUBSYSTEMS)
@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_rdm_matches_oracle_random_states(N, sub):
    st = random_symmetric_state(N, seed=100 + N)
    direct = rdm_from_pq(st, sub).matrix
    oracle = oracle_rdm(oracle_vector_from_pq(st), N, sub).matrix
    assert np.max(np.abs(direct - oracle)) < 1e-12


@pytest.mark.parametrize("sub", SUBSYSTEMS)
def test_rdm_column_choice_irrelevant(sub):
    # Symmetric-sector states cannot distinguish degeneracy columns.
    N = 4
    st = random_symmetric_state(N, seed=7)
    v = oracle_vector_from_pq(st)
    r12 = oracle_rdm(v, N, sub, columns=(1, 2)).matrix
    r24 = oracle_rdm(v, N, sub, columns=(2, 4)).matrix
    assert np.max(np.abs(r12 - r24)) < 1e-12


@pytest.mark.parametrize("sub", SUBSYSTEMS)
@pytest.mark.parametrize("chi", [0.5, 2.0, 4.0])
def test_hf_product_form_matches_expansion(chi, sub):
    # rdm_from_hf (closed product form) equals rdm_from_pq of the
    # expanded determinant, and both match the oracle partial trace.
    N = 5
    params = ModelParams.from_chi(N, chi)
    orb = hf_orbital(chi)
    via_product = rdm_from_hf(orb, sub).matrix
    via_expansion = rdm_from_pq(hf_amplitudes(params), sub).matrix
    assert np.max(np.abs(via_product - via_expansion)) < 1e-10
    w = np.array([orb.U00, orb.U01, orb.U02])
    via_oracle = oracle_rdm(oracle_slater(w, N), N, sub).matrix
    assert np.max(np.abs(via_product - via_oracle)) < 1e-10


def test_phf_rdm_matches_oracle():
    N = 4
    params = ModelParams.from_chi(N, 2.5)
    phf = phf_project(hf_amplitudes(params))
    for sub in SUBSYSTEMS:
        direct = rdm_from_pq(phf, sub).matrix
        oracle = oracle_rdm(oracle_vector_from_pq(phf), N, sub).matrix
        assert np.max(np.abs(direct - oracle)) < 1e-12


def test_exact_state_rdm_matches_full_space_ground_state():
    params = ModelParams.from_chi(4, 2.0)
    _, st = exact_ground_state(params)
    _, gs_full = oracle_exact_ground(params)
    # Align the global phase before comparing reduced states (both pure).
    for sub in SUBSYSTEMS:
        a = rdm_from_pq(st, sub).matrix
        b = oracle_rdm(gs_full, params.N, sub).matrix
        assert np.max(np.abs(a - b)) < 1e-10


def test_embedding_indices_and_trace():
    idx = nine_state_fock_indices()
    assert len(set(idx)) == 9
    # Each kept column holds at most one particle: no index sets both bits.
    for i in idx:
        assert not ((i & 1) and (i & 2))
        assert not ((i & 4) and (i & 8))
    st = random_symmetric_state(4, seed=3)
    rho = embed_to_fock(rdm_from_pq(st, "n0n1"))
    assert rho.n_modes == 4
    assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-12)

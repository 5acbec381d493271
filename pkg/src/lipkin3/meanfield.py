"""Analytic Hartree-Fock solution and parity-projected (PHF) state.

The HF orbital of the three-level Lipkin model is known in closed form as
a function of the dimensionless coupling chi, with two quantum phase
transitions: level 1 starts mixing at chi = 1 and level 2 at chi = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from .model import ModelParams, PQState, hamiltonian_matrix

__all__ = [
    "HfOrbital",
    "NullProjection",
    "hf_orbital",
    "hf_amplitudes",
    "phf_project",
    "energy_expectation",
]


class NullProjection(Exception):
    """Raised when a state has no component in the even-even parity sector."""


@dataclass(frozen=True)
class HfOrbital:
    """Components of the occupied HF orbital in the level basis (all >= 0)."""

    U00: float
    U01: float
    U02: float

    def __post_init__(self):
        n = self.U00**2 + self.U01**2 + self.U02**2
        if abs(n - 1.0) > 1e-12:
            raise ValueError(f"orbital not normalized: |U|^2 = {n}")


def hf_orbital(chi: float) -> HfOrbital:
    """Piecewise HF orbital; at a phase boundary the higher-chi branch is used."""
    if chi < 0:
        raise ValueError(f"chi must be nonnegative, got {chi}")
    if chi < 1:
        return HfOrbital(1.0, 0.0, 0.0)
    if chi < 3:
        return HfOrbital(sqrt(0.5 * (1 + 1 / chi)), sqrt(0.5 * (1 - 1 / chi)), 0.0)
    return HfOrbital(sqrt((chi + 3) / (3 * chi)), sqrt(1 / 3), sqrt((chi - 3) / (3 * chi)))


def _multinomial(N: int, p: int, q: int) -> int:
    return comb(N, p) * comb(N - p, q)


def hf_amplitudes(params: ModelParams) -> PQState:
    """HF Slater determinant expanded over the orthonormal |pq> basis.

    The occupation-sum coefficient is U00^(N-p-q) U01^p U02^q; the
    orthonormal-basis amplitude carries the extra sqrt(multinomial)
    counting the terms of the symmetric sum.
    """
    orb = hf_orbital(params.chi())
    N = params.N
    amps = np.zeros((N + 1, N + 1), dtype=complex)
    for p in range(N + 1):
        for q in range(N + 1 - p):
            c = orb.U00 ** (N - p - q) * orb.U01**p * orb.U02**q
            amps[p, q] = c * sqrt(_multinomial(N, p, q))
    state = PQState(N=N, amps=amps)
    nrm = state.norm()
    assert abs(nrm - 1.0) < 1e-10, f"HF expansion not normalized: {nrm}"
    return PQState(N=N, amps=amps / nrm)


def phf_project(state: PQState) -> PQState:
    """Project onto even parity of levels 1 and 2 and renormalize."""
    amps = state.amps.copy()
    for p in range(state.N + 1):
        for q in range(state.N + 1):
            if p % 2 == 1 or q % 2 == 1:
                amps[p, q] = 0.0
    nrm = np.linalg.norm(amps)
    if nrm < 1e-14:
        raise NullProjection("state has no even-even parity component")
    return PQState(N=state.N, amps=amps / nrm)


def energy_expectation(state: PQState, params: ModelParams) -> float:
    """<psi|H|psi> for a |pq>-basis state."""
    if state.N != params.N:
        raise ValueError(f"particle number mismatch: state N={state.N}, params N={params.N}")
    v = state.vector()
    e = np.vdot(v, hamiltonian_matrix(params) @ v)
    assert abs(e.imag) < 1e-12, f"energy expectation not real: {e}"
    return float(e.real)

"""Four-orbital reduced density matrices of the three-level Lipkin model.

A subsystem keeps two energy levels and the first two degeneracy columns.
Each kept column holds at most one particle among its two kept orbitals,
giving a 9-state basis |s1, s2> with s in {-, 0, 1}: '-' empty, '0' the
lower kept level occupied, '1' the upper kept level occupied.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .fock import FockDensity
from .meanfield import HfOrbital
from .model import PQState

__all__ = [
    "SUBSYSTEMS",
    "NineStateDensity",
    "rdm_from_pq",
    "rdm_from_hf",
    "embed_to_fock",
    "nine_state_fock_indices",
]

SUBSYSTEMS = ("n0n1", "n0n2", "n1n2")

# Basis order: (s1, s2) with s in (-, 0, 1), s1 major.
_SIGMA = ("-", "0", "1")


def _check_subsystem(sub: str) -> None:
    if sub not in SUBSYSTEMS:
        raise ValueError(f"subsystem must be one of {SUBSYSTEMS}, got {sub!r}")


@dataclass(frozen=True)
class NineStateDensity:
    """9x9 Hermitian density in the |s1, s2> basis, s1 major, order (-, 0, 1)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (9, 9):
            raise ValueError(f"matrix must be 9x9, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-10:
            raise ValueError("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-10:
            raise ValueError(f"trace is {np.trace(m)}, expected 1")
        object.__setattr__(self, "matrix", m)


def _idx(s1: str, s2: str) -> int:
    return _SIGMA.index(s1) * 3 + _SIGMA.index(s2)


def rdm_from_pq(state: PQState, sub: str) -> NineStateDensity:
    """Closed-form 4-orbital RDM from |pq>-basis amplitudes.

    Diagonal weights count ordered pairs of columns in the relevant
    levels; the even-parity coherence families are the pair-hop
    |0,0><1,1| and the exchange |0,1><1,0| terms.  Single-hop families
    |s,0><s,1| (and mirrored) vanish for parity-symmetric states but are
    required for symmetry-broken ones (HF); their weights follow from
    the same column counting and are validated against the brute-force
    partial trace.
    """
    _check_subsystem(sub)
    N = state.N
    if N < 2:
        raise ValueError("N must be >= 2")
    C = state.amps
    M = np.zeros((9, 9), dtype=complex)

    def cval(p, q):
        if 0 <= p and 0 <= q and p + q <= N:
            return C[p, q]
        return 0.0

    for p in range(N + 1):
        for q in range(N + 1 - p):
            w = abs(C[p, q]) ** 2
            r = N - p - q
            if sub == "n0n1":
                diag = {
                    ("-", "-"): q * (q - 1),
                    ("-", "0"): q * r,
                    ("0", "-"): q * r,
                    ("-", "1"): p * q,
                    ("1", "-"): p * q,
                    ("0", "0"): r * (r - 1),
                    ("0", "1"): p * r,
                    ("1", "0"): p * r,
                    ("1", "1"): p * (p - 1),
                }
                pair_hop = C[p, q] * np.conj(cval(p + 2, q)) * sqrt(
                    max(r * (r - 1), 0) * (p + 1) * (p + 2)
                )
                exchange = w * p * r
            elif sub == "n0n2":
                diag = {
                    ("-", "-"): p * (p - 1),
                    ("-", "0"): p * r,
                    ("0", "-"): p * r,
                    ("-", "1"): p * q,
                    ("1", "-"): p * q,
                    ("0", "0"): r * (r - 1),
                    ("0", "1"): q * r,
                    ("1", "0"): q * r,
                    ("1", "1"): q * (q - 1),
                }
                pair_hop = C[p, q] * np.conj(cval(p, q + 2)) * sqrt(
                    max(r * (r - 1), 0) * (q + 1) * (q + 2)
                )
                exchange = w * q * r
            else:  # n1n2
                diag = {
                    # Weight follows the column-counting pattern (r)(r-1);
                    # validated against the brute-force partial trace.
                    ("-", "-"): r * (r - 1),
                    ("-", "0"): p * r,
                    ("0", "-"): p * r,
                    ("-", "1"): q * r,
                    ("1", "-"): q * r,
                    ("0", "0"): p * (p - 1),
                    ("0", "1"): p * q,
                    ("1", "0"): p * q,
                    ("1", "1"): q * (q - 1),
                }
                pair_hop = cval(p + 2, q) * np.conj(cval(p, q + 2)) * sqrt(
                    (p + 1) * (p + 2) * (q + 1) * (q + 2)
                )
                exchange = w * p * q
            for (s1, s2), weight in diag.items():
                if weight:
                    M[_idx(s1, s2), _idx(s1, s2)] += w * weight
            M[_idx("0", "0"), _idx("1", "1")] += pair_hop
            M[_idx("1", "1"), _idx("0", "0")] += np.conj(pair_hop)
            M[_idx("0", "1"), _idx("1", "0")] += exchange
            M[_idx("1", "0"), _idx("0", "1")] += np.conj(exchange)

            # Single-hop coherences <ket column '0' | bra column '1'> with the
            # other column in state s; the companion factor counts columns
            # available for s given the bra/ket totals.
            if sub == "n0n1":
                hop = C[p, q] * np.conj(cval(p + 1, q)) * sqrt(max(r, 0) * (p + 1))
                companions = {"-": q, "0": r - 1, "1": p}
            elif sub == "n0n2":
                hop = C[p, q] * np.conj(cval(p, q + 1)) * sqrt(max(r, 0) * (q + 1))
                companions = {"-": p, "0": r - 1, "1": q}
            else:  # n1n2: hop moves a particle from level 1 to level 2
                hop = C[p, q] * np.conj(cval(p - 1, q + 1)) * sqrt(p * (q + 1))
                companions = {"-": r, "0": p - 1, "1": q}
            for s, factor in companions.items():
                if factor <= 0:
                    continue
                z = hop * factor
                for bra, ket in (((s, "0"), (s, "1")), (("0", s), ("1", s))):
                    M[_idx(*bra), _idx(*ket)] += z
                    M[_idx(*ket), _idx(*bra)] += np.conj(z)
    M /= N * (N - 1)
    return NineStateDensity(matrix=M)


def _column_density(orb: HfOrbital, sub: str) -> np.ndarray:
    """Single-column reduced state over (-, 0, 1) for the given subsystem.

    Tracing the third (unkept) level of the per-column HF orbital leaves
    the empty sector decoupled from the occupied one.
    """
    if sub == "n0n1":
        t, alpha, beta = orb.U02, orb.U00, orb.U01
    elif sub == "n0n2":
        t, alpha, beta = orb.U01, orb.U00, orb.U02
    else:
        t, alpha, beta = orb.U00, orb.U01, orb.U02
    rho = np.zeros((3, 3), dtype=complex)
    rho[0, 0] = t**2
    v = np.array([alpha, beta], dtype=complex)
    rho[1:, 1:] = np.outer(v, v.conj())
    return rho


def rdm_from_hf(orb: HfOrbital, sub: str) -> NineStateDensity:
    """4-orbital HF RDM: product of identical single-column reduced states."""
    _check_subsystem(sub)
    rho_col = _column_density(orb, sub)
    return NineStateDensity(matrix=np.kron(rho_col, rho_col))


def nine_state_fock_indices() -> list[int]:
    """Fock-space index of each 9-state basis element on 4 modes.

    Modes: 0 = column-1 lower level, 1 = column-1 upper level,
    2 = column-2 lower, 3 = column-2 upper; mode k is bit k.
    """
    occ = {"-": (0, 0), "0": (1, 0), "1": (0, 1)}
    out = []
    for s1 in _SIGMA:
        for s2 in _SIGMA:
            n0, n1 = occ[s1]
            n2, n3 = occ[s2]
            out.append(n0 + 2 * n1 + 4 * n2 + 8 * n3)
    return out


def embed_to_fock(rho: NineStateDensity) -> FockDensity:
    """Embed the 9-state density into the 16-dim Fock space of 4 modes."""
    idx = nine_state_fock_indices()
    m = np.zeros((16, 16), dtype=complex)
    m[np.ix_(idx, idx)] = rho.matrix
    return FockDensity(n_modes=4, matrix=m)

"""Occupation-basis algebra for small sets of fermionic modes.

Conventions: a basis state of n modes is the creation-operator monomial
in increasing mode order applied to the vacuum; the occupation of mode k
is bit k of the basis index (mode 0 is the least significant bit).
Jordan-Wigner signs follow from this ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "FockDensity",
    "MeasurementParams",
    "creation_ops",
    "parity_operator",
    "partial_trace",
    "thouless_unitary",
    "bogoliubov_matrices",
    "occupation_projectors",
    "von_neumann_entropy",
]

MAX_MODES = 6


@dataclass(frozen=True)
class FockDensity:
    """Hermitian, trace-1, PSD operator on the Fock space of n_modes modes."""

    n_modes: int
    matrix: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_modes <= MAX_MODES:
            raise ValueError(f"n_modes must be in [1, {MAX_MODES}], got {self.n_modes}")
        m = np.asarray(self.matrix, dtype=complex)
        d = 2**self.n_modes
        if m.shape != (d, d):
            raise ValueError(f"matrix must be {d}x{d}, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ValueError("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-12:
            raise ValueError(f"trace is {np.trace(m)}, expected 1")
        if np.linalg.eigvalsh(m).min() < -1e-10:
            raise ValueError("matrix has a significantly negative eigenvalue")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class MeasurementParams:
    """Six real parameters of a two-mode Thouless rotation generator.

    Generator H = h11 n_1 + h22 n_2 + h12 c1+ c2 + h12* c2+ c1
                + d12 c1+ c2+ + d12* c2 c1, Hermitian by construction.
    """

    h11: float = 0.0
    h22: float = 0.0
    h12: complex = 0.0
    d12: complex = 0.0

    def to_vector(self) -> np.ndarray:
        return np.array(
            [self.h11, self.h22, self.h12.real, self.h12.imag, self.d12.real, self.d12.imag]
        )

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "MeasurementParams":
        v = np.asarray(v, dtype=float)
        if v.shape != (6,):
            raise ValueError(f"expected 6 parameters, got shape {v.shape}")
        return cls(h11=v[0], h22=v[1], h12=complex(v[2], v[3]), d12=complex(v[4], v[5]))

    def __neg__(self) -> "MeasurementParams":
        return MeasurementParams.from_vector(-self.to_vector())


@lru_cache(maxsize=None)
def creation_ops(n_modes: int) -> tuple[np.ndarray, ...]:
    """Dense creation operators c_k+ with JW strings on modes below k."""
    I = np.eye(2)
    Z = np.diag([1.0, -1.0])
    U = np.array([[0.0, 0.0], [1.0, 0.0]])  # c+ on one mode: |1><0|
    ops = []
    for k in range(n_modes):
        op = np.eye(1)
        for j in range(n_modes):  # mode j occupies bit j; kron builds MSB first
            factor = Z if j < k else U if j == k else I
            op = np.kron(factor, op)
        ops.append(op)
    return tuple(ops)


@lru_cache(maxsize=None)
def parity_operator(n_modes: int) -> np.ndarray:
    d = 2**n_modes
    return np.diag([(-1.0) ** bin(i).count("1") for i in range(d)])


def _perm_parity(seq: Sequence[int]) -> int:
    """Parity (+1/-1) of the permutation sorting seq (distinct entries)."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _trace_tables(n_modes: int, keep: Sequence[int]):
    """Kept index, environment index and JW sign for every basis index.

    For each occupation bitstring the creation monomial (increasing mode
    order) is reordered as (kept modes in `keep` order)(environment modes
    increasing); the sign is the parity of that reordering restricted to
    occupied modes.
    """
    keep = list(keep)
    env = [m for m in range(n_modes) if m not in keep]
    d = 2**n_modes
    kept_idx = np.empty(d, dtype=np.int64)
    env_idx = np.empty(d, dtype=np.int64)
    signs = np.empty(d, dtype=np.int8)
    for i in range(d):
        target = [m for m in keep if (i >> m) & 1] + [m for m in env if (i >> m) & 1]
        signs[i] = _perm_parity(target)
        a = 0
        for pos, m in enumerate(keep):
            a |= ((i >> m) & 1) << pos
        e = 0
        for pos, m in enumerate(env):
            e |= ((i >> m) & 1) << pos
        kept_idx[i] = a
        env_idx[i] = e
    return kept_idx, env_idx, signs


def partial_trace(rho: FockDensity, keep: Sequence[int]) -> FockDensity:
    """Fermionic partial trace onto the modes in `keep` (in that order)."""
    keep = list(keep)
    if len(keep) == 0:
        raise ValueError("keep set must be nonempty")
    if len(set(keep)) != len(keep) or any(m < 0 or m >= rho.n_modes for m in keep):
        raise ValueError(f"invalid keep set {keep} for {rho.n_modes} modes")
    red = partial_trace_matrix(rho.matrix, rho.n_modes, keep)
    return FockDensity(n_modes=len(keep), matrix=red)


def partial_trace_matrix(mat: np.ndarray, n_modes: int, keep: Sequence[int]) -> np.ndarray:
    """Partial trace on a raw density matrix (no FockDensity validation)."""
    kept_idx, env_idx, signs = _trace_tables(n_modes, keep)
    dk = 2 ** len(keep)
    red = np.zeros((dk, dk), dtype=complex)
    for e in range(2 ** (n_modes - len(keep))):
        rows = np.flatnonzero(env_idx == e)
        s = signs[rows].astype(float)
        sub = mat[np.ix_(rows, rows)] * np.outer(s, s)
        red[np.ix_(kept_idx[rows], kept_idx[rows])] += sub
    return red


def _generator_matrix(mp: MeasurementParams) -> np.ndarray:
    """Second-quantized Thouless generator on the 4-dim Fock space of 2 modes."""
    c0, c1 = creation_ops(2)
    a0, a1 = c0.conj().T, c1.conj().T
    H = (
        mp.h11 * (c0 @ a0)
        + mp.h22 * (c1 @ a1)
        + mp.h12 * (c0 @ a1)
        + np.conj(mp.h12) * (c1 @ a0)
        + mp.d12 * (c0 @ c1)
        + np.conj(mp.d12) * (a1 @ a0)
    )
    return H


def thouless_unitary(mp: MeasurementParams) -> np.ndarray:
    """R = exp(i H) on the two-mode Fock space; parity-even by construction."""
    H = _generator_matrix(mp)
    w, v = np.linalg.eigh(H)
    return (v * np.exp(1j * w)) @ v.conj().T


def bogoliubov_matrices(mp: MeasurementParams) -> tuple[np.ndarray, np.ndarray]:
    """Single-particle (U, V) of the rotation: R c_i+ R+ = sum_j U_ji c_j+ + V_ji c_j."""
    h = np.array([[mp.h11, mp.h12], [np.conj(mp.h12), mp.h22]], dtype=complex)
    d = np.array([[0.0, mp.d12], [-mp.d12, 0.0]], dtype=complex)
    # The block matrix is Hermitian (Delta antisymmetric), so exp(i .) via eigh.
    block = np.block([[h, d], [-d.conj(), -h.conj()]])
    w, v = np.linalg.eigh(block)
    E = (v * np.exp(1j * w)) @ v.conj().T
    return E[:2, :2], E[2:, :2]


def occupation_projectors(n_modes: int) -> list[np.ndarray]:
    """Rank-1 diagonal projectors onto each occupation basis state."""
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    d = 2**n_modes
    return [np.diag([1.0 if i == k else 0.0 for i in range(d)]) for k in range(d)]


def entropy_of_matrix(mat: np.ndarray, clip: float = 1e-12) -> float:
    """-sum(lam ln lam) over eigenvalues, clipping small negatives."""
    lam = np.linalg.eigvalsh(mat)
    if lam.min() < -1e-8:
        raise ValueError(f"eigenvalue {lam.min()} below -1e-8: invalid density matrix")
    lam = lam[lam > clip]
    return float(-np.sum(lam * np.log(lam))) + 0.0 if lam.size else 0.0


def von_neumann_entropy(rho: FockDensity) -> float:
    """Von Neumann entropy in nats."""
    return entropy_of_matrix(rho.matrix)

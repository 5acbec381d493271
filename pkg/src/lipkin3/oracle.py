"""Independent small-N ground truth built in the full occupation space.

Everything here works in the 3^N configuration basis (one particle per
degeneracy column, level index per column) and, for reduced states, in
the 2^(3N)-dim Fock space of all 3N modes.  Deliberately simple and slow;
used by the test suite to validate every other module.

Mode ordering: mode(level, column) = level * N + (column - 1), i.e. all
level-0 modes first.  Configuration basis states are creation monomials
in column order, so the K operators act without Jordan-Wigner signs.
"""

from __future__ import annotations

from itertools import product
from math import factorial, sqrt

import numpy as np
from scipy.linalg import expm
from scipy.sparse import lil_matrix

from .fock import (
    MeasurementParams,
    entropy_of_matrix,
    occupation_projectors,
    _perm_parity,
)
from .model import ModelParams
from .rdm import SUBSYSTEMS, NineStateDensity, nine_state_fock_indices

__all__ = [
    "MAX_ORACLE_N",
    "configurations",
    "oracle_hamiltonian",
    "oracle_exact_ground",
    "oracle_pq_vector",
    "oracle_slater",
    "oracle_slater_angles",
    "oracle_rdm",
    "oracle_conditional_entropy",
    "oracle_discord_search",
]

MAX_ORACLE_N = 6


def _check_n(N: int) -> None:
    if N > MAX_ORACLE_N:
        raise ValueError(f"oracle supports N <= {MAX_ORACLE_N}, got {N}")


def configurations(N: int) -> list[tuple[int, ...]]:
    """All 3^N level assignments (sigma_1, ..., sigma_N)."""
    _check_n(N)
    return list(product(range(3), repeat=N))


def _k_operator(N: int, sigma: int, sigma_p: int, index: dict) -> lil_matrix:
    """K_{sigma sigma'} = sum_p c+_{sigma p} c_{sigma' p} on the config basis."""
    dim = 3**N
    K = lil_matrix((dim, dim))
    for cfg, j in index.items():
        for col in range(N):
            if cfg[col] == sigma_p:
                new = cfg[:col] + (sigma,) + cfg[col + 1 :]
                K[index[new], j] += 1.0
    return K


def oracle_hamiltonian(params: ModelParams) -> np.ndarray:
    """Dense 3^N x 3^N Hamiltonian assembled from the K operators."""
    N = params.N
    _check_n(N)
    cfgs = configurations(N)
    index = {c: i for i, c in enumerate(cfgs)}
    K10 = _k_operator(N, 1, 0, index).tocsr()
    K20 = _k_operator(N, 2, 0, index).tocsr()
    K21 = _k_operator(N, 2, 1, index).tocsr()
    diag = np.array([params.epsilon * (c.count(2) - c.count(0)) for c in cfgs])
    H = np.diag(diag)
    for K in (K10, K20, K21):
        K2 = (K @ K).toarray()
        H -= 0.5 * params.V * (K2 + K2.T)
    return H


def oracle_exact_ground(params: ModelParams) -> tuple[float, np.ndarray]:
    evals, evecs = np.linalg.eigh(oracle_hamiltonian(params))
    return float(evals[0]), evecs[:, 0]


def oracle_pq_vector(N: int, p: int, q: int) -> np.ndarray:
    """Normalized |pq> state in the configuration basis."""
    cfgs = configurations(N)
    v = np.array([1.0 if (c.count(1) == p and c.count(2) == q) else 0.0 for c in cfgs])
    count = factorial(N) / (factorial(N - p - q) * factorial(p) * factorial(q))
    return v / sqrt(count)


def oracle_slater(w: np.ndarray, N: int) -> np.ndarray:
    """Product determinant with every column in the orbital w (3-vector)."""
    _check_n(N)
    w = np.asarray(w, dtype=complex)
    w = w / np.linalg.norm(w)
    cfgs = configurations(N)
    return np.array([np.prod([w[s] for s in c]) for c in cfgs])


def oracle_slater_angles(phi1: float, phi2: float, N: int) -> np.ndarray:
    """Generating determinant at angles (phi1, phi2)."""
    w = np.array([np.cos(phi1), np.sin(phi1) * np.cos(phi2), np.sin(phi1) * np.sin(phi2)])
    return oracle_slater(w, N)


def _config_modes(cfg: tuple[int, ...], N: int) -> list[int]:
    """Occupied modes in column (creation) order."""
    return [s * N + col for col, s in enumerate(cfg)]


def oracle_rdm(
    state: np.ndarray, N: int, sub: str, columns: tuple[int, int] = (1, 2)
) -> NineStateDensity:
    """Direct fermionic partial trace of a configuration-basis state.

    Keeps the 4 modes of the chosen subsystem for the given pair of
    degeneracy columns, with Jordan-Wigner signs from the global mode
    order, and returns the 9-state reduced density.
    """
    if sub not in SUBSYSTEMS:
        raise ValueError(f"unknown subsystem {sub!r}")
    _check_n(N)
    lo, hi = {"n0n1": (0, 1), "n0n2": (0, 2), "n1n2": (1, 2)}[sub]
    c1, c2 = columns
    keep = [lo * N + c1 - 1, hi * N + c1 - 1, lo * N + c2 - 1, hi * N + c2 - 1]
    env_modes = [m for m in range(3 * N) if m not in keep]

    cols: dict[tuple[int, ...], np.ndarray] = {}
    cfgs = configurations(N)
    for cfg, amp in zip(cfgs, state):
        if abs(amp) < 1e-16:
            continue
        modes = _config_modes(cfg, N)
        occ = set(modes)
        kept_occ = [m for m in keep if m in occ]
        env_occ = [m for m in env_modes if m in occ]
        # Sign: reorder the column-order monomial into (kept in keep order,
        # env in increasing order).
        sign = _perm_parity(modes) * _perm_parity(kept_occ + env_occ)
        a = 0
        for pos, m in enumerate(keep):
            if m in occ:
                a |= 1 << pos
        key = tuple(env_occ)
        if key not in cols:
            cols[key] = np.zeros(16, dtype=complex)
        cols[key][a] += sign * amp

    rho16 = np.zeros((16, 16), dtype=complex)
    for col in cols.values():
        rho16 += np.outer(col, col.conj())

    idx = nine_state_fock_indices()
    nine = rho16[np.ix_(idx, idx)]
    leak = np.abs(rho16).sum() - np.abs(nine).sum()
    assert leak < 1e-12, f"reduced state leaks outside the 9-state subspace: {leak}"
    return NineStateDensity(matrix=nine / np.trace(nine).real)


def oracle_conditional_entropy(
    rho_ab: np.ndarray, n_a: int, mp: MeasurementParams
) -> float:
    """Measurement-based conditional entropy, full-matrix route.

    `rho_ab` lives on n_a + 2 modes with the A modes in the low bits; the
    measurement acts on the two trailing (B) modes.  Independent of the
    engine implementation: scipy expm for the rotation, explicit projector
    conjugation and full-dimension eigenvalues.
    """
    from .fock import _generator_matrix

    R = expm(1j * _generator_matrix(mp))
    dim_a = 2**n_a
    total = 0.0
    for P in occupation_projectors(2):
        pi_b = R.conj().T @ P @ R
        Pi = np.kron(pi_b, np.eye(dim_a))
        X = Pi @ rho_ab @ Pi
        pk = np.trace(X).real
        if pk < 1e-14:
            continue
        total += pk * entropy_of_matrix(X / pk)
    return total


def oracle_discord_search(
    rho_ab: np.ndarray,
    n_a: int,
    samples: int,
    seed: int = 0,
    polish_top: int = 5,
) -> tuple[float, MeasurementParams]:
    """Brute-force lower bound on J: random search plus coordinate descent.

    Returns (J, params) where J = S(rho_A) - min conditional entropy found.
    """
    rng = np.random.default_rng(seed)

    def objective(vec: np.ndarray) -> float:
        return oracle_conditional_entropy(rho_ab, n_a, MeasurementParams.from_vector(vec))

    draws = rng.uniform(-np.pi, np.pi, size=(samples, 6))
    values = np.array([objective(v) for v in draws])
    order = np.argsort(values)

    best_v, best_val = draws[order[0]], values[order[0]]
    for k in order[:polish_top]:
        v, val = _coordinate_descent(objective, draws[k].copy(), values[k])
        if val < best_val:
            best_v, best_val = v, val

    dim_b = 4
    rho_r = rho_ab.reshape(dim_b, 2**n_a, dim_b, 2**n_a)
    rho_a = np.einsum("babc->ac", rho_r)
    s_a = entropy_of_matrix(rho_a)
    return s_a - best_val, MeasurementParams.from_vector(best_v)


def _coordinate_descent(objective, v: np.ndarray, val: float, tol: float = 1e-8):
    step = 0.3
    while step > tol:
        improved = False
        for i in range(6):
            for delta in (step, -step):
                trial = v.copy()
                trial[i] += delta
                t = objective(trial)
                if t < val - 1e-15:
                    v, val = trial, t
                    improved = True
        if not improved:
            step /= 3.0
    return v, val

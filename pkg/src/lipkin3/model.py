"""Exact solution of the three-level Lipkin model in the |pq> basis.

The model has three N-fold degenerate levels (0, 1, 2) filled with N
fermions, one per degeneracy column.  The ground state lives in the
totally symmetric sector spanned by the orthonormal states |pq> with p
particles in level 1 and q in level 2, so the exact problem reduces to
diagonalizing a D x D matrix with D = (N+1)(N+2)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, isqrt, sqrt

import numpy as np

__all__ = [
    "ModelParams",
    "PQState",
    "pq_basis",
    "basis_dim",
    "pq_index",
    "pq_norm_factor",
    "hamiltonian_matrix",
    "exact_ground_state",
]


@dataclass(frozen=True)
class ModelParams:
    """Particle number N, level spacing epsilon and pair-hopping coupling V."""

    N: int
    epsilon: float = 1.0
    V: float = 0.0

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N!r}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.V < 0:
            raise ValueError(f"V must be nonnegative, got {self.V}")

    def chi(self) -> float:
        """Dimensionless coupling V (N-1) / epsilon."""
        return self.V * (self.N - 1) / self.epsilon

    @classmethod
    def from_chi(cls, N: int, chi: float, epsilon: float = 1.0) -> "ModelParams":
        """Build parameters from the dimensionless coupling chi."""
        if chi < 0:
            raise ValueError(f"chi must be nonnegative, got {chi}")
        return cls(N=N, epsilon=epsilon, V=chi * epsilon / (N - 1))


def basis_dim(N: int) -> int:
    return (N + 1) * (N + 2) // 2


def pq_basis(N: int) -> list[tuple[int, int]]:
    """All (p, q) with 0 <= p+q <= N, lexicographic in (p, q)."""
    return [(p, q) for p in range(N + 1) for q in range(N + 1 - p)]


def pq_index(N: int, p: int, q: int) -> int:
    """Position of (p, q) in the lexicographic enumeration."""
    if p < 0 or q < 0 or p + q > N:
        raise ValueError(f"(p, q) = ({p}, {q}) outside 0 <= p+q <= {N}")
    return p * (N + 1) - p * (p - 1) // 2 + q


def pq_norm_factor(N: int, p: int, q: int) -> float:
    """Normalization relating |pq> to the unnormalized symmetric sum |n1 n2>.

    Equals sqrt((N-p-q)! p! q! / N!), the inverse square root of the
    number of occupation-basis terms in the symmetric sum.
    """
    if p < 0 or q < 0 or p + q > N:
        raise ValueError(f"(p, q) = ({p}, {q}) outside 0 <= p+q <= {N}")
    return sqrt(factorial(N - p - q) * factorial(p) * factorial(q) / factorial(N))


@dataclass(frozen=True)
class PQState:
    """Amplitudes C_pq over the orthonormal |pq> basis.

    ``amps`` is an (N+1, N+1) complex array; entries with p+q > N are
    structurally zero.
    """

    N: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amps, dtype=complex)
        if a.shape != (self.N + 1, self.N + 1):
            raise ValueError(f"amps must have shape {(self.N + 1, self.N + 1)}")
        for p in range(self.N + 1):
            for q in range(self.N + 1):
                if p + q > self.N and abs(a[p, q]) > 1e-15:
                    raise ValueError(f"nonzero amplitude at invalid index ({p}, {q})")
        object.__setattr__(self, "amps", a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def vector(self) -> np.ndarray:
        """Flatten amplitudes following the lexicographic (p, q) enumeration."""
        return np.array([self.amps[p, q] for p, q in pq_basis(self.N)])

    @classmethod
    def from_vector(cls, N: int, vec: np.ndarray) -> "PQState":
        amps = np.zeros((N + 1, N + 1), dtype=complex)
        for (p, q), v in zip(pq_basis(N), vec):
            amps[p, q] = v
        return cls(N=N, amps=amps)

    def fix_phase(self) -> "PQState":
        """Rotate the global phase so the largest-|amplitude| entry is real positive."""
        flat = self.amps.ravel()
        k = int(np.argmax(np.abs(flat)))
        z = flat[k]
        if abs(z) == 0:
            return self
        return PQState(N=self.N, amps=self.amps * (abs(z) / z))


def hamiltonian_matrix(params: ModelParams) -> np.ndarray:
    """Hamiltonian of the three-level Lipkin model in the |pq> basis.

    Diagonal entries are epsilon (2q + p - N); the pair-hopping coupling
    connects (p, q) to (p +- 2, q), (p, q +- 2) and (p -+ 2, q +- 2).
    """
    N, eps, V = params.N, params.epsilon, params.V
    basis = pq_basis(N)
    D = len(basis)
    H = np.zeros((D, D))

    def idx(p, q):
        return pq_index(N, p, q) if (0 <= p and 0 <= q and p + q <= N) else None

    for j, (p, q) in enumerate(basis):
        r = N - p - q
        H[j, j] = eps * (2 * q + p - N)
        hops = [
            (p - 2, q, (r + 1) * (r + 2) * p * (p - 1)),
            (p, q - 2, (r + 1) * (r + 2) * q * (q - 1)),
            (p + 2, q - 2, (p + 1) * (p + 2) * q * (q - 1)),
            (p + 2, q, (r - 1) * r * (p + 1) * (p + 2)),
            (p, q + 2, (r - 1) * r * (q + 1) * (q + 2)),
            (p - 2, q + 2, (q + 1) * (q + 2) * p * (p - 1)),
        ]
        for pp, qq, w in hops:
            i = idx(pp, qq)
            if i is not None and w > 0:
                H[i, j] += -0.5 * V * sqrt(w)
    return H


def exact_ground_state(params: ModelParams) -> tuple[float, PQState]:
    """Lowest eigenpair of the |pq>-basis Hamiltonian.

    The global phase is fixed so the largest-magnitude amplitude is real
    positive.  If the lowest eigenvalue is (numerically) degenerate, the
    eigenvector supported on even (p, q) is selected.
    """
    H = hamiltonian_matrix(params)
    try:
        evals, evecs = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise RuntimeError(f"eigensolver failed: {exc}") from exc

    scale = max(abs(evals[0]), abs(evals[-1]), 1.0)
    degenerate = np.flatnonzero(evals - evals[0] < 1e-12 * scale)
    basis = pq_basis(params.N)
    even_mask = np.array([(p % 2 == 0) and (q % 2 == 0) for p, q in basis])
    chosen = None
    for k in degenerate:
        if np.linalg.norm(evecs[~even_mask, k]) < 1e-8:
            if chosen is not None:
                raise RuntimeError("ambiguous degenerate even-parity ground state")
            chosen = k
    if chosen is None:
        # Non-degenerate case: the ground state must still be even-even.
        if len(degenerate) > 1:
            raise RuntimeError("degenerate ground state without even-parity member")
        chosen = 0
    state = PQState.from_vector(params.N, evecs[:, chosen]).fix_phase()
    return float(evals[chosen]), state

"""One-coordinate generator coordinate method for the three-level Lipkin model.

The generating family is the set of Slater determinants with per-column
orbital (cos(phi1), sin(phi1) cos(phi2), sin(phi1) sin(phi2)) in the
level basis; phi1 is frozen at its Hartree-Fock value and phi2 is the
collective coordinate.  The overlap kernel depends only on phi2 - phi2',
so the natural basis consists of plane waves u_p = exp(-i p phi2)/sqrt(2 pi)
and the Hill-Wheeler equation becomes an ordinary Hermitian eigenproblem
after dividing out the norm eigenvalues n_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import acos, comb, cos, factorial, pi, sin, sqrt

import numpy as np

from .meanfield import hf_orbital
from .model import ModelParams, PQState

__all__ = [
    "GcmConfig",
    "GcmSolution",
    "EmptyNaturalBasis",
    "overlap_kernel",
    "norm_eigenvalues",
    "i_integral",
    "hamiltonian_kernel",
    "hill_wheeler",
]


class EmptyNaturalBasis(Exception):
    """Raised when every norm eigenvalue falls below the cutoff."""


@dataclass(frozen=True)
class GcmConfig:
    params: ModelParams
    phi1: float | None = None  # defaults to the HF value for params.chi()
    pmax: int | None = None  # plane-wave cutoff; n_p = 0 beyond |p| = N
    norm_cutoff: float = 1e-10  # relative threshold on norm eigenvalues

    def resolved_phi1(self) -> float:
        if self.phi1 is not None:
            return self.phi1
        return acos(hf_orbital(self.params.chi()).U00)

    def resolved_pmax(self) -> int:
        return self.params.N if self.pmax is None else self.pmax


@dataclass(frozen=True)
class GcmSolution:
    """Lowest Hill-Wheeler eigenpair and the assembled |pq>-basis state.

    ``f_coeffs`` maps p to g_p / sqrt(n_p): the weight function is
    f(phi2) = sum_p f_coeffs[p] exp(-i p phi2) / sqrt(2 pi).
    """

    energy: float
    g: dict[int, complex]
    n: dict[int, float]
    f_coeffs: dict[int, complex]
    state: PQState


def overlap_kernel(cfg: GcmConfig, phi2a: float, phi2b: float) -> float:
    """<phi2a|phi2b> = (u(phi2a) . u(phi2b))^N for unit generating orbitals."""
    phi1 = cfg.resolved_phi1()
    return (sin(phi1) ** 2 * cos(phi2a - phi2b) + cos(phi1) ** 2) ** cfg.params.N


def norm_eigenvalues(cfg: GcmConfig) -> dict[int, float]:
    """Norm-kernel eigenvalues n_p for the plane-wave natural basis.

    n_p = 2 pi * Fourier coefficient of the overlap kernel at frequency p;
    the binomial sum runs over k = |p|, |p|+2, ... up to N.
    """
    N = cfg.params.N
    phi1 = cfg.resolved_phi1()
    s2, c2 = sin(phi1) ** 2, cos(phi1) ** 2
    out: dict[int, float] = {}
    for p in range(-cfg.resolved_pmax(), cfg.resolved_pmax() + 1):
        total = 0.0
        for k in range(abs(p), N + 1, 2):
            total += (
                (0.5 * s2) ** k * c2 ** (N - k) * comb(N, k) * comb(k, (p + k) // 2)
            )
        out[p] = 2 * pi * total
    return out


def i_integral(k1: int, k2: int, p: int) -> complex:
    """(1/sqrt(2 pi)) integral of exp(i p phi) cos^k1(phi) sin^k2(phi)."""
    if k1 < 0 or k2 < 0:
        raise ValueError("k1 and k2 must be nonnegative")
    if (p + k1 + k2) % 2 or abs(p) > k1 + k2:
        return 0.0 + 0.0j
    acc = 0
    # cos^k1 sin^k2 = 2^-k1 (2i)^-k2 sum_j1,j2 C(k1,j1) C(k2,j2) (-1)^(k2-j2)
    #                 exp(i (2j1-k1 + 2j2-k2) phi)
    for j1 in range(k1 + 1):
        j2_twice = -p + k1 + k2 - 2 * j1  # frequency match: 2j1-k1+2j2-k2 = -p
        if j2_twice % 2 or not 0 <= j2_twice // 2 <= k2:
            continue
        j2 = j2_twice // 2
        acc += comb(k1, j1) * comb(k2, j2) * (-1) ** (k2 - j2)
    return sqrt(2 * pi) * acc * (0.5**k1) * (1 / (2j)) ** k2


def hamiltonian_kernel(cfg: GcmConfig, phi2a: float, phi2b: float) -> float:
    """<phi2a|H|phi2b> = eps N f^(N-2) (f g - chi/2 h) for normalized determinants."""
    par = cfg.params
    phi1 = cfg.resolved_phi1()
    s2, c2 = sin(phi1) ** 2, cos(phi1) ** 2
    f = s2 * cos(phi2a - phi2b) + c2
    g = s2 * sin(phi2a) * sin(phi2b) - c2
    h = 2 * s2 * c2 + s2**2 * (
        cos(phi2a) ** 2 * sin(phi2b) ** 2 + sin(phi2a) ** 2 * cos(phi2b) ** 2
    )
    return par.epsilon * par.N * f ** (par.N - 2) * (f * g - 0.5 * par.chi() * h)


def _trinomial(n: int, k1: int, k2: int) -> int:
    return factorial(n) // (factorial(k1) * factorial(k2) * factorial(n - k1 - k2))


def _natural_hamiltonian(cfg: GcmConfig, ps: list[int], n: dict[int, float]) -> np.ndarray:
    """<p'|H|p> over the retained natural basis, from the plane-wave expansion.

    Expanding f = c + a cos cos' + a sin sin' (a = sin^2 phi1, c = cos^2 phi1)
    multinomially turns every kernel term into a product of one-angle
    integrals I(k1, k2, p) = (1/sqrt(2 pi)) int exp(i p phi) cos^k1 sin^k2.
    The bra angle pairs with I(., ., p') and the ket angle with I(., ., -p).
    """
    par = cfg.params
    N = par.N
    phi1 = cfg.resolved_phi1()
    a, c = sin(phi1) ** 2, cos(phi1) ** 2
    chi = par.chi()

    # I-table: I[k1][k2] is a vector over p in [-pmax_i, pmax_i]
    kmax = N + 2
    pmax_i = kmax
    def ivec(k1, k2):
        return np.array([i_integral(k1, k2, p) for p in range(-pmax_i, pmax_i + 1)])

    icache: dict[tuple[int, int], np.ndarray] = {}

    def I(k1, k2):
        if (k1, k2) not in icache:
            icache[(k1, k2)] = ivec(k1, k2)
        return icache[(k1, k2)]

    def at(vec, p):
        return vec[p + pmax_i]

    bra = np.array(ps)
    ket = -np.array(ps)
    H = np.zeros((len(ps), len(ps)), dtype=complex)

    def add(coeff, kb1, kb2, kk1, kk2):
        vb = np.array([at(I(kb1, kb2), p) for p in bra])
        vk = np.array([at(I(kk1, kk2), p) for p in ket])
        return coeff * np.outer(vb, vk)

    for k1 in range(N):
        for k2 in range(N - k1):
            base = _trinomial(N - 1, k1, k2) * a ** (k1 + k2) * c ** (N - 1 - k1 - k2)
            H += add(base * a, k1, k2 + 1, k1, k2 + 1)
            H += add(-base * c, k1, k2, k1, k2)
    if N >= 2 and chi != 0:
        for k1 in range(N - 1):
            for k2 in range(N - 1 - k1):
                base = _trinomial(N - 2, k1, k2) * a ** (k1 + k2) * c ** (N - 2 - k1 - k2)
                H += add(-0.5 * chi * base * 2 * a * c, k1, k2, k1, k2)
                H += add(-0.5 * chi * base * a**2, k1 + 2, k2, k1, k2 + 2)
                H += add(-0.5 * chi * base * a**2, k1, k2 + 2, k1 + 2, k2)

    norm = np.array([sqrt(n[p]) for p in ps])
    H *= par.epsilon * N
    H /= np.outer(norm, norm)
    return H


def hill_wheeler(cfg: GcmConfig) -> GcmSolution:
    """Solve the Hill-Wheeler problem and assemble the GCM ground state."""
    par = cfg.params
    N = par.N
    n = norm_eigenvalues(cfg)
    nmax = max(n.values())
    if nmax <= 0:
        raise EmptyNaturalBasis("all norm eigenvalues vanish")
    ps = [p for p in sorted(n) if n[p] / nmax > cfg.norm_cutoff]
    if not ps:
        raise EmptyNaturalBasis("all norm eigenvalues below the cutoff")

    H = _natural_hamiltonian(cfg, ps, n)
    herm_err = np.max(np.abs(H - H.conj().T))
    assert herm_err < 1e-10, f"natural-basis Hamiltonian not Hermitian: {herm_err}"
    evals, evecs = np.linalg.eigh((H + H.conj().T) / 2)
    energy = float(evals[0])
    gvec = evecs[:, 0]

    phi1 = cfg.resolved_phi1()
    amps = np.zeros((N + 1, N + 1), dtype=complex)
    for p in range(N + 1):
        for q in range(N + 1 - p):
            acc = 0.0 + 0.0j
            for g_k, k in zip(gvec, ps):
                acc += g_k / sqrt(n[k]) * i_integral(p, q, -k)
            amps[p, q] = (
                sqrt(_trinomial(N, p, q))
                * sin(phi1) ** (p + q)
                * cos(phi1) ** (N - p - q)
                * acc
            )
    nrm = np.linalg.norm(amps)
    if nrm < 1e-14:
        raise EmptyNaturalBasis("assembled GCM state has zero norm")
    state = PQState(N=N, amps=amps / nrm).fix_phase()
    imag_resid = np.max(np.abs(state.amps.imag))
    assert imag_resid < 1e-10, f"GCM amplitudes not real after phase fixing: {imag_resid}"

    g = {p: complex(gv) for p, gv in zip(ps, gvec)}
    f_coeffs = {p: complex(gv / sqrt(n[p])) for p, gv in zip(ps, gvec)}
    return GcmSolution(energy=energy, g=g, n={p: n[p] for p in ps}, f_coeffs=f_coeffs, state=state)

"""Ground states and quantum discord of the three-level Lipkin model.

Modules
-------
model      exact diagonalization in the symmetric |pq> basis
meanfield  Hartree-Fock orbitals, amplitudes and parity projection
gcm        one-coordinate generator coordinate method (Hill-Wheeler)
fock       small-mode fermionic Fock algebra and Thouless rotations
rdm        4-orbital reduced density matrices (9-state basis)
discord    mutual information, classical correlation, quantum discord
oracle     slow independent ground truth for the test suite
cli        chi/N sweep driver writing CSV tables
"""

from .discord import (
    CorrelationReport,
    OptimizerConfig,
    Partition,
    classical_correlation,
    conditional_entropy,
    mutual_information,
    quantum_discord,
    stationarity_residual,
)
from .fock import (
    FockDensity,
    MeasurementParams,
    bogoliubov_matrices,
    creation_ops,
    occupation_projectors,
    parity_operator,
    partial_trace,
    thouless_unitary,
    von_neumann_entropy,
)
from .gcm import (
    EmptyNaturalBasis,
    GcmConfig,
    GcmSolution,
    hamiltonian_kernel,
    hill_wheeler,
    i_integral,
    norm_eigenvalues,
    overlap_kernel,
)
from .meanfield import (
    HfOrbital,
    NullProjection,
    energy_expectation,
    hf_amplitudes,
    hf_orbital,
    phf_project,
)
from .model import (
    ModelParams,
    PQState,
    basis_dim,
    exact_ground_state,
    hamiltonian_matrix,
    pq_basis,
    pq_index,
)
from .rdm import (
    SUBSYSTEMS,
    NineStateDensity,
    embed_to_fock,
    nine_state_fock_indices,
    rdm_from_hf,
    rdm_from_pq,
)

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "PQState",
    "pq_basis",
    "pq_index",
    "basis_dim",
    "hamiltonian_matrix",
    "exact_ground_state",
    "HfOrbital",
    "NullProjection",
    "hf_orbital",
    "hf_amplitudes",
    "phf_project",
    "energy_expectation",
    "GcmConfig",
    "GcmSolution",
    "EmptyNaturalBasis",
    "overlap_kernel",
    "norm_eigenvalues",
    "i_integral",
    "hamiltonian_kernel",
    "hill_wheeler",
    "FockDensity",
    "MeasurementParams",
    "creation_ops",
    "parity_operator",
    "partial_trace",
    "thouless_unitary",
    "bogoliubov_matrices",
    "occupation_projectors",
    "von_neumann_entropy",
    "SUBSYSTEMS",
    "NineStateDensity",
    "rdm_from_pq",
    "rdm_from_hf",
    "embed_to_fock",
    "nine_state_fock_indices",
    "Partition",
    "OptimizerConfig",
    "CorrelationReport",
    "mutual_information",
    "conditional_entropy",
    "classical_correlation",
    "quantum_discord",
    "stationarity_residual",
    "__version__",
]

"""Entanglement monogamy bounds for multiqubit states.

Closed-form concurrence and entanglement-of-formation measures, a family
of parametrized monogamy inequalities (lower bounds for powers >= 2 of
the concurrence and >= sqrt(2) of the EoF, upper bounds for negative
powers), and a deterministic Monte Carlo harness that checks them on
Haar-random pure states.
"""

from .linalg import (
    MAX_QUBITS,
    QubitRegister,
    as_density_matrix,
    as_state_vector,
    hermitian_eigenvalues,
    num_qubits_of,
    partial_trace,
    reduced_state,
)
from .measures import (
    Bipartition,
    binary_entropy,
    concurrence_pure,
    convex_roof_upper_bound,
    eof_from_squared_concurrence,
    eof_pure,
    eof_two_qubit_mixed,
    von_neumann_entropy,
    wootters_concurrence,
)
from .monogamy import (
    ALPHA_MIN_CONCURRENCE,
    ALPHA_MIN_EOF,
    AlphaSweep,
    BoundId,
    BoundKind,
    BoundReport,
    PairwiseProfile,
    PartitionSpec,
    bound_coefficients,
    eval_eof_bound,
    eval_lower_bound,
    eval_upper_bound,
    evaluate,
    profile,
    residual_sweep,
)
from .states import (
    SeededSampler,
    basis_state,
    generalized_schmidt,
    ghz_state,
    haar_random_pure,
    random_mixed,
    w_state,
)
from .harness import (
    CampaignConfig,
    CampaignResult,
    alpha_grid,
    campaign_state,
    load_state_file,
    run_campaign,
    save_state_file,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_MIN_CONCURRENCE",
    "ALPHA_MIN_EOF",
    "AlphaSweep",
    "Bipartition",
    "BoundId",
    "BoundKind",
    "BoundReport",
    "CampaignConfig",
    "CampaignResult",
    "MAX_QUBITS",
    "PairwiseProfile",
    "PartitionSpec",
    "QubitRegister",
    "SeededSampler",
    "alpha_grid",
    "as_density_matrix",
    "as_state_vector",
    "basis_state",
    "binary_entropy",
    "bound_coefficients",
    "campaign_state",
    "concurrence_pure",
    "convex_roof_upper_bound",
    "eof_from_squared_concurrence",
    "eof_pure",
    "eof_two_qubit_mixed",
    "eval_eof_bound",
    "eval_lower_bound",
    "eval_upper_bound",
    "evaluate",
    "generalized_schmidt",
    "ghz_state",
    "haar_random_pure",
    "hermitian_eigenvalues",
    "load_state_file",
    "num_qubits_of",
    "partial_trace",
    "profile",
    "random_mixed",
    "reduced_state",
    "residual_sweep",
    "run_campaign",
    "save_state_file",
    "von_neumann_entropy",
    "w_state",
    "wootters_concurrence",
]

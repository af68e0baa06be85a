"""Optimal Gaussian resources for continuous-variable teleportation networks.

Covariance-matrix algebra for symmetric squeezed-thermal resources, closed-form
and pipeline teleportation fidelities, entanglement measures (formation,
teleportation, localizable, contangle), homodyne localization, and a seeded
Monte Carlo falsifier.
"""

__version__ = "0.1.0"

from .gaussian import (
    CovarianceMatrix,
    ResourceSpec,
    SymplecticTransform,
    apply,
    beam_splitter,
    block_diag_cm,
    build_resource,
    n_splitter,
    omega,
    partial_transpose,
    purity,
    squeezed_thermal_cm,
    squeezer,
    symplectic_eigenvalues,
    vacuum_cm,
)
from .entanglement import (
    EntanglementReport,
    TwoModeBlocks,
    contangle_from_ET,
    entanglement_of_teleportation,
    entanglement_report,
    eof_localizable,
    eof_symmetric,
    epr_eta_symmetric,
    eta_closed_form,
    eta_generalized,
    eta_two_mode,
    is_entangled,
)
from .teleport import (
    ProtocolParams,
    TeleportOutcome,
    fidelity_from_variances,
    fidelity_network,
    phi_two_mode,
    teleported_variances,
    variances_closed_form_network,
)
from .optimize import (
    OptimizationResult,
    UnbiasedBias,
    WorstCase,
    d_N_opt,
    d_opt_two_mode,
    d_unbiased,
    g_N_opt,
    golden_section,
    numerical_optimum,
    optimal_fidelity,
    worst_case,
)
from .localize import (
    ConditionalState,
    homodyne_condition,
    localizable_entanglement,
    localizable_eta,
    localizable_report,
    localize,
)
from .mc import McConfig, McEstimate, simulate, variance_of_form

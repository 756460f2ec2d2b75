"""Freezing of quantum correlations under local flip noise.

Tools for two-qubit and multiqubit states whose discord or one-way work
deficit stays exactly constant over a finite noise window: closed-form
evolution under local bit/phase flip channels, discord and work-deficit
optimizers with independent cross-checking routes, necessary-and-sufficient
freezing conditions with terminal-noise solvers, a scalar index grading
how strongly a trajectory freezes, and anisotropic XY chain ground states
for scanning that index across a quantum phase transition.
"""

from .states import (
    CorrelatorState,
    DensityMatrix,
    DiagonalState,
    SweepingState,
    binary_entropy,
    canonical_state,
    canonical_spectrum,
    concurrence,
    diagonal_spectrum,
    diagonal_state,
    entropy,
    first_qubit_marginal,
    freezing_entropy,
    from_density,
    is_physical,
    random_physical_canonical,
    shannon_bits,
    spectrum_entropy,
    sweeping_marginal_params,
    sweeping_state,
    to_density,
    trace_out_first,
)
from .channels import (
    ChannelKind,
    apply_local_channel,
    evolve_correlators,
    evolve_diagonal,
    gamma_from_time,
    kraus_pair,
    relabel_for_channel,
)
from .correlations import (
    DeficitDiscordReport,
    MeasureResult,
    Projector,
    classical_correlation,
    deficit_discord_relation,
    dephased_entropy,
    discord,
    discord_full,
    discord_multipartite,
    measured_conditional_entropy,
    mutual_information,
    work_deficit,
    work_deficit_full,
)
from .freezing import (
    ComplementarityAudit,
    FreezingReport,
    NonconvexityWitness,
    PhaseDiagram,
    check_ns_discord,
    check_ns_multipartite,
    check_ns_workdeficit,
    complementarity_audit,
    freezing_terminal,
    nonconvexity_witness,
    phase_diagram,
    sample_freezing_states,
)
from .freezing_index import (
    FreezingInterval,
    Trajectory,
    default_gamma_grid,
    detect_intervals,
    exact_index,
    freezing_index,
    sample_trajectory,
)
from .spin_models import (
    EdResult,
    QptScan,
    ScalingFit,
    XYParams,
    ed_oracle,
    ground_state_energy,
    ground_state_observables,
    nn_correlator_state,
    nn_reduced_density,
    qpt_scan,
    scaling_fit,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelatorState",
    "DensityMatrix",
    "DiagonalState",
    "SweepingState",
    "binary_entropy",
    "canonical_state",
    "canonical_spectrum",
    "concurrence",
    "diagonal_spectrum",
    "diagonal_state",
    "entropy",
    "first_qubit_marginal",
    "freezing_entropy",
    "from_density",
    "is_physical",
    "random_physical_canonical",
    "shannon_bits",
    "spectrum_entropy",
    "sweeping_marginal_params",
    "sweeping_state",
    "to_density",
    "trace_out_first",
    "ChannelKind",
    "apply_local_channel",
    "evolve_correlators",
    "evolve_diagonal",
    "gamma_from_time",
    "kraus_pair",
    "relabel_for_channel",
    "DeficitDiscordReport",
    "MeasureResult",
    "Projector",
    "classical_correlation",
    "deficit_discord_relation",
    "dephased_entropy",
    "discord",
    "discord_full",
    "discord_multipartite",
    "measured_conditional_entropy",
    "mutual_information",
    "work_deficit",
    "work_deficit_full",
    "ComplementarityAudit",
    "FreezingReport",
    "NonconvexityWitness",
    "PhaseDiagram",
    "check_ns_discord",
    "check_ns_multipartite",
    "check_ns_workdeficit",
    "complementarity_audit",
    "freezing_terminal",
    "nonconvexity_witness",
    "phase_diagram",
    "sample_freezing_states",
    "FreezingInterval",
    "Trajectory",
    "default_gamma_grid",
    "detect_intervals",
    "exact_index",
    "freezing_index",
    "sample_trajectory",
    "EdResult",
    "QptScan",
    "ScalingFit",
    "XYParams",
    "ed_oracle",
    "ground_state_energy",
    "ground_state_observables",
    "nn_correlator_state",
    "nn_reduced_density",
    "qpt_scan",
    "scaling_fit",
    "__version__",
]

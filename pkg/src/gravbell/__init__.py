"""Decoherence of an entangled qubit pair under gravitational time dilation.

The library evolves two-qubit density matrices under Markovian and
non-Markovian master equations whose local rates are scaled by Schwarzschild
redshift factors, and quantifies the resulting loss (and, in structured
environments, partial return) of coherence and entanglement.
"""

__version__ = "0.1.0"

from .channels import (
    ChannelKind,
    ChannelSpec,
    EffectiveRates,
    amplitude_damping_rhs,
    dephasing_rhs,
    effective_rates,
    gad_rhs,
    hamiltonian_term,
    thermal_occupation,
)
from .evolution import IntegratorConfig, Trajectory, evolve
from .memory_kernel import (
    KernelParams,
    KernelRegime,
    PoleError,
    classify,
    decoherence_integral,
    first_pole_time,
    gamma_tilde,
    nonmarkov_dephasing_rhs,
    scaled_rates,
)
from .metrics import (
    MetricSample,
    RevivalEvent,
    concurrence,
    detect_revivals,
    l1_coherence,
    negativity,
    pop_excited,
    purity,
    sample_metrics,
)
from .oracles import (
    DephasingOracle,
    coherence_halflife,
    dephased_bell_state,
    gad_steady_state_single,
)
from .scenarios import (
    ConfigError,
    PhysicsDomainError,
    RunResult,
    ScenarioConfig,
    load_config,
    load_config_file,
    simulate,
    sweep,
    validate_config,
)
from .spacetime import (
    GravitationalScenario,
    RedshiftPair,
    phase_shift,
    proper_time,
    redshift_difference,
    redshift_factor,
    schwarzschild_radius,
)
from .states import (
    DensityMatrix,
    bell_state,
    eigvals_hermitian,
    kron,
    partial_trace,
    pauli,
)

__all__ = [
    "ChannelKind",
    "ChannelSpec",
    "ConfigError",
    "DensityMatrix",
    "DephasingOracle",
    "EffectiveRates",
    "GravitationalScenario",
    "IntegratorConfig",
    "KernelParams",
    "KernelRegime",
    "MetricSample",
    "PhysicsDomainError",
    "PoleError",
    "RedshiftPair",
    "RevivalEvent",
    "RunResult",
    "ScenarioConfig",
    "Trajectory",
    "amplitude_damping_rhs",
    "bell_state",
    "classify",
    "coherence_halflife",
    "concurrence",
    "decoherence_integral",
    "dephased_bell_state",
    "dephasing_rhs",
    "detect_revivals",
    "effective_rates",
    "eigvals_hermitian",
    "evolve",
    "first_pole_time",
    "gad_rhs",
    "gad_steady_state_single",
    "gamma_tilde",
    "hamiltonian_term",
    "kron",
    "l1_coherence",
    "load_config",
    "load_config_file",
    "negativity",
    "nonmarkov_dephasing_rhs",
    "partial_trace",
    "pauli",
    "phase_shift",
    "pop_excited",
    "proper_time",
    "purity",
    "redshift_difference",
    "redshift_factor",
    "sample_metrics",
    "scaled_rates",
    "schwarzschild_radius",
    "simulate",
    "sweep",
    "thermal_occupation",
    "validate_config",
]

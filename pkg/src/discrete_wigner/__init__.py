"""
Discrete Wigner functions of qubits, qutrits and two-qubit states under
random telegraph noise and amplitude damping.
"""
from discrete_wigner.base import Report, build_phase_space, mub_set
from discrete_wigner.base.errors import (
    ConfigError,
    KernelViolationError,
    NegativeStateError,
    ValidationError,
)
from discrete_wigner.wigner import (
    DwfTable,
    NetAssignment,
    build_quantum_net,
    default_operators,
    dwf,
    find_matching_net,
    mana,
    negative_state,
    negativity,
    phase_point_operators,
    reconstruct,
)
from discrete_wigner.states import preset, resolve_state
from discrete_wigner.channels import channel_kraus
from discrete_wigner.sweep import (
    SweepConfig,
    figure_preset,
    parse_config,
    run_sweep,
    verify_all,
    write_output,
)

__all__ = (
    "ConfigError",
    "DwfTable",
    "KernelViolationError",
    "NegativeStateError",
    "NetAssignment",
    "Report",
    "SweepConfig",
    "ValidationError",
    "build_phase_space",
    "build_quantum_net",
    "channel_kraus",
    "default_operators",
    "dwf",
    "figure_preset",
    "find_matching_net",
    "mana",
    "mub_set",
    "negative_state",
    "negativity",
    "parse_config",
    "phase_point_operators",
    "preset",
    "reconstruct",
    "resolve_state",
    "run_sweep",
    "verify_all",
    "write_output",
)

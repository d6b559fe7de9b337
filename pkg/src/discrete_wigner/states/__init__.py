"""
Density matrices, Bloch parametrizations and named initial states
"""
from discrete_wigner.states.bloch import (
    GELL_MANN,
    PAULIS,
    QubitBloch,
    QutritBloch,
    TwoQubitBloch,
    bell_state,
    bloch_from_density,
    check_density,
    density_from_vector,
    maximally_mixed,
    project_to_psd,
    qubit_from_bloch,
    qutrit_from_bloch,
    random_density,
    two_qubit_from_bloch,
)
from discrete_wigner.states.presets import PresetState, preset, resolve_state, state_system

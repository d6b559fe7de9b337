"""
Quantum nets, phase-point operators and discrete Wigner functions
"""
from discrete_wigner.wigner.net import (
    NetAssignment,
    PhasePointOperatorSet,
    QuantumNet,
    build_quantum_net,
    default_net,
    default_operators,
    phase_point_operators,
)
from discrete_wigner.wigner.dwf import (
    DwfTable,
    dwf,
    line_sum_check,
    mana,
    negativity,
    operator_expectations,
    reconstruct,
    robustness,
    sum_negativity,
)
from discrete_wigner.wigner.negative import (
    NegativeStateResult,
    degenerate_ranks,
    negative_candidates,
    negative_state,
    search_non_degenerate_net,
)
from discrete_wigner.wigner.closed_form import (
    closed_form_qubit_dwf,
    closed_form_qubit_rtn_dwf,
    closed_form_qutrit_dwf,
    closed_form_two_qubit_dwf,
    printed_correlation,
)
from discrete_wigner.wigner.gates import (
    apply_unitary,
    explore_phase_gate_conjugation,
    is_conjugate,
)

# Needs discrete_wigner.states, which itself imports the modules above.
from discrete_wigner.wigner.search import NetSearchResult, find_matching_net, search_closed_form

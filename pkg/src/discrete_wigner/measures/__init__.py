"""
Coherence, entanglement, teleportation and correlation measures
"""
from discrete_wigner.measures.correlation import (
    CorrelationExtraction,
    correlation_direct,
    correlation_from_dwf,
)
from discrete_wigner.measures.measures import (
    CLASSICAL_FIDELITY,
    MeasureRecord,
    coherence_l1,
    concurrence,
    spin_flip,
    teleportation_fidelity,
)

"""
Registry of constant values
"""
from enum import Enum

# Dimensions with a tabulated set of mutually unbiased bases.
SUPPORTED_DIMENSIONS = (2, 3, 4)

# (characteristic, degree) of the field used for each dimension.
FIELD_BY_DIMENSION = {2: (2, 1), 3: (3, 1), 4: (2, 2)}

# Tolerances
TOL_UNIT = 1e-12  # tabulated vectors, hermiticity, traces
TOL_OPERATOR = 1e-10  # operator orthogonality, round trips, line sums
TOL_DEGENERATE = 1e-10  # eigenvalue gap below which two levels are merged
TOL_STATE_PSD = 1e-9  # minimum eigenvalue accepted for user-given parameters
TOL_CAPTION_PSD = 1e-6  # minimum eigenvalue accepted for two-decimal caption values
TOL_KERNEL = 1e-10  # slack allowed on kernel ranges before a violation is raised
TOL_MATCH = 1e-9  # closed form vs constructed table

# Seed used by the consolidated verification report.
VERIFY_SEED = 20240101


class Regime(Enum):
    """
    Memory regime of a channel parameter set.
    """

    markovian = "Markovian"
    non_markovian = "NonMarkovian"
    boundary = "Boundary"


class Status(Enum):
    """
    Outcome of a single verification check.
    """

    passed = "PASS"
    warning = "WARN"
    failed = "FAIL"


class System(Enum):
    """
    Physical systems a sweep can run on.
    """

    qubit = "qubit"
    qutrit = "qutrit"
    twoqubit = "twoqubit"

    @property
    def dimension(self):
        """
        :return: The Hilbert space dimension of the system.
        :rtype: int
        """
        return {"qubit": 2, "qutrit": 3, "twoqubit": 4}[self.value]


class ChannelFamily(Enum):
    """
    Noise families a sweep can evolve a state with.
    """

    rtn = "rtn"
    ad = "ad"
    none = "none"


# Measure vocabulary of the sweep runner, in output column order.
MEASURES = (
    "dwf",
    "negativity",
    "min_w",
    "sum_negativity",
    "mana",
    "robustness",
    "coherence",
    "concurrence",
    "fidelity",
)

# Measures that only make sense for a subset of systems.
MEASURE_SYSTEMS = {
    "concurrence": (System.twoqubit,),
    "fidelity": (System.twoqubit,),
    "robustness": (System.qubit, System.qutrit),
}

# Bell state labels and their accepted spellings.
BELL_LABELS = {
    "phi+": "phi+",
    "phi-": "phi-",
    "psi+": "psi+",
    "psi-": "psi-",
    "bell_phi_plus": "phi+",
    "bell_phi_minus": "phi-",
    "bell_psi_plus": "psi+",
    "bell_psi_minus": "psi-",
    u"Φ+": "phi+",
    u"Φ-": "phi-",
    u"Ψ+": "psi+",
    u"Ψ-": "psi-",
}

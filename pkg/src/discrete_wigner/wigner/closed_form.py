"""
Printed closed-form Wigner tables, kept as reference oracles.

Every table is affine in the Bloch parameters of the state, so each form is
stored as the sign (or coefficient) pattern of one entry per row. Entry
W_{i,j} of the printed lists lands at table position (i - 1, j - 1).

These forms use their own quantum net, which is not the default one:
compare them with `find_matching_net`, never directly.
"""
import logging

import numpy as np

from discrete_wigner.base.errors import ValidationError
from discrete_wigner.wigner.dwf import DwfTable

_LOG = logging.getLogger(__name__)

_SQRT3 = np.sqrt(3.0)

# Qubit: W = (1 + C.a) / 4, columns a1, a2, a3.
_QUBIT = np.array(
    [
        [[0, -1, 1], [0, 1, -1]],
        [[0, 1, 1], [0, -1, -1]],
    ],
    dtype=float,
)

# Qubit under random telegraph noise, W = (1 + a3 c3 + (a1 c1 + a2 c2) Λ(t)) / 4,
# columns c1, c2, c3.
_QUBIT_RTN = np.array(
    [
        [[-1, -1, 1], [-1, 1, -1]],
        [[1, 1, 1], [1, -1, -1]],
    ],
    dtype=float,
)

# Qutrit: W = (1 + C.n) / 9, columns n1 .. n8.
_QUTRIT = np.array(
    [
        [
            [0, 0, _SQRT3, 0, 0, -_SQRT3, -3, 1],
            [-_SQRT3, -3, -_SQRT3, 0, 0, 0, 0, 1],
            [0, 0, 0, -_SQRT3, 3, 0, 0, -2],
        ],
        [
            [0, 0, _SQRT3, 0, 0, -_SQRT3, 3, 1],
            [-_SQRT3, 3, -_SQRT3, 0, 0, 0, 0, 1],
            [0, 0, 0, -_SQRT3, -3, 0, 0, -2],
        ],
        [
            [0, 0, _SQRT3, 0, 0, 2 * _SQRT3, 0, 1],
            [2 * _SQRT3, 0, -_SQRT3, 0, 0, 0, 0, 1],
            [0, 0, 0, 2 * _SQRT3, 0, 0, 0, -2],
        ],
    ],
    dtype=float,
)

# Two qubits: W = (1 + sign.(a, s, t)) / 16, columns
# a1 a2 a3 | s1 s2 s3 | t11 t12 t13 t21 t22 t23 t31 t32 t33.
_TWO_QUBIT_SIGNS = (
    ("--+ -++ +-- +-- -++", "--+ --- +++ +++ ---", "-+- -++ +-- -++ +--", "-+- --- +++ --- +++"),
    ("--+ +-+ -+- -+- +-+", "--+ ++- --+ --+ ++-", "-+- +-+ -+- +-+ -+-", "-+- ++- --+ ++- --+"),
    ("+++ -++ -++ -++ -++", "+++ --- --- --- ---", "+-- -++ -++ +-- +--", "+-- --- --- +++ +++"),
    ("+++ +-+ +-+ +-+ +-+", "+++ ++- ++- ++- ++-", "+-- +-+ +-+ -+- -+-", "+-- ++- ++- --+ --+"),
)
_TWO_QUBIT = np.array(
    [
        [[1.0 if sign == "+" else -1.0 for sign in pattern.replace(" ", "")] for pattern in row]
        for row in _TWO_QUBIT_SIGNS
    ]
)

# Printed extraction of t_ij = 1 - 2 sum W over eight 1-based table entries.
PRINTED_CORRELATION_ENTRIES = {
    (0, 0): (11, 12, 13, 14, 41, 42, 43, 44),
    (0, 1): (12, 14, 21, 23, 31, 33, 42, 44),
    (0, 2): (12, 14, 22, 24, 31, 33, 41, 43),
    (1, 0): (11, 12, 23, 24, 33, 34, 41, 42),
    (1, 1): (12, 13, 21, 24, 31, 34, 42, 43),
    (1, 2): (12, 13, 22, 23, 31, 34, 41, 44),
    (2, 0): (11, 12, 23, 24, 31, 32, 43, 44),
    (2, 1): (12, 13, 21, 24, 32, 33, 41, 44),
    (2, 2): (11, 14, 21, 24, 31, 34, 41, 44),
}


def _vector(values, size, name):
    values = np.asarray(values, dtype=float).ravel()
    if values.shape != (size,):
        raise ValidationError("Expected %d %s parameters, got %d" % (size, name, values.size))
    return values


def closed_form_qubit_dwf(a):
    """
    >>> closed_form_qubit_dwf([0.5, 0.56, -0.66]).entries.round(3).tolist()
    [[-0.055, 0.555], [0.225, 0.275]]

    :param a: The qubit Bloch vector (a1, a2, a3).
    :rtype: DwfTable
    """
    a = _vector(a, 3, "qubit")
    return DwfTable((1.0 + _QUBIT.dot(a)) / 4.0)


def closed_form_qubit_rtn_dwf(a, kernel):
    """
    Printed Wigner table of a qubit under random telegraph noise.

    :param a: The qubit Bloch vector (a1, a2, a3) at t = 0.
    :param float kernel: The memory kernel Λ(t) at the time of interest.
    :rtype: DwfTable
    """
    a = _vector(a, 3, "qubit")
    scaled = np.array([a[0] * kernel, a[1] * kernel, a[2]])
    return DwfTable((1.0 + _QUBIT_RTN.dot(scaled)) / 4.0)


def closed_form_qutrit_dwf(n):
    """
    :param n: The qutrit Gell-Mann vector (n1, ..., n8).
    :rtype: DwfTable
    """
    n = _vector(n, 8, "qutrit")
    return DwfTable((1.0 + _QUTRIT.dot(n)) / 9.0)


def closed_form_two_qubit_dwf(a, s, correlations):
    """
    :param a: The local Bloch vector of the first qubit.
    :param s: The local Bloch vector of the second qubit.
    :param correlations: The 3 x 3 correlation matrix t_ij.
    :rtype: DwfTable
    """
    params = np.concatenate(
        [
            _vector(a, 3, "first qubit"),
            _vector(s, 3, "second qubit"),
            _vector(correlations, 9, "correlation"),
        ]
    )
    return DwfTable((1.0 + _TWO_QUBIT.dot(params)) / 16.0)


def printed_correlation(table):
    """
    Evaluate the printed t_ij extraction formulas on a two-qubit table.

    >>> printed_correlation(DwfTable(np.full((4, 4), 1.0 / 16))).tolist()
    [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]

    :param DwfTable table: A 4 x 4 Wigner table.
    :rtype: numpy.ndarray
    """
    if table.dimension != 4:
        raise ValidationError(
            "Correlation extraction needs a 4x4 table, got d=%d" % table.dimension
        )
    result = np.zeros((3, 3))
    for (row, column), entries in PRINTED_CORRELATION_ENTRIES.items():
        total = sum(table[(entry // 10 - 1, entry % 10 - 1)] for entry in entries)
        result[row, column] = 1.0 - 2.0 * total
    return result

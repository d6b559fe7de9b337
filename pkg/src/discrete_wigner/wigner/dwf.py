"""
Discrete Wigner functions and the quantities derived from them.
"""
import itertools
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import as_square_matrix, freeze
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.base.report import Report

_LOG = logging.getLogger(__name__)

# Dimensions for which the depolarizing robustness formula holds.
_PRIME_DIMENSIONS = (2, 3)


class DwfTable(object):
    """
    A d x d real quasi-probability table indexed by (q, p).
    """

    def __init__(self, entries):
        """
        :param entries: A d x d array of real values.
        :raise ValidationError: If the table is not square or not real.
        """
        entries = np.asarray(entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValidationError("Expected a square table, got shape %r" % (entries.shape,))
        if np.iscomplexobj(entries):
            if np.max(np.abs(entries.imag)) > constants.TOL_UNIT:
                raise ValidationError("Wigner table has imaginary entries")
            entries = entries.real
        self._entries = freeze(entries.astype(float))

    def __repr__(self):
        return "<DwfTable d=%d>" % self.dimension

    def __getitem__(self, point):
        q, p = point
        return float(self._entries[q, p])

    def __eq__(self, other):
        return isinstance(other, DwfTable) and np.array_equal(self._entries, other.entries)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self._entries.shape[0]

    @property
    def entries(self):
        """
        :rtype: numpy.ndarray
        """
        return self._entries

    def total(self):
        """
        :return: The sum of every entry, 1 for a normalized table.
        :rtype: float
        """
        return float(self._entries.sum())

    def minimum(self):
        """
        :return: The smallest entry.
        :rtype: float
        """
        return float(self._entries.min())

    def flatten(self):
        """
        :return: The entries in row-major (q, p) order.
        :rtype: list(float)
        """
        return self._entries.ravel().tolist()

    def column_names(self):
        """
        >>> DwfTable(np.full((2, 2), 0.25)).column_names()
        ['W_1_1', 'W_1_2', 'W_2_1', 'W_2_2']

        :return: The names of the flattened entries, 1-based.
        :rtype: list(str)
        """
        return [
            "W_%d_%d" % (q + 1, p + 1)
            for q, p in itertools.product(range(self.dimension), repeat=2)
        ]

    def to_dict(self):
        """
        :return: A json-compatible representation.
        :rtype: dict
        """
        return {"dimension": self.dimension, "entries": self._entries.tolist()}


def _check_state(rho, ops):
    return as_square_matrix(rho, dimension=ops.dimension, name="density matrix")


def dwf(rho, ops):
    """
    Compute the discrete Wigner function W_a = Tr(A_a rho) / d.

    :param rho: A d x d density matrix.
    :param PhasePointOperatorSet ops: The phase-point operators.
    :rtype: DwfTable
    :raise ValidationError: If the dimensions do not match.
    """
    rho = _check_state(rho, ops)
    # Tr(A rho) = sum_ij A_ij rho_ji
    traces = np.einsum("qpij,ji->qp", ops.as_grid(), rho)
    return DwfTable(traces / ops.dimension)


def operator_expectations(rho, ops):
    """
    :param rho: A d x d density matrix.
    :param PhasePointOperatorSet ops: The phase-point operators.
    :return: The d x d grid of Tr(A_a rho) = d W_a.
    :rtype: numpy.ndarray
    """
    return dwf(rho, ops).entries * ops.dimension


def line_sum_check(table, net, rho, tol=constants.TOL_OPERATOR):
    """
    Compare the sum of the table over every line with the probability of
    the basis vector attached to that line.

    :param DwfTable table: The Wigner table of `rho`.
    :param QuantumNet net: The net the table was computed with.
    :param rho: The d x d density matrix.
    :param float tol: Pass threshold on the largest deviation.
    :rtype: Report
    """
    rho = as_square_matrix(rho, dimension=net.dimension, name="density matrix")
    report = Report("line_sums.d%d" % net.dimension)
    deviations = []
    for striation_index, line_index, line, projector in net.iter_lines():
        total = sum(table[point] for point in line.points)
        probability = float(np.real(np.trace(projector.dot(rho))))
        deviations.append(
            {
                "striation": striation_index,
                "line": line_index,
                "sum": total,
                "probability": probability,
                "deviation": abs(total - probability),
            }
        )
    worst = max(row["deviation"] for row in deviations)
    report.add_threshold(
        "line_sums", worst, tol, detail="%d lines" % len(deviations), data={"lines": deviations}
    )
    return report


def reconstruct(table, ops):
    """
    Rebuild the density matrix sum_a W_a A_a.

    :param DwfTable table: A Wigner table.
    :param PhasePointOperatorSet ops: The phase-point operators it was computed with.
    :rtype: numpy.ndarray
    :raise ValidationError: If the dimensions do not match.
    """
    if table.dimension != ops.dimension:
        raise ValidationError(
            "Cannot reconstruct a d=%d table with d=%d operators"
            % (table.dimension, ops.dimension)
        )
    return np.einsum("qp,qpij->ij", table.entries, ops.as_grid())


def negativity(rho, ops):
    """
    The discrete Wigner negativity |min_a Tr(A_a rho)|, zero when no
    expectation is below -1e-12.

    :param rho: A d x d density matrix.
    :param PhasePointOperatorSet ops: The phase-point operators.
    :rtype: float
    """
    lowest = float(operator_expectations(rho, ops).min())
    return -lowest if lowest < -constants.TOL_UNIT else 0.0


def robustness(neg, dimension):
    """
    Robustness of a state against depolarizing noise, 1 - 1 / (D² N + 1).

    >>> robustness(0.0, 3)
    0.0

    :param float neg: A discrete Wigner negativity.
    :param int dimension: The prime dimension D, 2 or 3.
    :rtype: float
    :raise ValidationError: If the dimension is not prime or the negativity is negative.
    """
    if dimension not in _PRIME_DIMENSIONS:
        raise ValidationError(
            "Robustness is only defined for prime dimensions %r, got %r"
            % (_PRIME_DIMENSIONS, dimension)
        )
    if neg < 0:
        raise ValidationError("Negativity must be non-negative, got %r" % neg)
    return 1.0 - 1.0 / (dimension ** 2 * neg + 1.0)


def sum_negativity(table):
    """
    >>> sum_negativity(DwfTable([[-0.1, 0.3], [0.4, 0.4]]))
    0.1

    :param DwfTable table: A Wigner table.
    :return: The total absolute weight of the negative entries.
    :rtype: float
    """
    entries = table.entries
    return float(-entries[entries < 0].sum()) if (entries < 0).any() else 0.0


def mana(table):
    """
    The natural logarithm of the absolute sum of the table.

    :param DwfTable table: A normalized Wigner table.
    :rtype: float
    """
    # the absolute sum is at least 1 for a normalized table
    return max(0.0, float(np.log(np.abs(table.entries).sum())))

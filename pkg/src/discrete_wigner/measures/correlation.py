"""
Two-qubit correlation matrix t_ij = Tr(rho σ_i ⊗ σ_j).
"""
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import as_square_matrix
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.base.report import Report
from discrete_wigner.states.bloch import PAULIS
from discrete_wigner.wigner.closed_form import printed_correlation
from discrete_wigner.wigner.dwf import reconstruct

_LOG = logging.getLogger(__name__)

_PAIRS = np.array([[np.kron(first, second) for second in PAULIS] for first in PAULIS])


def correlation_direct(rho):
    """
    >>> correlation_direct(np.eye(4) / 4).tolist()
    [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]

    :param rho: A 4 x 4 density matrix.
    :return: The 3 x 3 correlation matrix.
    :rtype: numpy.ndarray
    """
    rho = as_square_matrix(rho, dimension=4, name="two-qubit density matrix")
    return np.real(np.einsum("xyij,ji->xy", _PAIRS, rho))


class CorrelationExtraction(object):
    """
    The correlation matrix read from a Wigner table two ways.
    """

    def __init__(self, primary, printed):
        """
        :param numpy.ndarray primary: Extraction through reconstruction of the state.
        :param numpy.ndarray printed: Extraction with the printed t_ij formulas.
        """
        self.primary = primary
        self.printed = printed

    def __repr__(self):
        return "<CorrelationExtraction deviation=%.3g>" % self.deviation

    @property
    def deviation(self):
        """
        :return: The largest entrywise difference between both paths.
        :rtype: float
        """
        return float(np.max(np.abs(self.primary - self.printed)))

    def sign_flips(self, tol=constants.TOL_OPERATOR):
        """
        :return: The (i, j) entries, 0-based, where the printed path returns -t_ij instead of t_ij.
        :rtype: list(tuple(int, int))
        """
        flips = []
        for (row, column), value in np.ndenumerate(self.primary):
            printed = self.printed[row, column]
            if abs(value) > tol and abs(printed + value) <= tol:
                flips.append((row, column))
        return flips

    def report(self, tol=constants.TOL_OPERATOR):
        """
        Mismatches between both paths are reported as warnings.

        :rtype: Report
        """
        report = Report("correlation")
        flips = self.sign_flips(tol=tol)
        report.add_threshold(
            "printed_formulas",
            self.deviation,
            tol,
            detail="sign flips at %s" % ["t%d%d" % (row + 1, column + 1) for row, column in flips]
            if flips
            else "printed extraction agrees with reconstruction",
            warn=True,
            data={"sign_flips": flips},
        )
        return report


def correlation_from_dwf(table, ops):
    """
    Extract the correlation matrix from a two-qubit Wigner table.
    The primary path rebuilds the state from the table, the printed path is
    kept as a diagnostic.

    :param DwfTable table: A 4 x 4 Wigner table.
    :param PhasePointOperatorSet ops: The operators the table was computed with.
    :rtype: CorrelationExtraction
    """
    if table.dimension != 4:
        raise ValidationError("Correlations need a two-qubit table, got d=%d" % table.dimension)
    primary = correlation_direct(reconstruct(table, ops))
    return CorrelationExtraction(primary, printed_correlation(table))

"""
Unitary gates acting on states, and the qutrit phase-gate conjugation check.
"""
import itertools
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import as_square_matrix, dagger, is_unitary
from discrete_wigner.base.errors import ValidationError

_LOG = logging.getLogger(__name__)


def apply_unitary(rho, unitary):
    """
    >>> apply_unitary(np.diag([1.0, 0.0]), np.eye(2)).real.tolist()
    [[1.0, 0.0], [0.0, 0.0]]

    :param rho: A d x d density matrix.
    :param unitary: A d x d unitary matrix.
    :return: U rho U^dagger
    :rtype: numpy.ndarray
    :raise ValidationError: If `unitary` is not unitary or the dimensions differ.
    """
    rho = as_square_matrix(rho, name="density matrix")
    unitary = as_square_matrix(unitary, dimension=rho.shape[0], name="gate")
    if not is_unitary(unitary, tol=constants.TOL_UNIT):
        raise ValidationError("Gate is not unitary to %g" % constants.TOL_UNIT)
    return unitary.dot(rho).dot(dagger(unitary))


def is_conjugate(evolved, rho, tol=constants.TOL_OPERATOR):
    """
    :return: True if `evolved` is the entrywise complex conjugate of `rho`.
    :rtype: bool
    """
    evolved = as_square_matrix(evolved, name="density matrix")
    rho = as_square_matrix(rho, dimension=evolved.shape[0], name="density matrix")
    return bool(np.max(np.abs(evolved - np.conj(rho))) <= tol)


def phase_gate(dimension, exponents):
    """
    >>> np.round(phase_gate(3, (1, 2)), 3).diagonal().tolist()
    [(1+0j), (-0.5+0.866j), (-0.5-0.866j)]

    :param int dimension: The system dimension.
    :param exponents: The powers of ω = exp(2πi/d) on the diagonal after the leading 1.
    :return: diag(1, ω^e1, ω^e2, ...)
    :rtype: numpy.ndarray
    """
    exponents = tuple(exponents)
    if len(exponents) != dimension - 1:
        raise ValidationError(
            "A d=%d phase gate needs %d exponents, got %r" % (dimension, dimension - 1, exponents)
        )
    omega = np.exp(2j * np.pi / dimension)
    return np.diag([1.0 + 0j] + [omega ** exponent for exponent in exponents])


def candidate_phase_gates(dimension=3):
    """
    :return: Every diagonal phase gate diag(1, ω^a, ω^b, ...) keyed by its exponents.
    :rtype: dict
    """
    return {
        exponents: phase_gate(dimension, exponents)
        for exponents in itertools.product(range(dimension), repeat=dimension - 1)
    }


def explore_phase_gate_conjugation(rho, dimension=3):
    """
    Apply every candidate phase gate to `rho` and record which ones turn it
    into its complex conjugate. Nothing is asserted about the outcome.

    :param rho: A d x d density matrix.
    :param int dimension: The system dimension.
    :return: One record per gate, sorted by exponents.
    :rtype: list(dict)
    """
    records = []
    for exponents, gate in sorted(candidate_phase_gates(dimension).items()):
        evolved = apply_unitary(rho, gate)
        conjugate = is_conjugate(evolved, rho)
        records.append(
            {
                "exponents": list(exponents),
                "conjugates": conjugate,
                "deviation": float(np.max(np.abs(evolved - np.conj(rho)))),
            }
        )
        if conjugate:
            _LOG.debug("Phase gate %r conjugates the state", exponents)
    return records

"""
Coherence, entanglement and teleportation measures.
"""
import logging

import numpy as np

from discrete_wigner.base._utils import as_square_matrix
from discrete_wigner.measures.correlation import correlation_direct
from discrete_wigner.states.bloch import SIGMA_Y

_LOG = logging.getLogger(__name__)

_SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)

# Teleportation fidelity reachable with classical resources only.
CLASSICAL_FIDELITY = 2.0 / 3.0


def coherence_l1(rho):
    """
    Sum of the absolute values of the off-diagonal entries.

    >>> coherence_l1(np.full((2, 2), 0.5))
    1.0

    :param rho: A density matrix in the computational basis.
    :rtype: float
    """
    rho = as_square_matrix(rho, name="density matrix")
    return float(np.abs(rho).sum() - np.abs(np.diag(rho)).sum())


def spin_flip(rho):
    """
    (σy ⊗ σy) rho* (σy ⊗ σy)

    :param rho: A 4 x 4 density matrix.
    :rtype: numpy.ndarray
    """
    rho = as_square_matrix(rho, dimension=4, name="two-qubit density matrix")
    return _SPIN_FLIP.dot(np.conj(rho)).dot(_SPIN_FLIP)


def concurrence(rho):
    """
    Wootters concurrence max(0, l1 - l2 - l3 - l4), with l the square roots
    of the eigenvalues of rho rho~ in decreasing order.

    :param rho: A 4 x 4 density matrix.
    :rtype: float
    """
    rho = as_square_matrix(rho, dimension=4, name="two-qubit density matrix")
    values = np.real(np.linalg.eigvals(rho.dot(spin_flip(rho))))
    values[values < 1e-12] = 0.0
    roots = np.sort(np.sqrt(values))[::-1]
    return float(max(0.0, roots[0] - roots[1:].sum()))


def teleportation_fidelity(rho):
    """
    :param rho: A 4 x 4 density matrix.
    :return: N_F, the trace norm of the correlation matrix, and F = (1 + N_F / 3) / 2.
    :rtype: tuple(float, float)
    """
    norm = float(np.linalg.svd(correlation_direct(rho), compute_uv=False).sum())
    return norm, (1.0 + norm / 3.0) / 2.0


class MeasureRecord(object):
    """
    Measures of one state at one time. Unset measures are None.
    """

    FIELDS = (
        "t",
        "negativity",
        "min_w",
        "sum_negativity",
        "mana",
        "robustness",
        "coherence",
        "concurrence",
        "fidelity",
        "n_f",
    )

    def __init__(self, t, **values):
        self.t = t
        for field in self.FIELDS[1:]:
            setattr(self, field, values.pop(field, None))
        if values:
            raise TypeError("Unknown measure(s): %s" % ", ".join(sorted(values)))

    def __repr__(self):
        return "<MeasureRecord t=%r>" % self.t

    @property
    def beats_classical(self):
        """
        :return: True if the teleportation fidelity exceeds 2/3, None if unknown.
        :rtype: bool or None
        """
        return None if self.fidelity is None else self.fidelity > CLASSICAL_FIDELITY

    def to_dict(self):
        """
        :rtype: dict
        """
        return {field: getattr(self, field) for field in self.FIELDS}

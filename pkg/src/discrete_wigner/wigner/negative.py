"""
Negative quantum states: eigenvectors of phase-point operators with a
negative eigenvalue.

Rank 1 is the eigenvector of the most negative eigenvalue found over the
whole operator set, taken at the lexicographically first point that
attains it. Higher ranks walk the remaining negative eigenvalues of that
operator, then the higher negative eigenvalue levels found at other points.
"""
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import eigh_canonical, projector
from discrete_wigner.base.errors import NegativeStateError, ValidationError
from discrete_wigner.base.phase_space import PhasePoint
from discrete_wigner.wigner.net import NetAssignment, build_quantum_net, phase_point_operators

_LOG = logging.getLogger(__name__)

NET_TRIES = 200


class NegativeStateResult(object):
    """
    A pure state built from a negative eigenvector of a phase-point operator.
    """

    def __init__(self, rank, point, eigenvalue, vector, degenerate=False):
        """
        :param int rank: The 1-based rank k of NS_k.
        :param PhasePoint point: The point whose operator was diagonalized.
        :param float eigenvalue: The negative eigenvalue.
        :param numpy.ndarray vector: The normalized eigenvector.
        :param bool degenerate: True if the eigenvalue belongs to a degenerate level.
        """
        self.rank = rank
        self.point = PhasePoint(*point)
        self.eigenvalue = float(eigenvalue)
        self.vector = np.asarray(vector, dtype=complex)
        self.degenerate = bool(degenerate)

    def __repr__(self):
        return "<NegativeStateResult NS%d %r %.6f>" % (
            self.rank,
            tuple(self.point),
            self.eigenvalue,
        )

    @property
    def state(self):
        """
        :return: The density matrix |v><v|.
        :rtype: numpy.ndarray
        """
        return projector(self.vector)

    def to_dict(self):
        """
        :return: A json-compatible representation, complex values as [re, im] pairs.
        :rtype: dict
        """
        state = self.state
        return {
            "rank": self.rank,
            "point": list(self.point),
            "eigenvalue": self.eigenvalue,
            "degenerate": self.degenerate,
            "vector": [[float(value.real), float(value.imag)] for value in self.vector],
            "state": [
                [[float(value.real), float(value.imag)] for value in row] for row in state
            ],
        }


def _spectra(ops):
    """
    Diagonalize every operator in lexicographic point order.
    """
    return [(point, eigh_canonical(ops[point])) for point in ops.points]


def negative_candidates(ops, tol=constants.TOL_DEGENERATE):
    """
    List every available negative state in rank order.

    :param PhasePointOperatorSet ops: The phase-point operators.
    :param float tol: Gap below which two eigenvalues are the same level.
    :return: (point, eigenvalue, vector, degenerate) tuples, rank 1 first.
    :rtype: list(tuple)
    """
    spectra = _spectra(ops)
    lowest = min(values[0] for _, (values, _, _) in spectra)
    if lowest >= 0:
        return []

    chosen, (values, vectors, degenerate) = next(
        (point, spectrum) for point, spectrum in spectra if spectrum[0][0] <= lowest + tol
    )
    candidates = [
        (chosen, values[index], vectors[:, index], degenerate[index])
        for index in range(len(values))
        if values[index] < 0
    ]

    levels = [value for _, value, _, _ in candidates]
    for point, (values, vectors, degenerate) in spectra:
        for index, value in enumerate(values):
            if value >= 0:
                break
            if any(abs(value - level) < tol for level in levels):
                continue
            levels.append(value)
            candidates.append((point, value, vectors[:, index], degenerate[index]))

    # stable sort keeps the chosen operator's degenerate vectors in order
    candidates.sort(key=lambda candidate: candidate[1])
    _LOG.debug(
        "%d negative state(s) available, chosen point %r", len(candidates), tuple(chosen)
    )
    return candidates


def degenerate_ranks(candidates, tol=constants.TOL_DEGENERATE):
    """
    >>> degenerate_ranks([(None, -0.5, None, True), (None, -0.5, None, True)])
    [(1, 2)]

    :param candidates: As returned by `negative_candidates`.
    :param float tol: Gap below which two eigenvalues are the same level.
    :return: Consecutive 1-based ranks whose eigenvalues are not strictly increasing.
    :rtype: list(tuple(int, int))
    """
    return [
        (index + 1, index + 2)
        for index in range(len(candidates) - 1)
        if candidates[index + 1][1] - candidates[index][1] < tol
    ]


def search_non_degenerate_net(space, mubs, rng, tries=NET_TRIES):
    """
    Draw random nets until one has distinct negative eigenvalue levels.

    :param PhaseSpace space: The phase space.
    :param MubSet mubs: The bases.
    :param numpy.random.Generator rng: The random generator.
    :param int tries: Number of nets to draw.
    :return: The assignment and its candidates, None if every net was degenerate.
    :rtype: tuple(NetAssignment, list) or None
    """
    for index in range(tries):
        assignment = NetAssignment.random(space.dimension, rng)
        candidates = negative_candidates(
            phase_point_operators(build_quantum_net(space, mubs, assignment))
        )
        if candidates and not degenerate_ranks(candidates):
            _LOG.debug("Net %r has distinct negative levels, draw %d", assignment, index + 1)
            return assignment, candidates
    _LOG.debug("No net with distinct negative levels in %d draws", tries)
    return None


def negative_state(ops, rank=1):
    """
    Build the negative quantum state NS_rank.

    :param PhasePointOperatorSet ops: The phase-point operators.
    :param int rank: The 1-based rank k.
    :rtype: NegativeStateResult
    :raise ValidationError: If the rank is not a positive integer.
    :raise NegativeStateError: If fewer than `rank` negative states exist.
    """
    if isinstance(rank, bool) or not isinstance(rank, (int, np.integer)) or rank < 1:
        raise ValidationError("Negative state rank must be a positive integer, got %r" % (rank,))

    candidates = negative_candidates(ops)
    if rank > len(candidates):
        raise NegativeStateError(rank, len(candidates))
    point, eigenvalue, vector, degenerate = candidates[rank - 1]
    return NegativeStateResult(rank, point, eigenvalue, vector, degenerate=degenerate)

"""
Quantum nets and the phase-point operators they define.

A quantum net attaches a basis to every striation and a basis vector to every
line. The phase-point operator of a point is the sum of the projectors of the
d + 1 lines through it, minus the identity.
"""
import functools
import itertools
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import freeze, hermiticity_deviation
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.base.mubs import mub_set
from discrete_wigner.base.phase_space import PhasePoint, build_phase_space
from discrete_wigner.base.report import Report

_LOG = logging.getLogger(__name__)


def _is_permutation(values, size):
    return sorted(values) == list(range(size))


class NetAssignment(object):
    """
    The two one-to-one maps defining a quantum net.
    """

    def __init__(self, striation_to_basis, line_to_vector):
        """
        :param striation_to_basis: Basis index of every striation.
        :type striation_to_basis: tuple(int)
        :param line_to_vector: For every striation, the vector index of every line.
        :type line_to_vector: tuple(tuple(int))
        :raise ValidationError: If a map is not a bijection.
        """
        self.striation_to_basis = tuple(int(value) for value in striation_to_basis)
        self.line_to_vector = tuple(
            tuple(int(value) for value in row) for row in line_to_vector
        )

        count = len(self.striation_to_basis)
        if not _is_permutation(self.striation_to_basis, count):
            raise ValidationError(
                "Striation to basis map %r is not a bijection" % (self.striation_to_basis,)
            )
        if len(self.line_to_vector) != count:
            raise ValidationError(
                "Expected %d line maps, got %d" % (count, len(self.line_to_vector))
            )
        for index, row in enumerate(self.line_to_vector):
            if not _is_permutation(row, count - 1):
                raise ValidationError(
                    "Line to vector map %r of striation %d is not a bijection" % (row, index)
                )

    def __repr__(self):
        return "<NetAssignment %r %r>" % (self.striation_to_basis, self.line_to_vector)

    def __eq__(self, other):
        return (
            isinstance(other, NetAssignment)
            and self.striation_to_basis == other.striation_to_basis
            and self.line_to_vector == other.line_to_vector
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.striation_to_basis, self.line_to_vector))

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return len(self.striation_to_basis) - 1

    @property
    def is_identity(self):
        """
        :return: True if striation i uses basis i and line j uses vector j.
        :rtype: bool
        """
        return self == self.identity(self.dimension)

    @classmethod
    def identity(cls, dimension):
        """
        >>> NetAssignment.identity(2)
        <NetAssignment (0, 1, 2) ((0, 1), (0, 1), (0, 1))>

        :param int dimension: The phase-space dimension.
        :return: The default assignment.
        :rtype: NetAssignment
        """
        return cls(
            range(dimension + 1),
            [range(dimension) for _ in range(dimension + 1)],
        )

    @classmethod
    def random(cls, dimension, rng):
        """
        :param int dimension: The phase-space dimension.
        :param numpy.random.Generator rng: The random generator.
        :return: An assignment drawn uniformly over both maps.
        :rtype: NetAssignment
        """
        return cls(
            rng.permutation(dimension + 1),
            [rng.permutation(dimension) for _ in range(dimension + 1)],
        )

    def to_dict(self):
        """
        :return: A json-compatible representation.
        :rtype: dict
        """
        return {
            "striation_to_basis": list(self.striation_to_basis),
            "line_to_vector": [list(row) for row in self.line_to_vector],
        }

    @classmethod
    def from_dict(cls, data):
        """
        :param dict data: A dict as returned by `to_dict`.
        :rtype: NetAssignment
        """
        return cls(data["striation_to_basis"], data["line_to_vector"])


class QuantumNet(object):
    """
    A phase space whose lines are attached to basis vectors.
    """

    def __init__(self, space, mubs, assignment):
        self.space = space
        self.mubs = mubs
        self.assignment = assignment

    def __repr__(self):
        return "<QuantumNet d=%d %s>" % (
            self.dimension,
            "default" if self.assignment.is_identity else "custom",
        )

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self.space.dimension

    def vector(self, striation_index, line_index):
        """
        :return: The basis vector attached to a line.
        :rtype: numpy.ndarray
        """
        basis = self.mubs[self.assignment.striation_to_basis[striation_index]]
        return basis[self.assignment.line_to_vector[striation_index][line_index]]

    def projector(self, striation_index, line_index):
        """
        :return: The projector attached to a line.
        :rtype: numpy.ndarray
        """
        vector = self.vector(striation_index, line_index)
        return np.outer(vector, np.conj(vector))

    def iter_lines(self):
        """
        Yield every line of the net with its position and projector.

        :rtype: generator(tuple(int, int, Line, numpy.ndarray))
        """
        for striation in self.space.striations:
            for line_index, line in enumerate(striation):
                projector = self.projector(striation.index, line_index)
                yield striation.index, line_index, line, projector


def build_quantum_net(space, mubs, assignment=None):
    """
    :param PhaseSpace space: The phase space.
    :param MubSet mubs: One basis per striation.
    :param NetAssignment assignment: The maps to use, the identity if omitted.
    :rtype: QuantumNet
    :raise ValidationError: If dimensions do not match.
    """
    dimension = space.dimension
    if mubs.dimension != dimension or len(mubs) != dimension + 1:
        raise ValidationError(
            "Cannot attach %d bases of dimension %d to a %dx%d phase space"
            % (len(mubs), mubs.dimension, dimension, dimension)
        )
    assignment = assignment or NetAssignment.identity(dimension)
    if assignment.dimension != dimension:
        raise ValidationError(
            "Assignment of dimension %d used on a %dx%d phase space"
            % (assignment.dimension, dimension, dimension)
        )
    return QuantumNet(space, mubs, assignment)


class PhasePointOperatorSet(object):
    """
    The d x d grid of phase-point operators of a quantum net.
    """

    def __init__(self, operators):
        """
        :param operators: A (d, d, d, d) array, indexed by q, p then matrix row and column.
        :type operators: numpy.ndarray
        """
        operators = np.asarray(operators, dtype=complex)
        if operators.ndim != 4 or len(set(operators.shape)) != 1:
            raise ValidationError(
                "Expected a (d, d, d, d) operator grid, got shape %r" % (operators.shape,)
            )
        self._operators = freeze(operators)

    def __repr__(self):
        return "<PhasePointOperatorSet d=%d>" % self.dimension

    def __getitem__(self, point):
        q, p = point
        return self._operators[q, p]

    def __len__(self):
        return self.dimension ** 2

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self._operators.shape[0]

    @property
    def points(self):
        """
        :return: Every point in lexicographic order.
        :rtype: list(PhasePoint)
        """
        return [PhasePoint(q, p) for q, p in itertools.product(range(self.dimension), repeat=2)]

    def as_grid(self):
        """
        :return: The (d, d, d, d) operator grid.
        :rtype: numpy.ndarray
        """
        return self._operators

    def as_stack(self):
        """
        :return: The operators as a (d², d, d) stack in lexicographic point order.
        :rtype: numpy.ndarray
        """
        dimension = self.dimension
        return self._operators.reshape(dimension ** 2, dimension, dimension)

    def check_invariants(self, net=None):
        """
        Check hermiticity, unit trace, orthogonality and, if a net is
        given, that the operators on each line sum to its projector.

        :param QuantumNet net: The net the operators were built from.
        :rtype: Report
        """
        dimension = self.dimension
        stack = self.as_stack()
        report = Report("operators.d%d" % dimension)

        report.add_threshold(
            "hermitian",
            max(hermiticity_deviation(operator) for operator in stack),
            constants.TOL_UNIT,
        )
        traces = np.trace(stack, axis1=1, axis2=2)
        report.add_threshold("trace", float(np.max(np.abs(traces - 1.0))), constants.TOL_UNIT)

        gram = np.einsum("aij,bji->ab", stack, stack)
        orthogonality = float(np.max(np.abs(gram - dimension * np.eye(dimension ** 2))))
        report.add_threshold(
            "orthogonal",
            orthogonality,
            constants.TOL_OPERATOR,
            detail="Tr(A_a A_b) = %d δ_ab" % dimension,
        )

        if net is not None:
            worst = 0.0
            for _, _, line, projector in net.iter_lines():
                total = sum(self[point] for point in line.points)
                worst = max(worst, float(np.max(np.abs(total - projector))))
            report.add_threshold(
                "line_sums",
                worst,
                constants.TOL_UNIT,
                detail="operators on a line sum to its projector",
            )
        return report


def phase_point_operators(net):
    """
    Build the phase-point operators of a quantum net.

    :param QuantumNet net: The quantum net.
    :rtype: PhasePointOperatorSet
    """
    dimension = net.dimension
    identity = np.eye(dimension, dtype=complex)
    operators = np.zeros((dimension,) * 4, dtype=complex)
    for point in net.space.points:
        total = -identity
        for striation_index, line_index in net.space.lines_through(point):
            total = total + net.projector(striation_index, line_index)
        operators[point.q, point.p] = total
    return PhasePointOperatorSet(operators)


@functools.lru_cache(maxsize=None)
def default_net(dimension):
    """
    :param int dimension: One of 2, 3 or 4.
    :return: The identity net over the tabulated bases.
    :rtype: QuantumNet
    """
    return build_quantum_net(build_phase_space(dimension), mub_set(dimension))


@functools.lru_cache(maxsize=None)
def default_operators(dimension):
    """
    >>> default_operators(2)[0, 0].real.round(3).tolist()
    [[0.0, 0.5], [0.5, 1.0]]

    :param int dimension: One of 2, 3 or 4.
    :return: The phase-point operators of the default net.
    :rtype: PhasePointOperatorSet
    """
    return phase_point_operators(default_net(dimension))

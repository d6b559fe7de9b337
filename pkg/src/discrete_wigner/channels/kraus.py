"""
Time-dependent Kraus sets of the noise channels.

Channels are exact in t: every time point builds a fresh Kraus set from the
closed-form kernels, nothing is integrated or composed.
"""
import itertools
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import as_square_matrix, dagger
from discrete_wigner.base.constants import ChannelFamily, System
from discrete_wigner.base.errors import KernelViolationError, ValidationError
from discrete_wigner.channels.kernels import AdParams, RtnParams, ad_decay, rtn_kernel

_LOG = logging.getLogger(__name__)

# Spin-1 operators.
SPIN_X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / np.sqrt(2.0)
SPIN_Y = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / np.sqrt(2.0)
SPIN_Z = np.diag([1, 0, -1]).astype(complex)
# (Sx Sx + Sy Sy - Sz Sz) / 2, evaluates to diag(0, 1, 0).
SPIN_S = (SPIN_X.dot(SPIN_X) + SPIN_Y.dot(SPIN_Y) - SPIN_Z.dot(SPIN_Z)) / 2.0

_SIGMA_Z = np.diag([1, -1]).astype(complex)


class KrausSet(object):
    """
    Kraus operators of a channel at a given time.
    """

    def __init__(self, operators, t=None):
        """
        :param operators: The d x d Kraus operators.
        :type operators: list(numpy.ndarray)
        :param float t: The time the set was built for, if any.
        """
        operators = [np.asarray(operator, dtype=complex) for operator in operators]
        if not operators:
            raise ValidationError("A Kraus set needs at least one operator")
        shapes = set(operator.shape for operator in operators)
        if len(shapes) != 1:
            raise ValidationError("Kraus operators of mixed shapes %r" % sorted(shapes))
        self.operators = tuple(operators)
        self.t = t

    def __repr__(self):
        return "<KrausSet d=%d n=%d t=%r>" % (self.dimension, len(self.operators), self.t)

    def __len__(self):
        return len(self.operators)

    def __iter__(self):
        return iter(self.operators)

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self.operators[0].shape[0]

    def completeness(self):
        """
        :return: The largest entry of |Σ K^dagger K - I|.
        :rtype: float
        """
        total = sum(dagger(operator).dot(operator) for operator in self.operators)
        return float(np.max(np.abs(total - np.eye(self.dimension))))

    def check(self, tol=constants.TOL_OPERATOR):
        """
        :param float tol: Tolerance on the completeness relation.
        :return: The set itself.
        :rtype: KrausSet
        :raise KernelViolationError: If the set is not trace preserving.
        """
        residual = self.completeness()
        if residual > tol:
            raise KernelViolationError(
                "Kraus set is not trace preserving (residual %.3g)" % residual, t=self.t
            )
        return self


def identity_kraus(dimension, t=None):
    """
    :param int dimension: The system dimension.
    :param float t: The time stamp to attach.
    :return: The identity channel.
    :rtype: KrausSet
    """
    return KrausSet([np.eye(dimension, dtype=complex)], t=t)


def kraus_rtn(dimension, t, params):
    """
    Kraus set of random telegraph noise on a qubit or a qutrit.

    :param int dimension: 2 or 3.
    :param float t: A non-negative time.
    :param RtnParams params: The noise parameters.
    :rtype: KrausSet
    :raise ValidationError: If the dimension is not 2 or 3.
    :raise KernelViolationError: If the kernel leaves [-1, 1].
    """
    kernel = rtn_kernel(t, params)
    keep = np.sqrt((1.0 + kernel) / 2.0)
    flip = np.sqrt((1.0 - kernel) / 2.0)
    if dimension == 2:
        operators = [keep * np.eye(2), flip * _SIGMA_Z]
    elif dimension == 3:
        operators = [keep * np.eye(3), flip * SPIN_Z, flip * SPIN_S]
    else:
        raise ValidationError("RTN Kraus operators exist for d=2 and d=3, got %r" % (dimension,))
    return KrausSet(operators, t=t).check()


def kraus_ad(dimension, t, params):
    """
    Kraus set of amplitude damping on a qubit or a qutrit.

    :param int dimension: 2 or 3.
    :param float t: A non-negative time.
    :param AdParams params: The noise parameters.
    :rtype: KrausSet
    :raise ValidationError: If the dimension is not 2 or 3.
    :raise KernelViolationError: If the decay leaves [0, 1].
    """
    decay = ad_decay(t, params)
    kept = np.sqrt(1.0 - decay)
    lost = np.sqrt(decay)
    if dimension == 2:
        first = np.diag([1.0, kept]).astype(complex)
        second = np.zeros((2, 2), dtype=complex)
        second[0, 1] = lost
        operators = [first, second]
    elif dimension == 3:
        first = np.diag([1.0, kept, kept]).astype(complex)
        second = np.zeros((3, 3), dtype=complex)
        second[0, 1] = lost
        third = np.zeros((3, 3), dtype=complex)
        third[0, 2] = lost
        operators = [first, second, third]
    else:
        raise ValidationError("AD Kraus operators exist for d=2 and d=3, got %r" % (dimension,))
    return KrausSet(operators, t=t).check()


def lift_two_qubit(kraus):
    """
    Apply the same qubit channel locally on both qubits.

    :param KrausSet kraus: A qubit Kraus set.
    :return: Every K_i ⊗ K_j.
    :rtype: KrausSet
    :raise ValidationError: If the set does not act on a qubit.
    """
    if kraus.dimension != 2:
        raise ValidationError("Only qubit Kraus sets can be lifted, got d=%d" % kraus.dimension)
    operators = [np.kron(first, second) for first, second in itertools.product(kraus, repeat=2)]
    return KrausSet(operators, t=kraus.t).check()


def apply_channel(rho, kraus):
    """
    >>> apply_channel(np.eye(2) / 2, identity_kraus(2)).real.tolist()
    [[0.5, 0.0], [0.0, 0.5]]

    :param rho: A d x d density matrix.
    :param KrausSet kraus: The channel.
    :return: Σ K rho K^dagger.
    :rtype: numpy.ndarray
    :raise ValidationError: If the dimensions do not match.
    """
    rho = as_square_matrix(rho, dimension=kraus.dimension, name="density matrix")
    return sum(operator.dot(rho).dot(dagger(operator)) for operator in kraus)


def make_params(family, gamma=None, b=None, g=None):
    """
    :param ChannelFamily family: The noise family.
    :return: The parameters of that family, None for the identity channel.
    :rtype: RtnParams or AdParams or None
    :raise ValidationError: If a required parameter is missing.
    """
    family = ChannelFamily(family)
    if family is ChannelFamily.rtn:
        if gamma is None or b is None:
            raise ValidationError("RTN needs both 'gamma' and 'b'")
        return RtnParams(gamma, b)
    if family is ChannelFamily.ad:
        if gamma is None or g is None:
            raise ValidationError("AD needs both 'gamma' and 'g'")
        return AdParams(gamma, g)
    return None


def channel_kraus(system, family, t, params):
    """
    Kraus set of a noise family acting on a system at time t. Two qubits
    see the qubit channel applied locally on each side.

    :param System system: The physical system.
    :param ChannelFamily family: The noise family.
    :param float t: A non-negative time.
    :param params: The family parameters, see `make_params`.
    :rtype: KrausSet
    """
    system = System(system)
    family = ChannelFamily(family)
    if family is ChannelFamily.none:
        return identity_kraus(system.dimension, t=t)

    build = kraus_rtn if family is ChannelFamily.rtn else kraus_ad
    if system is System.twoqubit:
        return lift_two_qubit(build(2, t, params))
    return build(system.dimension, t, params)

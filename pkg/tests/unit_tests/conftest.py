"""
Fixtures common to all tests
"""
# pylint: disable=redefined-outer-name
import numpy as np
import pytest

from discrete_wigner.base.mubs import mub_set
from discrete_wigner.base.phase_space import build_phase_space
from discrete_wigner.wigner.net import build_quantum_net, phase_point_operators

from .. import constants


@pytest.fixture(params=[2, 3, 4])
def dimension(request):
    """
    Parametrized fixture that run the test for every supported dimension.
    """
    return request.param


@pytest.fixture
def space(dimension):
    """
    :return: The phase space of the current dimension.
    :rtype: PhaseSpace
    """
    return build_phase_space(dimension)


@pytest.fixture
def mubs(dimension):
    """
    :return: The tabulated bases of the current dimension.
    :rtype: MubSet
    """
    return mub_set(dimension)


@pytest.fixture
def net(space, mubs):
    """
    :return: The default quantum net of the current dimension.
    :rtype: QuantumNet
    """
    return build_quantum_net(space, mubs)


@pytest.fixture
def ops(net):
    """
    :return: The phase-point operators of the default net.
    :rtype: PhasePointOperatorSet
    """
    return phase_point_operators(net)


@pytest.fixture
def rng():
    """
    :return: A seeded random generator, so failures are reproducible.
    :rtype: numpy.random.Generator
    """
    return np.random.default_rng(constants.SEED)

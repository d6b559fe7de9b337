"""
Memory kernels of the random telegraph noise (RTN) and amplitude damping (AD)
channels, and their memory regime.

Both kernels switch between an oscillating (non-Markovian) and a
monotone (Markovian) closed form. The hyperbolic branches are written with
decaying exponentials only, so they stay finite for large t.
"""
import logging

import numpy as np
from scipy import optimize

from discrete_wigner.base import constants
from discrete_wigner.base.constants import Regime
from discrete_wigner.base.errors import KernelViolationError, ValidationError

_LOG = logging.getLogger(__name__)

# Relative distance to the regime boundary treated as the boundary itself.
_BOUNDARY_TOL = 1e-12


def _positive(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError("%s must be a number, got %r" % (name, value))
    if not value > 0 or not np.isfinite(value):
        raise ValidationError("%s must be a positive number, got %r" % (name, value))
    return value


class RtnParams(object):
    """
    Fluctuation rate `gamma` and coupling strength `b` of telegraph noise.
    """

    def __init__(self, gamma, b):
        self.gamma = _positive("gamma", gamma)
        self.b = _positive("b", b)

    def __repr__(self):
        return "<RtnParams gamma=%r b=%r>" % (self.gamma, self.b)

    def __eq__(self, other):
        return isinstance(other, RtnParams) and (self.gamma, self.b) == (other.gamma, other.b)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.gamma, self.b))

    @property
    def ratio(self):
        """
        :return: (2 b / gamma)², above 1 in the non-Markovian regime.
        :rtype: float
        """
        return (2.0 * self.b / self.gamma) ** 2

    def to_dict(self):
        """
        :rtype: dict
        """
        return {"gamma": self.gamma, "b": self.b}


class AdParams(object):
    """
    Rates `gamma` and `g` of amplitude damping.
    """

    def __init__(self, gamma, g):
        self.gamma = _positive("gamma", gamma)
        self.g = _positive("g", g)

    def __repr__(self):
        return "<AdParams gamma=%r g=%r>" % (self.gamma, self.g)

    def __eq__(self, other):
        return isinstance(other, AdParams) and (self.gamma, self.g) == (other.gamma, other.g)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.gamma, self.g))

    @property
    def l_squared(self):
        """
        :return: l² = g² - 2 gamma g, negative in the non-Markovian regime.
        :rtype: float
        """
        return self.g ** 2 - 2.0 * self.gamma * self.g

    def to_dict(self):
        """
        :rtype: dict
        """
        return {"gamma": self.gamma, "g": self.g}


def _check_time(t):
    t = float(t)
    if t < 0 or not np.isfinite(t):
        raise ValidationError("Time must be finite and non-negative, got %r" % t)
    return t


def _damped_cosh(rate, t, z):
    """
    exp(-rate t) cosh(z rate t), for 0 <= z < 1.
    """
    return 0.5 * (np.exp(-rate * t * (1.0 - z)) + np.exp(-rate * t * (1.0 + z)))


def _damped_sinh_over(rate, t, z):
    """
    exp(-rate t) sinh(z rate t) / z, for 0 <= z < 1, continuous at z = 0.
    """
    u = z * rate * t
    if u < 1.0:
        return np.exp(-rate * t) * rate * t * (np.sinh(u) / u if u else 1.0)
    return (np.exp(-rate * t * (1.0 - z)) - np.exp(-rate * t * (1.0 + z))) / (2.0 * z)


def _oscillating(rate, t, u):
    """
    exp(-rate t) (cos u + rate t sin(u) / u), continuous at u = 0.
    """
    return np.exp(-rate * t) * (np.cos(u) + rate * t * np.sinc(u / np.pi))


def _classify(distance):
    if abs(distance) <= _BOUNDARY_TOL:
        return Regime.boundary
    return Regime.non_markovian if distance > 0 else Regime.markovian


def classify_rtn(params):
    """
    >>> classify_rtn(RtnParams(0.001, 0.05)).value
    'NonMarkovian'

    :param RtnParams params: The noise parameters.
    :rtype: Regime
    """
    return _classify(params.ratio - 1.0)


def classify_ad(params):
    """
    >>> classify_ad(AdParams(0.01, 1.0)).value
    'Markovian'

    :param AdParams params: The noise parameters.
    :rtype: Regime
    """
    return _classify((2.0 * params.gamma - params.g) / params.g)


def rtn_kernel(t, params):
    """
    Memory kernel Λ(t) of telegraph noise.

    >>> rtn_kernel(0.0, RtnParams(1.0, 0.07))
    1.0

    :param float t: A non-negative time.
    :param RtnParams params: The noise parameters.
    :rtype: float
    :raise ValidationError: If t is negative.
    :raise KernelViolationError: If |Λ| exceeds 1.
    """
    t = _check_time(t)
    rate = params.gamma
    regime = classify_rtn(params)
    if regime is Regime.boundary:
        value = np.exp(-rate * t) * (1.0 + rate * t)
    elif regime is Regime.non_markovian:
        value = _oscillating(rate, t, np.sqrt(params.ratio - 1.0) * rate * t)
    else:
        z = np.sqrt(1.0 - params.ratio)
        value = _damped_cosh(rate, t, z) + _damped_sinh_over(rate, t, z)

    value = float(value)
    if abs(value) > 1.0 + constants.TOL_KERNEL:
        raise KernelViolationError("RTN kernel %r outside [-1, 1] for %r" % (value, params), t=t)
    return float(np.clip(value, -1.0, 1.0))


def _ad_amplitude(t, params):
    """
    The amplitude G(t) with λ(t) = 1 - G(t)².
    """
    rate = params.g / 2.0
    regime = classify_ad(params)
    if regime is Regime.boundary:
        return np.exp(-rate * t) * (1.0 + rate * t)
    if regime is Regime.non_markovian:
        return _oscillating(rate, t, np.sqrt(-params.l_squared) * t / 2.0)
    z = np.sqrt(params.l_squared) / params.g
    return _damped_cosh(rate, t, z) + _damped_sinh_over(rate, t, z)


def ad_decay(t, params):
    """
    Decay function λ(t) of amplitude damping.

    >>> ad_decay(0.0, AdParams(50.0, 0.01))
    0.0

    :param float t: A non-negative time.
    :param AdParams params: The noise parameters.
    :rtype: float
    :raise ValidationError: If t is negative.
    :raise KernelViolationError: If λ leaves [0, 1] by more than the tolerance.
    """
    t = _check_time(t)
    value = float(1.0 - _ad_amplitude(t, params) ** 2)
    if value < -constants.TOL_KERNEL or value > 1.0 + constants.TOL_KERNEL:
        raise KernelViolationError("AD decay %r outside [0, 1] for %r" % (value, params), t=t)
    return float(np.clip(value, 0.0, 1.0))


def first_crossing(function, level, t_stop, samples=20000):
    """
    Find the first time a kernel reaches a level, by grid bracketing then
    Brent's method.

    :param callable function: A function of time.
    :param float level: The level to reach.
    :param float t_stop: End of the search interval, starting at 0.
    :param int samples: Number of grid points used to bracket the root.
    :return: The crossing time, None if the level is never reached.
    :rtype: float or None
    """
    grid = np.linspace(0.0, t_stop, samples)
    values = np.array([function(t) - level for t in grid])
    for index in range(1, len(grid)):
        if values[index] == 0.0:
            return float(grid[index])
        if values[index - 1] * values[index] < 0:
            root = optimize.brentq(
                lambda t: function(t) - level, grid[index - 1], grid[index], xtol=1e-12
            )
            return float(root)
    return None


def ad_amplitude_zero(t_stop, params, samples=20000):
    """
    First time the AD amplitude G(t) vanishes, i.e. λ(t) = 1.

    :param float t_stop: End of the search interval.
    :param AdParams params: The noise parameters.
    :rtype: float or None
    """
    return first_crossing(lambda t: _ad_amplitude(t, params), 0.0, t_stop, samples=samples)

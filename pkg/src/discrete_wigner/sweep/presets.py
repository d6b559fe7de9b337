"""
Figure presets: named bundles of sweep configs.

Captions give the system, state and channel parameters but not the time
axis. Ranges below cover at least three oscillation periods for memory-bearing
channels and at least five decay constants for memoryless ones.

=================  ===================  ==============
Channel            Parameters           Time range
=================  ===================  ==============
RTN non-Markovian  gamma=0.001, b=0.05  [0, 250]
RTN Markovian      gamma=1, b=0.07      [0, 500]
AD non-Markovian   gamma=50, g=0.01     [0, 40]
AD Markovian       gamma=0.01, g=1      [0, 1000]
AD non-Markovian   gamma=1, g=0.005     [0, 400]
=================  ===================  ==============
"""
import collections
import logging

from discrete_wigner.base.constants import ChannelFamily, System
from discrete_wigner.base.errors import NegativeStateError, ValidationError
from discrete_wigner.states.presets import NEGATIVE_STATE_PRESETS
from discrete_wigner.sweep.config import SweepConfig
from discrete_wigner.wigner.negative import negative_state
from discrete_wigner.wigner.net import default_operators

_LOG = logging.getLogger(__name__)

_Channel = collections.namedtuple("_Channel", ("family", "gamma", "b", "g", "t_stop"))

RTN_NON_MARKOVIAN = _Channel(ChannelFamily.rtn, 0.001, 0.05, None, 250.0)
RTN_MARKOVIAN = _Channel(ChannelFamily.rtn, 1.0, 0.07, None, 500.0)
AD_NON_MARKOVIAN = _Channel(ChannelFamily.ad, 50.0, None, 0.01, 40.0)
AD_MARKOVIAN = _Channel(ChannelFamily.ad, 0.01, None, 1.0, 1000.0)
AD_SLOW = _Channel(ChannelFamily.ad, 1.0, None, 0.005, 400.0)

# (system, state, label) of the two-qubit series compared in the measure figures.
_TWO_QUBIT_STATES = (
    (System.twoqubit, "ns1", "ns1"),
    (System.twoqubit, "ns2", "ns2"),
    (System.twoqubit, "ns3", "ns3"),
    (System.twoqubit, "phi+", "bell"),
)
_ALL_SYSTEMS = (
    (System.qubit, "ns1", "qubit"),
    (System.qutrit, "ns1", "qutrit"),
    (System.twoqubit, "ns1", "twoqubit"),
)

# name: (description, [(system, state, label, channel)], measures)
_FIGURES = {
    "fig2": (
        "Qubit caption state under non-Markovian RTN",
        [(System.qubit, "qubit_ns1", None, RTN_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig3": (
        "Qubit caption state under Markovian RTN",
        [(System.qubit, "qubit_ns1", None, RTN_MARKOVIAN)],
        ("dwf",),
    ),
    "fig4": (
        "Qubit caption state under non-Markovian AD",
        [(System.qubit, "qubit_ns1", None, AD_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig5": (
        "Qubit caption state under Markovian AD",
        [(System.qubit, "qubit_ns1", None, AD_MARKOVIAN)],
        ("dwf",),
    ),
    "fig6": (
        "Qutrit caption state under non-Markovian RTN",
        [(System.qutrit, "qutrit_ns1", None, RTN_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig7": (
        "Qutrit caption state under non-Markovian AD",
        [(System.qutrit, "qutrit_ns1", None, AD_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig8": (
        "Two-qubit caption state under non-Markovian RTN",
        [(System.twoqubit, "twoqubit_ns1", None, RTN_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig9": (
        "Two-qubit caption state under non-Markovian AD",
        [(System.twoqubit, "twoqubit_ns1", None, AD_NON_MARKOVIAN)],
        ("dwf",),
    ),
    "fig10": (
        "Qutrit mana of the first two negative states under AD and RTN",
        [
            (System.qutrit, "ns1", "ns1_ad", AD_NON_MARKOVIAN),
            (System.qutrit, "ns2", "ns2_ad", AD_NON_MARKOVIAN),
            (System.qutrit, "ns1", "ns1_rtn", RTN_NON_MARKOVIAN),
            (System.qutrit, "ns2", "ns2_rtn", RTN_NON_MARKOVIAN),
        ],
        ("mana",),
    ),
    "fig11": (
        "Negativity of the three systems under non-Markovian RTN",
        [system + (RTN_NON_MARKOVIAN,) for system in _ALL_SYSTEMS],
        ("negativity",),
    ),
    "fig12": (
        "Two-qubit coherence under non-Markovian RTN",
        [state + (RTN_NON_MARKOVIAN,) for state in _TWO_QUBIT_STATES],
        ("coherence",),
    ),
    "fig13": (
        "Two-qubit coherence under non-Markovian AD",
        [state + (AD_SLOW,) for state in _TWO_QUBIT_STATES],
        ("coherence",),
    ),
    "fig14": (
        "Two-qubit concurrence under non-Markovian RTN",
        [state + (RTN_NON_MARKOVIAN,) for state in _TWO_QUBIT_STATES],
        ("concurrence",),
    ),
    "fig15": (
        "Two-qubit teleportation fidelity under non-Markovian RTN",
        [state + (RTN_NON_MARKOVIAN,) for state in _TWO_QUBIT_STATES],
        ("fidelity",),
    ),
    "fig16": (
        "Two-qubit teleportation fidelity under non-Markovian AD",
        [state + (AD_SLOW,) for state in _TWO_QUBIT_STATES],
        ("fidelity",),
    ),
    "negativity_ad": (
        "Negativity of the three systems under non-Markovian AD",
        [system + (AD_NON_MARKOVIAN,) for system in _ALL_SYSTEMS],
        ("negativity",),
    ),
    "concurrence_ad": (
        "Two-qubit concurrence under non-Markovian AD",
        [state + (AD_SLOW,) for state in _TWO_QUBIT_STATES],
        ("concurrence",),
    ),
}

FIGURES = tuple(sorted(_FIGURES, key=lambda name: (not name.startswith("fig"), len(name), name)))


class FigurePreset(object):
    """
    A named bundle of sweep configs sharing their measures.
    """

    def __init__(self, name, description, series, skipped=()):
        """
        :param str name: The preset name.
        :param str description: What the figure shows.
        :param series: The configs to run.
        :type series: list(SweepConfig)
        :param skipped: Labels of series dropped because their state does not exist.
        """
        self.name = name
        self.description = description
        self.series = list(series)
        self.skipped = list(skipped)

    def __repr__(self):
        return "<FigurePreset %s %d series>" % (self.name, len(self.series))

    def __len__(self):
        return len(self.series)

    def __iter__(self):
        return iter(self.series)

    def to_dict(self):
        """
        :rtype: dict
        """
        return {
            "name": self.name,
            "description": self.description,
            "series": [config.to_dict() for config in self.series],
            "skipped": self.skipped,
        }


def _available(system, state):
    rank = NEGATIVE_STATE_PRESETS.get(state)
    if rank is None:
        return True
    try:
        negative_state(default_operators(system.dimension), rank)
    except NegativeStateError as error:
        _LOG.debug("%s", error)
        return False
    return True


def figure_preset(name, steps=None):
    """
    >>> figure_preset("fig4").series[0]
    <SweepConfig qubit qubit_ns1 ad t=[0, 40] steps=500>

    :param str name: fig2 .. fig16, negativity_ad or concurrence_ad.
    :param int steps: Override the number of grid points.
    :rtype: FigurePreset
    :raise ValidationError: If the figure is unknown.
    """
    try:
        description, entries, measures = _FIGURES[name]
    except KeyError:
        raise ValidationError("Unknown figure %r, expected one of %s" % (name, ", ".join(FIGURES)))

    series = []
    skipped = []
    for system, state, label, channel in entries:
        if not _available(system, state):
            _LOG.warning(
                "Skipping series %r of %s: no %s negative state for a %s",
                label,
                name,
                state,
                system.value,
            )
            skipped.append(label)
            continue
        data = {
            "system": system.value,
            "state": state,
            "channel": channel.family.value,
            "gamma": channel.gamma,
            "b": channel.b,
            "g": channel.g,
            "t_start": 0.0,
            "t_stop": channel.t_stop,
            "measures": list(measures),
            "label": label,
        }
        if steps is not None:
            data["steps"] = steps
        series.append(SweepConfig.from_dict({k: v for k, v in data.items() if v is not None}))
    return FigurePreset(name, description, series, skipped)

"""
Sweep configuration: what state to evolve, under which channel, on which
time grid, and what to measure.

A config is a flat JSON object. Every key has a short alias:

>>> cfg = parse_config('{"system": "qubit", "state": "qubit_ns1", "channel": "rtn", '
...                    '"gamma": 0.001, "b": 0.05, "t": [0, 250]}')
>>> cfg
<SweepConfig qubit qubit_ns1 rtn t=[0, 250] steps=500>
"""
import json
import logging

import numpy as np
import six

from discrete_wigner.base import constants
from discrete_wigner.base._utils import handle_arguments
from discrete_wigner.base.constants import ChannelFamily, System
from discrete_wigner.base.errors import ConfigError, ValidationError
from discrete_wigner.channels.kraus import make_params
from discrete_wigner.states.presets import state_system

_LOG = logging.getLogger(__name__)

FORMATS = ("csv", "json")
DEFAULT_STEPS = 500
DEFAULT_MEASURES = ("dwf",)

_BLOCH_SIZES = {System.qubit: 3, System.qutrit: 8, System.twoqubit: 15}


def _check_text(value, key):
    if not isinstance(value, six.string_types):
        raise ConfigError("Expected a string, got %r" % (value,), key=key)
    return six.text_type(value)


def _check_number(value, key):
    if isinstance(value, bool) or not isinstance(value, (six.integer_types, float)):
        raise ConfigError("Expected a number, got %r" % (value,), key=key)
    return float(value)


def _check_list(value, key):
    if isinstance(value, six.string_types):
        return [value]
    if not isinstance(value, (list, tuple)):
        raise ConfigError("Expected a list, got %r" % (value,), key=key)
    return list(value)


def _check_enum(enum_type, value, key):
    value = _check_text(value, key)
    try:
        return enum_type(value)
    except ValueError:
        raise ConfigError(
            "Expected one of %s, got %r" % (", ".join(item.value for item in enum_type), value),
            key=key,
        )


class SweepConfig(object):
    """
    Validated sweep configuration.
    """

    def __init__(  # pylint: disable=too-many-arguments,too-many-locals
        self,
        system,
        state,
        t_start,
        t_stop,
        channel=ChannelFamily.none,
        gamma=None,
        b=None,
        g=None,
        bloch=None,
        steps=DEFAULT_STEPS,
        measures=DEFAULT_MEASURES,
        output=None,
        format="csv",  # pylint: disable=redefined-builtin
        workers=1,
        label=None,
    ):
        """
        :param System system: The physical system.
        :param str state: The initial state spec, see `resolve_state`.
        :param float t_start: The first time of the grid.
        :param float t_stop: The last time of the grid.
        :param ChannelFamily channel: The noise family.
        :param float gamma: The noise rate.
        :param float b: The RTN amplitude.
        :param float g: The AD coupling.
        :param bloch: The raw Bloch parameters when `state` is ``bloch``.
        :param int steps: The number of grid points, at least 2.
        :param measures: The measures to compute, see `constants.MEASURES`.
        :param str output: The default output path.
        :param str format: ``csv`` or ``json``.
        :param int workers: The number of threads used to compute rows.
        :param str label: The series name used in multi-series outputs.
        :raise ConfigError: If a value breaks the schema.
        """
        self.system = _check_enum(System, getattr(system, "value", system), "system")
        self.state = _check_text(state, "state")
        self.channel = _check_enum(ChannelFamily, getattr(channel, "value", channel), "channel")
        self.gamma = None if gamma is None else _check_number(gamma, "gamma")
        self.b = None if b is None else _check_number(b, "b")
        self.g = None if g is None else _check_number(g, "g")
        self.t_start = _check_number(t_start, "t_start")
        self.t_stop = _check_number(t_stop, "t_stop")
        self.steps = steps
        self.measures = tuple(_check_list(measures, "measures"))
        self.output = None if output is None else _check_text(output, "output")
        self.format = _check_text(format, "format")
        self.workers = workers
        self.label = None if label is None else _check_text(label, "label")
        self.bloch = (
            None
            if bloch is None
            else [_check_number(value, "bloch") for value in _check_list(bloch, "bloch")]
        )
        self._validate()

    def _validate(self):
        if self.t_start < 0:
            raise ConfigError(
                "Time grid must start at t >= 0, got %r" % self.t_start, key="t_start"
            )
        if not self.t_stop > self.t_start:
            raise ConfigError(
                "Time grid must stop after it starts, got [%r, %r]" % (self.t_start, self.t_stop),
                key="t_stop",
            )
        if isinstance(self.steps, bool) or not isinstance(self.steps, six.integer_types):
            raise ConfigError("Expected an integer, got %r" % (self.steps,), key="steps")
        if self.steps < 2:
            raise ConfigError(
                "A time grid needs at least 2 steps, got %r" % self.steps, key="steps"
            )
        if isinstance(self.workers, bool) or not isinstance(self.workers, six.integer_types):
            raise ConfigError("Expected an integer, got %r" % (self.workers,), key="workers")
        if self.workers < 1:
            raise ConfigError(
                "At least one worker is needed, got %r" % self.workers, key="workers"
            )
        if self.format not in FORMATS:
            raise ConfigError(
                "Expected one of %s, got %r" % (", ".join(FORMATS), self.format), key="format"
            )
        self._validate_measures()
        self._validate_state()
        try:
            make_params(self.channel, gamma=self.gamma, b=self.b, g=self.g)
        except ValidationError as error:
            raise ConfigError(str(error), key="channel")

    def _validate_measures(self):
        if not self.measures:
            raise ConfigError("At least one measure is needed", key="measures")
        for measure in self.measures:
            if measure not in constants.MEASURES:
                raise ConfigError(
                    "Unknown measure %r, expected one of %s"
                    % (measure, ", ".join(constants.MEASURES)),
                    key="measures",
                )
            systems = constants.MEASURE_SYSTEMS.get(measure)
            if systems and self.system not in systems:
                raise ConfigError(
                    "Measure %r is not defined for a %s" % (measure, self.system.value),
                    key="measures",
                )
        if len(set(self.measures)) != len(self.measures):
            raise ConfigError("Duplicated measures in %r" % (list(self.measures),), key="measures")

    def _validate_state(self):
        try:
            system = state_system(self.state)
        except ValidationError as error:
            raise ConfigError(str(error), key="state")
        if system not in (None, self.system):
            raise ConfigError(
                "State %r is a %s state, not a %s state"
                % (self.state, system.value, self.system.value),
                key="state",
            )
        if self.state == "bloch":
            expected = _BLOCH_SIZES[self.system]
            if self.bloch is None or len(self.bloch) != expected:
                raise ConfigError(
                    "A %s needs %d Bloch parameters" % (self.system.value, expected), key="bloch"
                )
        elif self.bloch is not None:
            raise ConfigError("Bloch parameters are only used with state 'bloch'", key="bloch")

    def __repr__(self):
        return "<SweepConfig %s %s %s t=[%g, %g] steps=%d>" % (
            self.system.value,
            self.state,
            self.channel.value,
            self.t_start,
            self.t_stop,
            self.steps,
        )

    def __eq__(self, other):
        return isinstance(other, SweepConfig) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def params(self):
        """
        :return: The channel parameters, None without a channel.
        :rtype: RtnParams or AdParams or None
        """
        return make_params(self.channel, gamma=self.gamma, b=self.b, g=self.g)

    @property
    def measure_columns(self):
        """
        :return: The requested scalar measures in output order.
        :rtype: list(str)
        """
        return [name for name in constants.MEASURES if name in self.measures and name != "dwf"]

    def times(self):
        """
        >>> SweepConfig("qubit", "ns1", 0, 1, steps=3).times().tolist()
        [0.0, 0.5, 1.0]

        :return: The uniform time grid.
        :rtype: numpy.ndarray
        """
        return np.linspace(self.t_start, self.t_stop, self.steps)

    def replace(self, **changes):
        """
        :return: A copy of the config with some keys changed.
        :rtype: SweepConfig
        """
        data = self.to_dict()
        data.update(changes)
        return self.from_dict(data)

    # Serialization methods

    def to_dict(self):
        """
        Serialize the config to a JSON compatible dict. Unset optional keys are omitted.

        :rtype: dict
        """
        data = {
            "system": self.system.value,
            "state": self.state,
            "channel": self.channel.value,
            "gamma": self.gamma,
            "b": self.b,
            "g": self.g,
            "t_start": self.t_start,
            "t_stop": self.t_stop,
            "steps": self.steps,
            "measures": list(self.measures),
            "output": self.output,
            "format": self.format,
            "workers": self.workers,
            "label": self.label,
            "bloch": self.bloch,
        }
        return {key: value for key, value in data.items() if value is not None}

    @classmethod
    @handle_arguments(
        system="sys",
        state="initial",
        bloch="params",
        channel="noise",
        gamma="rate",
        b="amplitude",
        g="coupling",
        t_start="start",
        t_stop="stop",
        steps="points",
        measures="measure",
        output="out",
        format="fmt",
        workers="jobs",
        label="name",
    )
    def _from_keys(cls, **kwargs):
        for key in ("system", "state", "t_start", "t_stop"):
            if key not in kwargs:
                raise ConfigError("Missing required key", key=key)
        return cls(**kwargs)

    @classmethod
    def from_dict(cls, data):
        """
        Load a config from a raw dict.

        :param dict data: A dict, generally obtained from a JSON file.
        :rtype: SweepConfig
        :raise ConfigError: If the dict breaks the schema.
        """
        if not isinstance(data, dict):
            raise ConfigError("A config must be an object, got %s" % type(data).__name__)
        data = dict(data)
        if "t" in data:
            grid = data.pop("t")
            if not isinstance(grid, (list, tuple)) or len(grid) != 2:
                raise ConfigError("Expected [t_start, t_stop], got %r" % (grid,), key="t")
            if "t_start" in data or "t_stop" in data:
                raise ConfigError("Both 't' and 't_start'/'t_stop' are set", key="t")
            data["t_start"], data["t_stop"] = grid
        return cls._from_keys(**data)

    @classmethod
    def from_json_file(cls, path):
        """
        :param str path: The path to a json file.
        :rtype: SweepConfig
        :raise ConfigError: If the file breaks the schema.
        """
        with open(path) as stream:
            return parse_config(stream.read())

    def to_json_file(self, path, indent=4, sort_keys=True, **kwargs):
        """
        Export the config to a json file.

        :param str path: The path to the json file to save to
        :param int indent: The indent to use. Default is 4
        :param bool sort_keys: Should we sort the keys? Default is True
        :param kwargs: Any keyword arguments are passed to `json.dump`
        """
        with open(path, "w") as stream:
            json.dump(self.to_dict(), stream, sort_keys=sort_keys, indent=indent, **kwargs)


def _locate(text, key):
    """
    :return: The 1-based (line, column) of the first occurrence of a quoted key, or (None, None).
    """
    needle = '"%s"' % key
    for number, line in enumerate(text.splitlines(), 1):
        column = line.find(needle)
        if column >= 0:
            return number, column + 1
    return None, None


def parse_config(text):
    """
    Parse and validate a sweep config.

    :param str text: A JSON object.
    :rtype: SweepConfig
    :raise ConfigError: If the text is not valid JSON or breaks the schema.
    """
    try:
        data = json.loads(text)
    except ValueError as error:
        raise ConfigError(
            "Invalid JSON: %s" % getattr(error, "msg", error),
            line=getattr(error, "lineno", None),
            column=getattr(error, "colno", None),
        )
    try:
        return SweepConfig.from_dict(data)
    except ConfigError as error:
        if error.key is None or error.line is not None:
            raise
        line, column = _locate(text, error.key)
        if line is None:
            raise
        message = str(error).rsplit(" (key ", 1)[0]
        raise ConfigError(message, key=error.key, line=line, column=column)

"""
Time sweeps of a state under a noise channel.

Each time point evolves the initial state directly with the channel built
for that time. Rows never depend on each other, so they can be computed in
any order.
"""
import logging

from concurrent import futures

from discrete_wigner.base import constants
from discrete_wigner.base.constants import ChannelFamily
from discrete_wigner.channels.kernels import classify_ad, classify_rtn
from discrete_wigner.channels.kraus import apply_channel, channel_kraus
from discrete_wigner.measures.measures import (
    MeasureRecord,
    coherence_l1,
    concurrence,
    teleportation_fidelity,
)
from discrete_wigner.states.presets import resolve_state
from discrete_wigner.wigner.dwf import dwf, mana, negativity, robustness, sum_negativity
from discrete_wigner.wigner.net import default_operators

_LOG = logging.getLogger(__name__)

NO_CHANNEL_REGIME = "NoChannel"


class SweepRow(object):
    """
    The Wigner table and the measures of the evolved state at one time.
    """

    def __init__(self, t, table, record, regime):
        """
        :param float t: The time.
        :param DwfTable table: The Wigner table of the evolved state.
        :param MeasureRecord record: The requested measures.
        :param str regime: The memory regime label of the channel.
        """
        self.t = t
        self.table = table
        self.record = record
        self.regime = regime

    def __repr__(self):
        return "<SweepRow t=%r>" % self.t

    def values(self, measures):
        """
        :param measures: The measure columns, in order.
        :return: t, the flattened table, then the measures.
        :rtype: list(float)
        """
        return [self.t] + self.table.flatten() + [getattr(self.record, name) for name in measures]

    def to_dict(self, measures):
        """
        :param measures: The measure columns to include.
        :rtype: dict
        """
        data = {"t": self.t, "regime": self.regime}
        data.update(zip(self.table.column_names(), self.table.flatten()))
        data.update((name, getattr(self.record, name)) for name in measures)
        return data


def regime_label(cfg):
    """
    >>> from discrete_wigner.sweep.config import SweepConfig
    >>> regime_label(SweepConfig("qubit", "ns1", 0, 1, channel="rtn", gamma=0.001, b=0.05))
    'NonMarkovian'

    :param SweepConfig cfg: A sweep config.
    :rtype: str
    """
    if cfg.channel is ChannelFamily.rtn:
        return classify_rtn(cfg.params).value
    if cfg.channel is ChannelFamily.ad:
        return classify_ad(cfg.params).value
    return NO_CHANNEL_REGIME


def measure_state(rho, table, ops, measures, t=None):
    """
    Compute a set of measures on one state.

    :param numpy.ndarray rho: The density matrix.
    :param DwfTable table: Its Wigner table.
    :param PhasePointOperatorSet ops: The operators the table was computed with.
    :param measures: Names from `constants.MEASURES`.
    :param float t: The time stamp of the record.
    :rtype: MeasureRecord
    """
    values = {}
    if "negativity" in measures or "robustness" in measures:
        values["negativity"] = negativity(rho, ops)
    if "robustness" in measures:
        values["robustness"] = robustness(values["negativity"], ops.dimension)
    if "min_w" in measures:
        values["min_w"] = table.minimum()
    if "sum_negativity" in measures:
        values["sum_negativity"] = sum_negativity(table)
    if "mana" in measures:
        values["mana"] = mana(table)
    if "coherence" in measures:
        values["coherence"] = coherence_l1(rho)
    if "concurrence" in measures:
        values["concurrence"] = concurrence(rho)
    if "fidelity" in measures:
        values["n_f"], values["fidelity"] = teleportation_fidelity(rho)
    return MeasureRecord(t, **values)


def _row(cfg, rho, ops, regime, t):
    kraus = channel_kraus(cfg.system, cfg.channel, t, cfg.params)
    evolved = apply_channel(rho, kraus)
    table = dwf(evolved, ops)
    total = table.total()
    if abs(total - 1.0) > constants.TOL_OPERATOR:
        _LOG.warning("Wigner table at t=%r sums to %.12g", t, total)
    _LOG.debug("t=%r min W=%.6g", t, table.minimum())
    return SweepRow(t, table, measure_state(evolved, table, ops, cfg.measures, t=t), regime)


def run_sweep(cfg):
    """
    Run a sweep.

    :param SweepConfig cfg: A validated config.
    :return: One row per time of the grid, ordered by time.
    :rtype: list(SweepRow)
    :raise NegativeStateError: If the initial state does not exist.
    :raise KernelViolationError: If a channel leaves its admissible range.
    """
    initial = resolve_state(cfg.system, cfg.state, bloch=cfg.bloch)
    ops = default_operators(cfg.system.dimension)
    regime = regime_label(cfg)
    times = [float(t) for t in cfg.times()]
    _LOG.info("Running %r over %d times (%s)", cfg, len(times), regime)

    def _compute(t):
        return _row(cfg, initial.state, ops, regime, t)

    if cfg.workers == 1:
        return [_compute(t) for t in times]

    with futures.ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        return list(executor.map(_compute, times))

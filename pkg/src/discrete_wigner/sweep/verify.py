"""
Consolidated verification report.

Known inconsistencies of the printed reference material (qubit closed form,
printed correlation formulas, closed-form nets, the replaced d=4 vector)
are reported as WARN, and so are the tied two-qubit negative levels of the
default net and the figure claims they make unreachable. Anything else that
breaks is a FAIL.
"""
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import projector
from discrete_wigner.base.constants import ChannelFamily, Status, System
from discrete_wigner.base.errors import KernelViolationError, NegativeStateError
from discrete_wigner.base.mubs import check_unbiased, mub_set
from discrete_wigner.base.phase_space import build_phase_space, verify_geometry
from discrete_wigner.base.report import Report
from discrete_wigner.channels.kernels import (
    AdParams,
    RtnParams,
    ad_amplitude_zero,
    first_crossing,
    rtn_kernel,
)
from discrete_wigner.channels.kraus import apply_channel, channel_kraus
from discrete_wigner.measures.correlation import CorrelationExtraction, correlation_direct
from discrete_wigner.measures.measures import CLASSICAL_FIDELITY
from discrete_wigner.states.bloch import (
    bloch_from_density,
    maximally_mixed,
    minimum_eigenvalue,
    qubit_from_bloch,
    random_density,
    random_hermitian,
)
from discrete_wigner.states.presets import CAPTION_PRESETS, NEGATIVE_STATE_PRESETS, preset
from discrete_wigner.sweep.presets import figure_preset
from discrete_wigner.sweep.runner import run_sweep
from discrete_wigner.wigner.closed_form import (
    closed_form_qubit_dwf,
    closed_form_qubit_rtn_dwf,
    closed_form_two_qubit_dwf,
    printed_correlation,
)
from discrete_wigner.wigner.dwf import (
    dwf,
    line_sum_check,
    mana,
    negativity,
    reconstruct,
    sum_negativity,
)
from discrete_wigner.wigner.gates import explore_phase_gate_conjugation
from discrete_wigner.wigner.negative import (
    NET_TRIES,
    degenerate_ranks,
    negative_candidates,
    negative_state,
    search_non_degenerate_net,
)
from discrete_wigner.wigner.net import build_quantum_net, phase_point_operators
from discrete_wigner.wigner.search import search_closed_form

_LOG = logging.getLogger(__name__)

ROUND_TRIPS = 100
KRAUS_TIMES = 50
CPTP_STATES = 100
FIGURE_STEPS = 300

_CHANNELS = (
    (ChannelFamily.rtn, RtnParams(0.001, 0.05), 250.0),
    (ChannelFamily.rtn, RtnParams(1.0, 0.07), 500.0),
    (ChannelFamily.ad, AdParams(50.0, 0.01), 40.0),
    (ChannelFamily.ad, AdParams(0.01, 1.0), 1000.0),
)


def _rtn_first_zero(params):
    """
    First root of exp(-γt)(cos u + sin(u) / ζ) with u = ζγt.
    """
    zeta = np.sqrt(params.ratio - 1.0)
    return (np.pi - np.arctan(zeta)) / (zeta * params.gamma)


def _ad_first_zero(params):
    """
    First root of exp(-gt/2)(cos u + g sin(u) / |l|) with u = |l|t/2.
    """
    modulus = np.sqrt(-params.l_squared)
    return 2.0 * (np.pi - np.arctan(modulus / params.g)) / modulus


class _Context(object):
    """
    Phase space, bases and operators of one dimension.
    """

    def __init__(self, dimension):
        self.dimension = dimension
        self.space = build_phase_space(dimension)
        self.mubs = mub_set(dimension)
        self.net = build_quantum_net(self.space, self.mubs)
        self.ops = phase_point_operators(self.net)


def _check_structure(report, context):
    prefix = "d%d" % context.dimension
    report.extend(verify_geometry(context.space.striations), prefix="geometry.%s" % prefix)
    report.extend(check_unbiased(context.mubs), prefix="mub.%s" % prefix)
    report.extend(context.ops.check_invariants(context.net), prefix="operators.%s" % prefix)


def _check_round_trips(report, context, rng):
    dimension = context.dimension
    worst = 0.0
    for _ in range(ROUND_TRIPS):
        matrix = random_hermitian(dimension, rng)
        rebuilt = reconstruct(dwf(matrix, context.ops), context.ops)
        worst = max(worst, float(np.max(np.abs(rebuilt - matrix))))
    report.add_threshold(
        "roundtrip.d%d" % dimension,
        worst,
        constants.TOL_OPERATOR,
        detail="%d unit-trace Hermitian matrices" % ROUND_TRIPS,
    )

    worst = 0.0
    for _ in range(10):
        rho = random_density(dimension, rng)
        check = line_sum_check(dwf(rho, context.ops), context.net, rho).get("line_sums")
        worst = max(worst, check.residual)
    report.add_threshold("line_sums.d%d" % dimension, worst, constants.TOL_OPERATOR)

    basis = [projector(vector) for vector in np.eye(dimension)]
    worst = max(negativity(rho, context.ops) for rho in basis)
    report.add_threshold(
        "stabilizer.d%d" % dimension,
        worst,
        constants.TOL_UNIT,
        detail="computational basis states have no negativity",
    )


def _check_channels(report, rng):
    systems = (System.qubit, System.qutrit, System.twoqubit)
    for family, params, t_stop in _CHANNELS:
        values = ",".join("%g" % value for value in params.to_dict().values())
        name = "kraus.%s[%s]" % (family.value, values)
        for system in systems:
            dimension = system.dimension
            try:
                completeness = max(
                    channel_kraus(system, family, t, params).completeness()
                    for t in np.linspace(0.0, t_stop, KRAUS_TIMES)
                )
            except KernelViolationError as error:
                report.add(
                    "%s.%s.complete" % (name, system.value), Status.failed, detail=str(error)
                )
                continue
            report.add_threshold(
                "%s.%s.complete" % (name, system.value), completeness, constants.TOL_OPERATOR
            )

            kraus_zero = channel_kraus(system, family, 0.0, params)
            states = [random_density(dimension, rng) for _ in range(CPTP_STATES)]
            identity = max(
                float(np.max(np.abs(apply_channel(rho, kraus_zero) - rho))) for rho in states[:10]
            )
            report.add_threshold(
                "%s.%s.identity_at_t0" % (name, system.value), identity, constants.TOL_UNIT
            )

            kraus_mid = channel_kraus(system, family, t_stop / 7.0, params)
            lowest = min(minimum_eigenvalue(apply_channel(rho, kraus_mid)) for rho in states)
            report.add_threshold(
                "%s.%s.positive" % (name, system.value),
                max(0.0, -lowest),
                constants.TOL_OPERATOR,
                detail="%d random states" % CPTP_STATES,
            )

            if family is ChannelFamily.rtn:
                mixed = maximally_mixed(dimension)
                unital = float(np.max(np.abs(apply_channel(mixed, kraus_mid) - mixed)))
                report.add_threshold(
                    "%s.%s.unital" % (name, system.value), unital, constants.TOL_UNIT
                )


def _check_kernels(report):
    params = RtnParams(0.001, 0.05)
    root = first_crossing(lambda t: rtn_kernel(t, params), 0.0, 100.0)
    expected = _rtn_first_zero(params)
    report.add_threshold(
        "kernel.rtn.first_zero",
        abs(root - expected) if root is not None else np.inf,
        1e-6,
        detail="root %s, closed form %.6f" % (root, expected),
    )

    params = RtnParams(1.0, 0.07)
    values = np.array([rtn_kernel(t, params) for t in np.linspace(0.0, 50.0, 501)])
    rise = max(0.0, float(np.max(np.diff(values))))
    report.add_threshold(
        "kernel.rtn.markovian_monotone",
        rise if values.min() > 0 else np.inf,
        constants.TOL_UNIT,
        detail="positive and non-increasing on [0, 50]",
    )

    params = AdParams(50.0, 0.01)
    root = ad_amplitude_zero(20.0, params)
    expected = _ad_first_zero(params)
    report.add_threshold(
        "kernel.ad.first_full_decay",
        abs(root - expected) if root is not None else np.inf,
        1e-6,
        detail="root %s, closed form %.6f" % (root, expected),
    )


def _check_closed_forms(report, contexts):
    results = {}
    for dimension in constants.SUPPORTED_DIMENSIONS:
        context = contexts[dimension]
        result = results[dimension] = search_closed_form(context.space, context.mubs)
        report.add_threshold(
            "closed_form.d%d.net_search" % dimension,
            result.residual,
            constants.TOL_MATCH,
            detail="best net %r%s"
            % (result.assignment, ", transposed" if result.transposed else ""),
            warn=True,
            data=result.to_dict(),
        )
        if result.missing:
            report.add(
                "closed_form.d%d.missing_parameters" % dimension,
                Status.warning,
                detail="printed form ignores %s" % ", ".join(result.missing),
                data={"missing": result.missing},
            )

    # The evolved qubit form at t = 0 against the static one.
    bloch = CAPTION_PRESETS["qubit_ns1"][1]
    static = closed_form_qubit_dwf(bloch).entries
    evolved = closed_form_qubit_rtn_dwf(bloch, 1.0).entries
    report.add_threshold(
        "closed_form.qubit_rtn.static_at_t0",
        float(np.max(np.abs(static - evolved))),
        constants.TOL_MATCH,
        warn=True,
    )

    # The evolved qubit form against the evolved state, on the best net found above.
    context = contexts[2]
    best = results[2]
    ops = phase_point_operators(build_quantum_net(context.space, context.mubs, best.assignment))
    params = RtnParams(0.001, 0.05)
    rho = qubit_from_bloch(bloch)
    worst = 0.0
    for t in np.linspace(0.0, 250.0, 11):
        kraus = channel_kraus(System.qubit, ChannelFamily.rtn, t, params)
        table = dwf(apply_channel(rho, kraus), ops).entries
        printed = closed_form_qubit_rtn_dwf(bloch, rtn_kernel(t, params)).entries
        if best.transposed:
            printed = printed.T
        worst = max(worst, float(np.max(np.abs(table - printed))))
    report.add_threshold(
        "closed_form.qubit_rtn.constructed", worst, constants.TOL_MATCH, warn=True
    )


def _check_correlations(report):
    state = preset("twoqubit_ns1").state
    params = bloch_from_density(state)
    table = closed_form_two_qubit_dwf(params.a, params.s, params.correlations)
    extraction = CorrelationExtraction(correlation_direct(state), printed_correlation(table))
    report.extend(extraction.report(), prefix="correlation")


def _levels(values):
    return ", ".join("%.6f" % value for value in values)


def _check_negative_states(report, contexts, rng):
    for dimension, context in sorted(contexts.items()):
        candidates = negative_candidates(context.ops)
        values = [candidate[1] for candidate in candidates]
        detail = "%d rank(s): %s" % (len(values), _levels(values))
        data = {"eigenvalues": values}
        tied = degenerate_ranks(candidates)
        if not candidates or values[-1] >= 0:
            status = Status.failed
        elif tied:
            # other nets may split a tied level
            status = Status.warning
            data["degenerate"] = tied
            detail += "; %s share a level on the default net" % ", ".join(
                "NS%d and NS%d" % pair for pair in tied
            )
            found = search_non_degenerate_net(context.space, context.mubs, rng)
            if found is None:
                detail += ", no net with distinct levels in %d draws" % NET_TRIES
                data["non_degenerate_net"] = None
            else:
                assignment, others = found
                others = [candidate[1] for candidate in others]
                detail += ", net %r has %s" % (assignment, _levels(others))
                data["non_degenerate_net"] = assignment.to_dict()
                data["non_degenerate_eigenvalues"] = others
        else:
            status = Status.passed
        report.add("negative_states.d%d" % dimension, status, detail=detail, data=data)
        try:
            state = negative_state(context.ops, 1).state
        except NegativeStateError as error:
            report.add("mana_identity.d%d" % dimension, Status.failed, detail=str(error))
            continue
        table = dwf(state, context.ops)
        report.add_threshold(
            "mana_identity.d%d" % dimension,
            abs(mana(table) - np.log(2.0 * sum_negativity(table) + 1.0)),
            constants.TOL_UNIT,
        )

    expected = (np.sqrt(3.0) - 1.0) / 2.0
    state = negative_state(contexts[2].ops, 1).state
    report.add_threshold(
        "negativity.qubit_ns1",
        abs(negativity(state, contexts[2].ops) - expected),
        constants.TOL_OPERATOR,
        detail="(sqrt(3) - 1) / 2",
    )

    records = explore_phase_gate_conjugation(negative_state(contexts[3].ops, 1).state)
    conjugating = [record["exponents"] for record in records if record["conjugates"]]
    report.add(
        "gates.qutrit_phase_conjugation",
        Status.passed,
        detail="%d of %d diagonal phase gates conjugate NS1" % (len(conjugating), len(records)),
        data={"records": records},
    )


def _check_figures(report, contexts):
    """
    Claims of the two-qubit figures that depend on which negative states exist.
    """
    values = [candidate[1] for candidate in negative_candidates(contexts[4].ops)]
    for name in ("fig12", "fig13", "fig15"):
        figure = figure_preset(name, steps=FIGURE_STEPS)
        for label in figure.skipped:
            report.add(
                "figures.%s.%s" % (name, label),
                Status.warning,
                detail="series skipped, the default d=4 net has %d negative state(s): %s"
                % (len(values), _levels(values)),
                data={"available": len(values), "eigenvalues": values},
            )

    # Every negative state should leave the classical teleportation region.
    figure = figure_preset("fig15", steps=FIGURE_STEPS)
    for cfg in figure:
        if cfg.state not in NEGATIVE_STATE_PRESETS:
            continue
        rows = run_sweep(cfg)
        lowest = min(rows, key=lambda row: row.record.fidelity)
        minimum = lowest.record.fidelity
        report.add_threshold(
            "figures.fig15.%s.below_classical" % cfg.label,
            max(0.0, minimum - CLASSICAL_FIDELITY),
            0.0,
            detail="minimum fidelity %.7f at t=%g, classical bound %.7f"
            % (minimum, lowest.t, CLASSICAL_FIDELITY),
            warn=True,
            data={"minimum": minimum, "t": lowest.t},
        )


def verify_all(seed=constants.VERIFY_SEED):
    """
    Run every consistency check of the package.

    :param int seed: Seed of the random states used by the checks.
    :return: The consolidated report.
    :rtype: Report
    """
    rng = np.random.default_rng(seed)
    report = Report("verify")
    contexts = {}
    for dimension in constants.SUPPORTED_DIMENSIONS:
        _LOG.info("Checking d=%d", dimension)
        context = contexts[dimension] = _Context(dimension)
        _check_structure(report, context)
        _check_round_trips(report, context, rng)

    _LOG.info("Checking channels")
    _check_channels(report, rng)
    _check_kernels(report)

    _LOG.info("Checking printed closed forms")
    _check_closed_forms(report, contexts)
    _check_correlations(report)
    _check_negative_states(report, contexts, rng)

    _LOG.info("Checking figure claims")
    _check_figures(report, contexts)

    _LOG.info("%s", report.summary())
    return report

"""
Named initial states.

Caption states are rounded to two decimals. They are validated against a
relaxed tolerance and, if they fall outside the PSD cone, clipped back onto
it. Exact negative states are eigenvectors of the default phase-point
operators.
"""
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base.constants import System
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.states.bloch import (
    bell_label,
    bell_state,
    bloch_from_density,
    bloch_to_list,
    density_from_vector,
    maximally_mixed,
    minimum_eigenvalue,
    project_to_psd,
)
from discrete_wigner.wigner.negative import negative_state
from discrete_wigner.wigner.net import default_operators

_LOG = logging.getLogger(__name__)

_GELL_MANN_CAVEAT = (
    "Gell-Mann components use the standard l1..l8 ordering; "
    "another ordering describes a unitarily related state"
)

CAPTION_PRESETS = {
    "qubit_ns1": (System.qubit, (0.50, 0.56, -0.66)),
    "qutrit_ns1": (System.qutrit, (0.0, 0.0, -0.5, 0.0, 0.0, 0.4, 0.7, -0.3)),
    "twoqubit_ns1": (
        System.twoqubit,
        (
            0.14, 0.14, 0.61,
            0.44, -0.44, 0.14,
            0.61, 0.14, -0.44,
            -0.14, -0.61, -0.44,
            0.61, -0.61, 0.44,
        ),
    ),
}  # fmt: skip

NEGATIVE_STATE_PRESETS = {"ns1": 1, "ns2": 2, "ns3": 3}


class PresetState(object):
    """
    A density matrix together with a record of where it comes from.
    """

    def __init__(self, name, system, state, provenance):
        """
        :param str name: The requested state spec.
        :param System system: The physical system.
        :param numpy.ndarray state: The density matrix.
        :param dict provenance: How the state was built.
        """
        self.name = name
        self.system = System(system)
        self.state = state
        self.provenance = provenance

    def __repr__(self):
        return "<PresetState %r %s>" % (self.name, self.system.value)

    def to_dict(self):
        """
        :return: A json-compatible representation of the provenance and Bloch parameters.
        :rtype: dict
        """
        return {
            "name": self.name,
            "system": self.system.value,
            "bloch": bloch_to_list(bloch_from_density(self.state)),
            "provenance": self.provenance,
        }


def _caption_state(name):
    system, params = CAPTION_PRESETS[name]
    raw = density_from_vector(system.dimension, params, tol=float("inf"))
    lowest = minimum_eigenvalue(raw)
    provenance = {
        "source": "caption",
        "parameters": list(params),
        "min_eigenvalue": lowest,
        "projected": False,
        "clipped_weight": 0.0,
    }
    if system is System.qutrit:
        provenance["caveat"] = _GELL_MANN_CAVEAT

    if lowest >= -constants.TOL_UNIT:
        return PresetState(name, system, raw, provenance)

    state, clipped, _ = project_to_psd(raw)
    provenance.update(projected=True, clipped_weight=clipped)
    if lowest < -constants.TOL_CAPTION_PSD:
        _LOG.warning(
            "Preset %r is not positive semi-definite (minimum eigenvalue %.6g), "
            "clipped weight %.6g and renormalized",
            name,
            lowest,
            clipped,
        )
    else:
        _LOG.debug("Preset %r clipped by %.3g onto the PSD cone", name, clipped)
    return PresetState(name, system, state, provenance)


def _negative_state(system, rank, spec):
    result = negative_state(default_operators(system.dimension), rank)
    provenance = {
        "source": "eigenvector",
        "rank": rank,
        "point": list(result.point),
        "eigenvalue": result.eigenvalue,
        "degenerate": result.degenerate,
    }
    return PresetState(spec, system, result.state, provenance)


def preset(name):
    """
    Resolve a named caption state or Bell state.

    >>> preset("qubit_ns1").provenance["parameters"]
    [0.5, 0.56, -0.66]

    :param str name: A caption preset or a Bell label.
    :rtype: PresetState
    :raise ValidationError: If the name is unknown.
    """
    if name in CAPTION_PRESETS:
        return _caption_state(name)
    try:
        label = bell_label(name)
    except ValidationError:
        raise ValidationError(
            "Unknown preset %r, expected one of %r or a Bell label"
            % (name, sorted(CAPTION_PRESETS))
        )
    provenance = {"source": "bell", "label": label}
    return PresetState(name, System.twoqubit, bell_state(label), provenance)


def state_system(spec):
    """
    >>> state_system("phi+")
    <System.twoqubit: 'twoqubit'>
    >>> state_system("ns2") is None
    True

    :param str spec: A state spec, see `resolve_state`.
    :return: The only system the state spec applies to, None if it applies to all of them.
    :rtype: System or None
    :raise ValidationError: If the state spec is unknown.
    """
    if spec in NEGATIVE_STATE_PRESETS or spec in ("maximally_mixed", "bloch"):
        return None
    if spec in CAPTION_PRESETS:
        return CAPTION_PRESETS[spec][0]
    bell_label(spec)
    return System.twoqubit


def resolve_state(system, spec, bloch=None):
    """
    Build the initial state of a sweep.

    :param System system: The physical system.
    :param str spec: A caption preset, ns1/ns2/ns3, a Bell label,
        ``maximally_mixed`` or ``bloch``.
    :param bloch: The raw Bloch parameters when `spec` is ``bloch``.
    :rtype: PresetState
    :raise ValidationError: If the state spec is unknown or does not fit the system.
    :raise NegativeStateError: If the requested negative state does not exist.
    """
    system = System(system)
    if spec in NEGATIVE_STATE_PRESETS:
        return _negative_state(system, NEGATIVE_STATE_PRESETS[spec], spec)
    if spec == "maximally_mixed":
        return PresetState(
            spec, system, maximally_mixed(system.dimension), {"source": "maximally_mixed"}
        )
    if spec == "bloch":
        if bloch is None:
            raise ValidationError("State 'bloch' needs its parameters")
        state = density_from_vector(system.dimension, bloch)
        parameters = np.asarray(bloch, dtype=float).tolist()
        return PresetState(spec, system, state, {"source": "bloch", "parameters": parameters})

    resolved = preset(spec)
    if resolved.system is not system:
        raise ValidationError(
            "State %r is a %s state, not a %s state" % (spec, resolved.system.value, system.value)
        )
    return resolved

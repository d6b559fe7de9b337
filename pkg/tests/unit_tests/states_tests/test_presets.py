"""
Test cases for named initial states
"""
import numpy as np
import pytest

from discrete_wigner.base.constants import System
from discrete_wigner.base.errors import NegativeStateError, ValidationError
from discrete_wigner.states.bloch import check_density
from discrete_wigner.states.presets import CAPTION_PRESETS, preset, resolve_state, state_system


@pytest.mark.parametrize("name", sorted(CAPTION_PRESETS))
def test_caption_presets_are_states(name):
    """Assert every caption preset resolves to a valid density matrix."""
    resolved = preset(name)
    check_density(resolved.state)
    assert resolved.provenance["source"] == "caption"
    assert resolved.system is CAPTION_PRESETS[name][0]


def test_qubit_caption_preset():
    """Assert the qubit caption state keeps its parameters."""
    resolved = preset("qubit_ns1")
    assert not resolved.provenance["projected"]
    np.testing.assert_allclose(resolved.to_dict()["bloch"], [0.5, 0.56, -0.66], atol=1e-12)


def test_qutrit_caption_caveat():
    """Assert the qutrit caption state records its Gell-Mann ordering."""
    assert "caveat" in preset("qutrit_ns1").provenance


def test_bell_preset():
    """Assert a Bell label resolves to a two-qubit state."""
    resolved = preset("bell_phi_plus")
    assert resolved.system is System.twoqubit
    assert resolved.provenance == {"source": "bell", "label": "phi+"}


def test_unknown_preset():
    """Assert an unknown name raises."""
    with pytest.raises(ValidationError):
        preset("qubit_ns9")


def test_resolve_negative_state():
    """Assert ns1 resolves to the eigenvector state of its system."""
    resolved = resolve_state(System.qutrit, "ns1")
    assert resolved.provenance["source"] == "eigenvector"
    assert resolved.provenance["eigenvalue"] == pytest.approx(-1.0)
    assert resolved.system is System.qutrit


def test_resolve_missing_negative_state():
    """Assert ns3 does not exist for two qubits."""
    with pytest.raises(NegativeStateError):
        resolve_state("twoqubit", "ns3")


def test_resolve_maximally_mixed(dimension):
    """Assert maximally_mixed works for every system."""
    system = {2: System.qubit, 3: System.qutrit, 4: System.twoqubit}[dimension]
    resolved = resolve_state(system, "maximally_mixed")
    np.testing.assert_allclose(resolved.state, np.eye(dimension) / dimension)


def test_resolve_bloch():
    """Assert raw Bloch parameters are used with the bloch state."""
    resolved = resolve_state("qubit", "bloch", bloch=[0.0, 0.0, 1.0])
    np.testing.assert_allclose(resolved.state, np.diag([1.0, 0.0]))
    assert resolved.provenance["parameters"] == [0.0, 0.0, 1.0]


def test_resolve_bloch_without_parameters():
    """Assert the bloch state needs parameters."""
    with pytest.raises(ValidationError):
        resolve_state("qubit", "bloch")


def test_resolve_wrong_system():
    """Assert a preset cannot be used on another system."""
    with pytest.raises(ValidationError):
        resolve_state("qubit", "phi+")


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("ns1", None),
        ("maximally_mixed", None),
        ("bloch", None),
        ("qutrit_ns1", System.qutrit),
        ("psi-", System.twoqubit),
    ],
)
def test_state_system(spec, expected):
    """Assert each state name reports the system it is bound to."""
    assert state_system(spec) is expected


def test_state_system_unknown():
    """Assert an unknown state name raises."""
    with pytest.raises(ValidationError):
        state_system("unknown")

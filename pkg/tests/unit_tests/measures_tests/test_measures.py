"""
Test cases for coherence, entanglement and teleportation measures
"""
import numpy as np
import pytest
from scipy.stats import unitary_group

from discrete_wigner.base.errors import ValidationError
from discrete_wigner.measures.measures import (
    CLASSICAL_FIDELITY,
    MeasureRecord,
    coherence_l1,
    concurrence,
    spin_flip,
    teleportation_fidelity,
)
from discrete_wigner.states.bloch import (
    bell_state,
    maximally_mixed,
    random_density,
    two_qubit_from_bloch,
)


def _werner(p):
    return p * bell_state("psi-") + (1.0 - p) * maximally_mixed(4)


def test_coherence_of_diagonal_state():
    """Assert a diagonal state has no coherence."""
    assert coherence_l1(np.diag([0.2, 0.3, 0.5])) == 0.0


def test_coherence_of_bell_state():
    """Assert Φ+ has an l1 coherence of 1."""
    assert coherence_l1(bell_state("phi+")) == pytest.approx(1.0)


def test_coherence_of_uniform_superposition(dimension):
    """Assert the uniform superposition has the maximal coherence d - 1."""
    rho = np.full((dimension, dimension), 1.0 / dimension)
    assert coherence_l1(rho) == pytest.approx(dimension - 1.0)


@pytest.mark.parametrize("label", ["phi+", "phi-", "psi+", "psi-"])
def test_bell_states_are_maximally_entangled(label):
    """Assert every Bell state has concurrence 1 and fidelity 1."""
    rho = bell_state(label)
    assert concurrence(rho) == pytest.approx(1.0)
    norm, fidelity = teleportation_fidelity(rho)
    assert norm == pytest.approx(3.0)
    assert fidelity == pytest.approx(1.0)


def test_product_state_is_separable():
    """Assert a product state has no concurrence."""
    a = [0.0, 0.0, 1.0]
    s = [1.0, 0.0, 0.0]
    rho = two_qubit_from_bloch(a, s, np.outer(a, s))
    assert concurrence(rho) == pytest.approx(0.0, abs=1e-7)


@pytest.mark.parametrize("p", [0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0])
def test_werner_concurrence(p):
    """Assert Werner states have C = max(0, (3p - 1) / 2)."""
    assert concurrence(_werner(p)) == pytest.approx(max(0.0, (3.0 * p - 1.0) / 2.0), abs=1e-7)


@pytest.mark.parametrize("p", [0.0, 0.25, 0.5, 1.0])
def test_werner_fidelity(p):
    """Assert Werner states have N_F = 3p and F = (1 + p) / 2."""
    norm, fidelity = teleportation_fidelity(_werner(p))
    assert norm == pytest.approx(3.0 * p)
    assert fidelity == pytest.approx((1.0 + p) / 2.0)


def test_concurrence_local_unitary_invariance(rng):
    """Assert local unitaries leave the concurrence unchanged."""
    for index in range(100):
        rho = random_density(4, rng, rank=1 + index % 4)
        first, second = (unitary_group.rvs(2, random_state=rng) for _ in range(2))
        local = np.kron(first, second)
        rotated = local.dot(rho).dot(local.conj().T)
        assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-9)


def test_concurrence_needs_two_qubits():
    """Assert concurrence refuses a qutrit state."""
    with pytest.raises(ValidationError):
        concurrence(np.eye(3) / 3)


def test_record_classical_threshold():
    """Assert a record compares its fidelity with 2/3."""
    assert MeasureRecord(0.0, fidelity=0.7).beats_classical
    assert not MeasureRecord(0.0, fidelity=CLASSICAL_FIDELITY).beats_classical
    assert MeasureRecord(0.0).beats_classical is None


def test_record_unknown_measure():
    """Assert a record refuses unknown measures."""
    with pytest.raises(TypeError):
        MeasureRecord(0.0, entropy=1.0)


def test_record_to_dict():
    """Assert unset measures serialize as None."""
    data = MeasureRecord(1.5, mana=0.2).to_dict()
    assert data["t"] == 1.5
    assert data["mana"] == 0.2
    assert data["concurrence"] is None


@pytest.mark.parametrize("label", ["phi+", "psi-"])
def test_spin_flip_keeps_bell_states(label):
    """Assert Bell states are invariant under the spin flip."""
    rho = bell_state(label)
    np.testing.assert_allclose(spin_flip(rho), rho, atol=1e-12)


def test_spin_flip_of_product_state():
    """Assert the spin flip maps |00> to |11>."""
    rho = np.zeros((4, 4))
    rho[0, 0] = 1.0
    np.testing.assert_allclose(np.diag(spin_flip(rho)).real, [0.0, 0.0, 0.0, 1.0], atol=1e-12)

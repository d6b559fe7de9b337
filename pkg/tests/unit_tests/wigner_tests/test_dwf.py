"""
Test cases for discrete Wigner functions and derived quantities
"""
import numpy as np
import pytest

from discrete_wigner.base._utils import projector
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.states.bloch import maximally_mixed, random_density, random_hermitian
from discrete_wigner.wigner.dwf import (
    DwfTable,
    dwf,
    line_sum_check,
    mana,
    negativity,
    operator_expectations,
    reconstruct,
    robustness,
    sum_negativity,
)
from discrete_wigner.wigner.net import default_operators

from ... import constants


def test_table_is_normalized(ops, rng):
    """Assert the table of a density matrix sums to 1."""
    for _ in range(5):
        table = dwf(random_density(ops.dimension, rng), ops)
        assert table.total() == pytest.approx(1.0, abs=1e-12)


def test_round_trip(ops, rng):
    """Assert a unit-trace Hermitian matrix is rebuilt from its table."""
    matrix = random_hermitian(ops.dimension, rng)
    np.testing.assert_allclose(reconstruct(dwf(matrix, ops), ops), matrix, atol=1e-10)


def test_line_sums(net, ops, rng):
    """Assert the sum over a line is the probability of its basis vector."""
    rho = random_density(net.dimension, rng)
    report = line_sum_check(dwf(rho, ops), net, rho)
    assert report.ok
    assert len(report.get("line_sums").data["lines"]) == net.dimension * (net.dimension + 1)


def test_maximally_mixed_is_uniform(ops):
    """Assert the maximally mixed state has a flat table."""
    table = dwf(maximally_mixed(ops.dimension), ops)
    np.testing.assert_allclose(table.entries, np.full_like(table.entries, ops.dimension ** -2.0))
    assert mana(table) == pytest.approx(0.0, abs=1e-12)
    assert sum_negativity(table) == 0.0


def test_computational_states_are_not_negative(ops):
    """Assert computational basis states have a non-negative table."""
    for vector in np.eye(ops.dimension):
        rho = projector(vector)
        assert negativity(rho, ops) == 0.0
        assert dwf(rho, ops).minimum() >= -1e-12


def test_operator_expectations(ops, rng):
    """Assert expectations are d times the table."""
    rho = random_density(ops.dimension, rng)
    np.testing.assert_allclose(
        operator_expectations(rho, ops), ops.dimension * dwf(rho, ops).entries
    )


def test_dimension_mismatch():
    """Assert a state of the wrong size is refused."""
    with pytest.raises(ValidationError):
        dwf(np.eye(3) / 3, default_operators(2))
    with pytest.raises(ValidationError):
        reconstruct(DwfTable(np.full((3, 3), 1.0 / 9)), default_operators(2))


def test_table_validation():
    """Assert tables must be square and real."""
    with pytest.raises(ValidationError):
        DwfTable(np.zeros((2, 3)))
    with pytest.raises(ValidationError):
        DwfTable(np.full((2, 2), 0.25 + 0.1j))


def test_table_drops_negligible_imaginary_part():
    """Assert round-off imaginary parts are discarded."""
    table = DwfTable(np.full((2, 2), 0.25 + 1e-15j))
    assert table.entries.dtype == float


def test_column_names_are_one_based():
    """Assert the flattened entries are named W_q_p from 1."""
    table = DwfTable(np.arange(9.0).reshape(3, 3))
    assert table.column_names()[5] == "W_2_3"
    assert table.flatten()[5] == table[1, 2]


def test_mana_identity():
    """Assert mana is ln(2 Sn + 1) on a normalized table."""
    table = DwfTable([[-0.1, 0.3], [0.4, 0.4]])
    assert mana(table) == pytest.approx(np.log(1.2))
    assert mana(table) == pytest.approx(np.log(2 * sum_negativity(table) + 1))


@pytest.mark.parametrize(
    "neg,dimension,expected",
    [
        (constants.QUBIT_NS1_NEGATIVITY, 2, constants.QUBIT_NS1_ROBUSTNESS),
        (1.0, 3, constants.QUTRIT_NS1_ROBUSTNESS),
        (0.0, 2, 0.0),
    ],
)
def test_robustness(neg, dimension, expected):
    """Assert the depolarizing robustness formula."""
    assert robustness(neg, dimension) == pytest.approx(expected)


def test_robustness_qubit_value():
    """Assert the qubit NS1 robustness value."""
    assert robustness(constants.QUBIT_NS1_NEGATIVITY, 2) == pytest.approx(0.5941726, abs=1e-7)


def test_robustness_refuses_composite_dimension():
    """Assert robustness is not defined for d=4."""
    with pytest.raises(ValidationError):
        robustness(0.5, 4)


def test_robustness_refuses_negative():
    """Assert a negative negativity is refused."""
    with pytest.raises(ValidationError):
        robustness(-0.1, 2)

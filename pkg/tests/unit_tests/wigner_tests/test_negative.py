"""
Test cases for negative quantum states
"""
import mock
import numpy as np
import pytest

from discrete_wigner.base.errors import NegativeStateError, ValidationError
from discrete_wigner.base.mubs import mub_set
from discrete_wigner.base.phase_space import build_phase_space
from discrete_wigner.wigner.dwf import dwf, mana, negativity, robustness, sum_negativity
from discrete_wigner.wigner.negative import (
    degenerate_ranks,
    negative_candidates,
    negative_state,
    search_non_degenerate_net,
)
from discrete_wigner.wigner.net import (
    NetAssignment,
    build_quantum_net,
    default_operators,
    phase_point_operators,
)

from ... import constants


def test_qubit_ns1():
    """Assert the qubit NS1 sits at the origin with eigenvalue (1 - √3) / 2."""
    ops = default_operators(2)
    result = negative_state(ops, 1)
    assert tuple(result.point) == (0, 0)
    assert result.eigenvalue == pytest.approx(constants.QUBIT_OPERATOR_SPECTRUM[0])
    assert not result.degenerate
    assert negativity(result.state, ops) == pytest.approx(constants.QUBIT_NS1_NEGATIVITY)


def test_qubit_has_one_rank():
    """Assert every qubit operator shares the same negative level, so NS2 does not exist."""
    with pytest.raises(NegativeStateError) as error:
        negative_state(default_operators(2), 2)
    assert error.value.available == 1


def test_qutrit_ns1_table():
    """Assert the qutrit NS1 has one entry at -1/3 and eight entries at 1/6."""
    ops = default_operators(3)
    result = negative_state(ops, 1)
    assert result.eigenvalue == pytest.approx(constants.QUTRIT_NS1_EIGENVALUE)
    entries = np.sort(dwf(result.state, ops).flatten())
    np.testing.assert_allclose(entries, [-1.0 / 3] + [1.0 / 6] * 8, atol=1e-10)


def test_qutrit_ns1_measures():
    """Assert sum negativity, mana and robustness of the qutrit NS1."""
    ops = default_operators(3)
    state = negative_state(ops, 1).state
    table = dwf(state, ops)
    assert sum_negativity(table) == pytest.approx(constants.QUTRIT_NS1_SUM_NEGATIVITY)
    assert mana(table) == pytest.approx(constants.QUTRIT_NS1_MANA)
    neg = negativity(state, ops)
    assert robustness(neg, 3) == pytest.approx(constants.QUTRIT_NS1_ROBUSTNESS)


def test_qutrit_ns2():
    """Assert the qutrit NS2 eigenvalue is (1 - √5) / 2."""
    result = negative_state(default_operators(3), 2)
    assert result.eigenvalue == pytest.approx(constants.QUTRIT_NS2_EIGENVALUE)


def test_two_qubit_ranks():
    """Assert two qubits have two degenerate negative states and no third one."""
    ops = default_operators(4)
    first = negative_state(ops, 1)
    second = negative_state(ops, 2)
    assert first.eigenvalue == pytest.approx(-0.5)
    assert second.eigenvalue == pytest.approx(-0.5)
    assert first.degenerate and second.degenerate
    assert abs(np.vdot(first.vector, second.vector)) < 1e-10
    with pytest.raises(NegativeStateError):
        negative_state(ops, 3)


@pytest.mark.parametrize("dimension,expected", [(2, []), (3, []), (4, [(1, 2)])])
def test_degenerate_ranks(dimension, expected):
    """Assert only the two-qubit default net has tied negative levels."""
    assert degenerate_ranks(negative_candidates(default_operators(dimension))) == expected


def test_non_degenerate_two_qubit_net(rng):
    """Assert some two-qubit net splits the tied level into strictly increasing ranks."""
    space = build_phase_space(4)
    mubs = mub_set(4)
    found = search_non_degenerate_net(space, mubs, rng)
    assert found is not None
    assignment, candidates = found
    assert not assignment.is_identity
    values = [candidate[1] for candidate in candidates]
    assert len(values) >= 2
    assert all(first < second for first, second in zip(values, values[1:]))
    assert values[-1] < 0
    ops = phase_point_operators(build_quantum_net(space, mubs, assignment))
    assert negative_state(ops, 2).eigenvalue > negative_state(ops, 1).eigenvalue


def test_search_gives_up():
    """Assert the search reports failure when every draw is the default net."""
    space = build_phase_space(4)
    with mock.patch.object(NetAssignment, "random", return_value=NetAssignment.identity(4)):
        assert search_non_degenerate_net(space, mub_set(4), None, tries=3) is None


def test_candidates_are_sorted(ops):
    """Assert ranks are ordered by eigenvalue, most negative first."""
    values = [candidate[1] for candidate in negative_candidates(ops)]
    assert values
    assert values == sorted(values)
    assert values[-1] < 0


def test_candidates_are_reproducible(ops):
    """Assert two runs return the same states."""
    first = negative_state(ops, 1)
    second = negative_state(ops, 1)
    np.testing.assert_array_equal(first.vector, second.vector)


def test_state_is_an_eigenvector(ops):
    """Assert NS1 is an eigenvector of the operator at its point."""
    result = negative_state(ops, 1)
    operator = ops[result.point]
    np.testing.assert_allclose(
        operator.dot(result.vector), result.eigenvalue * result.vector, atol=1e-10
    )
    assert np.trace(result.state).real == pytest.approx(1.0)


@pytest.mark.parametrize("rank", [0, -1, 1.5, True, "1"])
def test_invalid_rank(rank):
    """Assert the rank must be a positive integer."""
    with pytest.raises(ValidationError):
        negative_state(default_operators(2), rank)


def test_to_dict():
    """Assert a result serializes complex values as pairs."""
    data = negative_state(default_operators(2), 1).to_dict()
    assert data["rank"] == 1
    assert data["point"] == [0, 0]
    assert len(data["vector"]) == 2
    assert len(data["state"][0][0]) == 2

"""
Test cases for discrete_wigner.base._utils
"""
import numpy as np
import pytest

from discrete_wigner.base._utils import (
    as_square_matrix,
    eigh_canonical,
    freeze,
    handle_arguments,
    is_unitary,
    projector,
)
from discrete_wigner.base.errors import ConfigError, ValidationError


@handle_arguments(steps="points", t_stop="stop")
def _collect(**kwargs):
    return kwargs


def test_handle_arguments_alias():
    """Assert a short key is renamed to its long spelling."""
    assert _collect(points=3, stop=1.0) == {"steps": 3, "t_stop": 1.0}


def test_handle_arguments_long():
    """Assert the long spelling is kept as is."""
    assert _collect(steps=3) == {"steps": 3}


def test_handle_arguments_both():
    """Assert setting a key and its alias raises."""
    with pytest.raises(ConfigError) as error:
        _collect(steps=3, points=4)
    assert error.value.key == "points"


def test_handle_arguments_unknown():
    """Assert an unknown key raises with the key name."""
    with pytest.raises(ConfigError) as error:
        _collect(steps=3, speed=4)
    assert error.value.key == "speed"
    assert "Unknown key: speed" in str(error.value)


def test_freeze():
    """Assert a frozen array is a read-only copy."""
    source = np.zeros(2)
    frozen = freeze(source)
    source[0] = 1.0
    assert frozen[0] == 0.0
    with pytest.raises(ValueError):
        frozen[0] = 1.0


def test_projector_normalizes():
    """Assert the projector of an unnormalized vector has unit trace."""
    np.testing.assert_allclose(projector([1, 1]), np.full((2, 2), 0.5))


def test_as_square_matrix_shape():
    """Assert non-square or wrongly sized matrices are refused."""
    with pytest.raises(ValidationError):
        as_square_matrix(np.ones((2, 3)))
    with pytest.raises(ValidationError):
        as_square_matrix(np.eye(2), dimension=3)


def test_is_unitary():
    """Assert the Hadamard gate is unitary and a projector is not."""
    assert is_unitary(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
    assert not is_unitary(np.diag([1.0, 0.0]))


def test_eigh_canonical_degenerate():
    """Assert a degenerate level gets the canonical basis of its eigenspace."""
    values, vectors, degenerate = eigh_canonical(np.diag([2.0, 1.0, 1.0]))
    np.testing.assert_allclose(values, [1.0, 1.0, 2.0])
    assert degenerate.tolist() == [True, True, False]
    np.testing.assert_allclose(vectors[:, 0], [0, 1, 0], atol=1e-12)
    np.testing.assert_allclose(vectors[:, 1], [0, 0, 1], atol=1e-12)


def test_eigh_canonical_phase():
    """Assert the first non-zero component of every eigenvector is real and positive."""
    matrix = np.array([[0, -1j], [1j, 0]])
    _, vectors, degenerate = eigh_canonical(matrix)
    assert not degenerate.any()
    for index in range(2):
        assert vectors[0, index].real > 0
        assert abs(vectors[0, index].imag) < 1e-12


def test_eigh_canonical_rotated_eigenspace():
    """Assert a degenerate eigenspace gets the projections of the computational vectors."""
    inner = np.array([0, 1, 1j]) / np.sqrt(2)
    level = np.diag([1.0, 0.0, 0.0]) + np.outer(inner, inner.conj())
    matrix = level + 2.0 * (np.eye(3) - level)
    values, vectors, degenerate = eigh_canonical(matrix)
    np.testing.assert_allclose(values, [1.0, 1.0, 2.0], atol=1e-12)
    assert degenerate.tolist() == [True, True, False]
    np.testing.assert_allclose(vectors[:, 0], [1, 0, 0], atol=1e-10)
    np.testing.assert_allclose(vectors[:, 1], inner, atol=1e-10)

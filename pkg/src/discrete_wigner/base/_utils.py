"""
Various utility functions
"""
import functools
import logging

import numpy as np
from scipy import linalg

from discrete_wigner.base import constants
from discrete_wigner.base.errors import ConfigError, ValidationError

_LOG = logging.getLogger(__name__)


def handle_arguments(**mapping):
    """
    Decorator that will remap keyword arguments.
    Useful to accept both the long and the short spelling of a config key.
    ex: `SweepConfig.from_dict({"t_start": 0})` and `{"start": 0}` are equivalent.

    :param mapping: A mapping of argument short name by their long name.
    :type mapping: dict[str, str]
    :return: A decorated function
    :rtype: callable
    """

    def _deco(func):
        @functools.wraps(func)
        def _wrapper(*args, **kwargs):
            kwargs_conformed = {}
            for attr, alias in mapping.items():
                if attr in kwargs:
                    kwargs_conformed[attr] = kwargs.pop(attr)
                if alias in kwargs:
                    if attr in kwargs_conformed:
                        raise ConfigError(
                            "Both %r and its alias %r are set" % (attr, alias), key=alias
                        )
                    kwargs_conformed[attr] = kwargs.pop(alias)

            if kwargs:
                keys = sorted(kwargs.keys())
                raise ConfigError(
                    "Unknown key{s}: {keys}".format(
                        s="s" if len(keys) > 1 else "", keys=", ".join(keys)
                    ),
                    key=keys[0],
                )

            return func(*args, **kwargs_conformed)

        return _wrapper

    return _deco


def freeze(array):
    """
    Return a read-only copy of an array.

    :param array: Any array-like value.
    :return: A non-writeable numpy array.
    :rtype: numpy.ndarray
    """
    result = np.array(array)
    result.flags.writeable = False
    return result


def dagger(matrix):
    """
    :param numpy.ndarray matrix: A complex matrix.
    :return: The conjugate transpose of the matrix.
    :rtype: numpy.ndarray
    """
    return np.conj(np.swapaxes(matrix, -1, -2))


def projector(vector):
    """
    Build the rank-1 projector onto a (not necessarily normalized) vector.

    >>> projector([1, 0]).real.tolist()
    [[1.0, 0.0], [0.0, 0.0]]

    :param vector: A complex vector.
    :return: The projector |v><v| / <v|v>.
    :rtype: numpy.ndarray
    """
    vector = np.asarray(vector, dtype=complex)
    return np.outer(vector, np.conj(vector)) / np.vdot(vector, vector).real


def hermiticity_deviation(matrix):
    """
    :param numpy.ndarray matrix: A square matrix.
    :return: The largest entrywise deviation from hermiticity.
    :rtype: float
    """
    return float(np.max(np.abs(matrix - dagger(matrix)))) if matrix.size else 0.0


def as_square_matrix(matrix, dimension=None, name="matrix"):
    """
    Coerce a value to a complex square matrix, optionally of a known size.

    :param matrix: An array-like value.
    :param int dimension: The expected number of rows, if known.
    :param str name: Name used in error messages.
    :return: A complex square matrix.
    :rtype: numpy.ndarray
    :raise ValidationError: If the shape is not the one expected.
    """
    result = np.asarray(matrix, dtype=complex)
    if result.ndim != 2 or result.shape[0] != result.shape[1]:
        raise ValidationError("Expected a square %s, got shape %r" % (name, result.shape))
    if dimension is not None and result.shape[0] != dimension:
        raise ValidationError(
            "Expected a %dx%d %s, got shape %r"
            % (dimension, dimension, name, result.shape)
        )
    return result


def is_unitary(matrix, tol=constants.TOL_UNIT):
    """
    :param numpy.ndarray matrix: A square matrix.
    :param float tol: Entrywise tolerance on U U^dagger = I.
    :return: True if the matrix is unitary to the given tolerance.
    :rtype: bool
    """
    identity = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix.dot(dagger(matrix)) - identity)) <= tol)


def _fix_phase(vector):
    """
    Rotate a vector so that its first non-negligible component is real and positive.
    """
    for component in vector:
        if abs(component) > 1e-8:
            return vector * (abs(component) / component)
    return vector


def _canonical_subspace_basis(vectors):
    """
    Replace an orthonormal basis of a subspace by the Gram-Schmidt basis
    obtained from projecting the computational basis vectors, in order.
    The result only depends on the subspace.
    """
    size, rank = vectors.shape
    proj = vectors.dot(dagger(vectors))
    result = []
    for index in range(size):
        candidate = proj[:, index].copy()
        for accepted in result:
            candidate = candidate - np.vdot(accepted, candidate) * accepted
        norm = np.linalg.norm(candidate)
        if norm > 1e-8:
            result.append(candidate / norm)
        if len(result) == rank:
            break
    return np.array(result).T


def eigh_canonical(matrix, gap=constants.TOL_DEGENERATE):
    """
    Hermitian eigendecomposition with reproducible eigenvectors.

    Eigenvalues are sorted ascending. Eigenvectors of degenerate levels
    (gap below `gap`) are replaced by a canonical orthonormal basis of their
    eigenspace and every eigenvector has its global phase fixed.

    :param numpy.ndarray matrix: A Hermitian matrix.
    :param float gap: Eigenvalue distance below which two levels are merged.
    :return: The eigenvalues, eigenvectors as columns and a per-eigenvalue degeneracy flag.
    :rtype: tuple(numpy.ndarray, numpy.ndarray, numpy.ndarray)
    """
    values, vectors = linalg.eigh(matrix)
    vectors = np.array(vectors, dtype=complex)
    degenerate = np.zeros(len(values), dtype=bool)

    start = 0
    while start < len(values):
        stop = start + 1
        while stop < len(values) and values[stop] - values[stop - 1] < gap:
            stop += 1
        if stop - start > 1:
            _LOG.debug(
                "Degenerate eigenvalue %r with multiplicity %d", values[start], stop - start
            )
            vectors[:, start:stop] = _canonical_subspace_basis(vectors[:, start:stop])
            degenerate[start:stop] = True
        start = stop

    for index in range(vectors.shape[1]):
        vectors[:, index] = _fix_phase(vectors[:, index])
    return values, vectors, degenerate

"""
Tabulated mutually unbiased bases for d = 2, 3 and 4.

Vectors keep the printed order inside each basis: the quantum net pairs the
j-th line of a striation with the j-th vector of its basis.
"""
import functools
import itertools
import logging

import numpy as np
from scipy import linalg

from discrete_wigner.base import constants
from discrete_wigner.base._utils import freeze
from discrete_wigner.base.errors import ValidationError
from discrete_wigner.base.report import Report

_LOG = logging.getLogger(__name__)

_W = np.exp(2j * np.pi / 3)
_W2 = _W ** 2

# Raw tables, one list of unnormalized vectors per basis, with their norm.
_TABLES = {
    2: (
        np.sqrt(2.0),
        [
            [[0, np.sqrt(2.0)], [np.sqrt(2.0), 0]],
            [[1, 1], [1, -1]],
            [[1, 1j], [1, -1j]],
        ],
    ),
    3: (
        np.sqrt(3.0),
        [
            [[np.sqrt(3.0), 0, 0], [0, np.sqrt(3.0), 0], [0, 0, np.sqrt(3.0)]],
            [[1, 1, 1], [1, _W, _W2], [1, _W2, _W]],
            [[1, _W2, _W2], [1, 1, _W], [1, _W, 1]],
            [[1, _W, _W], [1, _W2, 1], [1, 1, _W2]],
        ],
    ),
    4: (
        2.0,
        [
            [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]],
            [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]],
            [[1, -1j, 1j, 1], [1, 1j, 1j, -1], [1, -1j, -1j, -1], [1, 1j, -1j, 1]],
            [[1, 1, 1j, -1j], [1, -1, 1j, 1j], [1, 1, -1j, 1j], [1, -1, -1j, -1j]],
            [[1, -1j, 1, 1j], [1, 1j, 1, -1j], [1, -1j, -1j, -1j], [1, 1j, -1, 1j]],
        ],
    ),
}

# (basis index, vector index) of printed entries that are not orthogonal to
# their neighbours and get replaced by the completion of their basis.
_KNOWN_MISPRINTS = {4: ((4, 2),)}


class Basis(object):
    """
    An ordered orthonormal basis of C^d.
    """

    def __init__(self, vectors):
        """
        :param vectors: The d basis vectors, one per row.
        :type vectors: numpy.ndarray
        """
        vectors = np.asarray(vectors, dtype=complex)
        if vectors.ndim != 2 or vectors.shape[0] != vectors.shape[1]:
            raise ValidationError(
                "A basis needs d vectors of size d, got shape %r" % (vectors.shape,)
            )
        self._vectors = freeze(vectors)

    def __repr__(self):
        return "<Basis d=%d>" % self.dimension

    def __len__(self):
        return self._vectors.shape[0]

    def __getitem__(self, index):
        return self._vectors[index]

    def __iter__(self):
        return iter(self._vectors)

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self._vectors.shape[1]

    @property
    def vectors(self):
        """
        :return: The basis vectors, one per row.
        :rtype: numpy.ndarray
        """
        return self._vectors

    def projectors(self):
        """
        :return: The d rank-1 projectors |v><v|, stacked.
        :rtype: numpy.ndarray
        """
        return np.einsum("ji,jk->jik", self._vectors, np.conj(self._vectors))


class MubSet(object):
    """
    The d + 1 bases attached to the striations of a phase space.
    """

    def __init__(self, bases, substitutions=None):
        """
        :param bases: The d + 1 bases, in striation order.
        :type bases: list(Basis)
        :param substitutions: Printed entries replaced at build time, as
            dicts with ``basis``, ``vector``, ``printed`` and ``used`` keys.
        :type substitutions: list(dict)
        """
        self.bases = tuple(bases)
        self.substitutions = tuple(substitutions or ())
        dimensions = set(basis.dimension for basis in self.bases)
        if len(dimensions) != 1:
            raise ValidationError("Bases of mixed dimensions %r" % sorted(dimensions))

    def __repr__(self):
        return "<MubSet d=%d>" % self.dimension

    def __len__(self):
        return len(self.bases)

    def __getitem__(self, index):
        return self.bases[index]

    def __iter__(self):
        return iter(self.bases)

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self.bases[0].dimension

    def as_array(self):
        """
        :return: Every vector as a (d + 1, d, d) array indexed by basis, vector, component.
        :rtype: numpy.ndarray
        """
        return np.array([basis.vectors for basis in self.bases])


def _complete_basis(vectors, missing):
    """
    Find the unit vector orthogonal to every other vector of a basis.
    The phase is fixed so that the first component is real and positive.
    """
    others = np.array([vector for index, vector in enumerate(vectors) if index != missing])
    kernel = linalg.null_space(np.conj(others))
    if kernel.shape[1] != 1:
        raise ValidationError(
            "Cannot complete basis: orthogonal complement has dimension %d" % kernel.shape[1]
        )
    vector = kernel[:, 0]
    pivot = vector[np.argmax(np.abs(vector) > 1e-8)]
    return vector * (abs(pivot) / pivot)


@functools.lru_cache(maxsize=None)
def mub_set(dimension):
    """
    Build the tabulated set of mutually unbiased bases of a dimension.

    >>> mub_set(2)[1][0].real.round(4).tolist()
    [0.7071, 0.7071]

    :param int dimension: One of 2, 3 or 4.
    :return: The d + 1 bases in striation order.
    :rtype: MubSet
    :raise ValidationError: If the dimension is not supported.
    """
    try:
        norm, raw = _TABLES[dimension]
    except (KeyError, TypeError):
        raise ValidationError(
            "Unsupported dimension %r, expected one of %r"
            % (dimension, constants.SUPPORTED_DIMENSIONS)
        )

    table = np.array(raw, dtype=complex) / norm
    substitutions = []
    for basis_index, vector_index in _KNOWN_MISPRINTS.get(dimension, ()):
        printed = table[basis_index, vector_index].copy()
        used = _complete_basis(table[basis_index], vector_index)
        table[basis_index, vector_index] = used
        substitutions.append(
            {"basis": basis_index, "vector": vector_index, "printed": printed, "used": used}
        )
        _LOG.warning(
            "d=%d basis %d vector %d is not orthogonal to its basis, replaced %s by %s",
            dimension,
            basis_index + 1,
            vector_index + 1,
            np.round(printed * 2, 6).tolist(),
            np.round(used * 2, 6).tolist(),
        )

    return MubSet([Basis(vectors) for vectors in table], substitutions=substitutions)


def check_unbiased(mubs, tol=constants.TOL_UNIT):
    """
    Check normalization, orthonormality, completeness and mutual unbiasedness.

    :param MubSet mubs: The bases to check.
    :param float tol: The tolerance applied to every check.
    :return: One check per property, residuals are max absolute deviations.
    :rtype: Report
    """
    dimension = mubs.dimension
    report = Report("mub.d%d" % dimension)
    identity = np.eye(dimension)

    norms = [abs(np.linalg.norm(vector) - 1.0) for basis in mubs for vector in basis]
    report.add_threshold("norm", max(norms), tol, detail="unit-norm vectors")

    orthonormal = max(
        np.max(np.abs(basis.vectors.conj().dot(basis.vectors.T) - identity)) for basis in mubs
    )
    report.add_threshold("orthonormal", orthonormal, tol, detail="within-basis overlaps")

    complete = max(np.max(np.abs(basis.projectors().sum(axis=0) - identity)) for basis in mubs)
    report.add_threshold("complete", complete, tol, detail="projectors resolve the identity")

    worst = 0.0
    worst_pair = None
    for (i, first), (k, second) in itertools.combinations(enumerate(mubs), 2):
        overlaps = np.abs(first.vectors.conj().dot(second.vectors.T)) ** 2
        deviation = float(np.max(np.abs(overlaps - 1.0 / dimension)))
        if deviation > worst:
            worst, worst_pair = deviation, (i, k)
    report.add_threshold(
        "unbiased",
        worst,
        tol,
        detail="cross-basis overlaps equal 1/%d" % dimension,
        data={"worst_pair": worst_pair},
    )

    for substitution in mubs.substitutions:
        report.add(
            "substitution.b%d.v%d" % (substitution["basis"] + 1, substitution["vector"] + 1),
            constants.Status.warning,
            detail="printed %s replaced by %s"
            % (
                np.round(substitution["printed"], 6).tolist(),
                np.round(substitution["used"], 6).tolist(),
            ),
        )
    return report

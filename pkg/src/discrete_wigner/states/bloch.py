"""
Density matrices from Bloch parameters and back.

qubit   rho = (I + a.σ) / 2
qutrit  rho = (I + √3 n.λ) / 3, λ the standard Gell-Mann matrices
2 qubits rho = (I⊗I + a.σ⊗I + I⊗s.σ + Σ t_ij σ_i⊗σ_j) / 4
"""
import collections
import itertools
import logging

import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import as_square_matrix, dagger, hermiticity_deviation, projector
from discrete_wigner.base.errors import ValidationError

_LOG = logging.getLogger(__name__)

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def _gell_mann():
    def _pair(first, second):
        symmetric = np.zeros((3, 3), dtype=complex)
        symmetric[first, second] = symmetric[second, first] = 1
        antisymmetric = np.zeros((3, 3), dtype=complex)
        antisymmetric[first, second] = -1j
        antisymmetric[second, first] = 1j
        return symmetric, antisymmetric

    lambda_1, lambda_2 = _pair(0, 1)
    lambda_4, lambda_5 = _pair(0, 2)
    lambda_6, lambda_7 = _pair(1, 2)
    lambda_3 = np.diag([1, -1, 0]).astype(complex)
    lambda_8 = np.diag([1, 1, -2]).astype(complex) / np.sqrt(3.0)
    return (lambda_1, lambda_2, lambda_3, lambda_4, lambda_5, lambda_6, lambda_7, lambda_8)


GELL_MANN = _gell_mann()

QubitBloch = collections.namedtuple("QubitBloch", ("a1", "a2", "a3"))
QutritBloch = collections.namedtuple("QutritBloch", tuple("n%d" % index for index in range(1, 9)))


class TwoQubitBloch(object):
    """
    Local Bloch vectors and correlation matrix of a two-qubit state.
    """

    def __init__(self, a, s, correlations):
        """
        :param a: The 3 Bloch components of the first qubit.
        :param s: The 3 Bloch components of the second qubit.
        :param correlations: The 3 x 3 matrix t_ij.
        """
        self.a = np.asarray(a, dtype=float).reshape(3)
        self.s = np.asarray(s, dtype=float).reshape(3)
        self.correlations = np.asarray(correlations, dtype=float).reshape(3, 3)

    def __repr__(self):
        return "<TwoQubitBloch a=%s s=%s>" % (self.a.tolist(), self.s.tolist())

    def flatten(self):
        """
        :return: The 15 parameters a1..a3, s1..s3, t11..t33.
        :rtype: list(float)
        """
        return self.a.tolist() + self.s.tolist() + self.correlations.ravel().tolist()

    def to_dict(self):
        """
        :rtype: dict
        """
        return {"a": self.a.tolist(), "s": self.s.tolist(), "t": self.correlations.tolist()}


def minimum_eigenvalue(rho):
    """
    :param numpy.ndarray rho: A Hermitian matrix.
    :rtype: float
    """
    return float(np.linalg.eigvalsh((rho + dagger(rho)) / 2.0)[0])


def check_density(rho, tol=constants.TOL_STATE_PSD, dimension=None):
    """
    Validate a density matrix.

    :param rho: The candidate matrix.
    :param float tol: Largest accepted negative eigenvalue, in absolute value.
    :param int dimension: The expected dimension, if known.
    :return: The matrix as a complex array.
    :rtype: numpy.ndarray
    :raise ValidationError: If the matrix is not Hermitian, unit-trace and PSD.
    """
    rho = as_square_matrix(rho, dimension=dimension, name="density matrix")
    if hermiticity_deviation(rho) > constants.TOL_OPERATOR:
        raise ValidationError("Density matrix is not Hermitian")
    trace = np.trace(rho).real
    if abs(trace - 1.0) > constants.TOL_OPERATOR:
        raise ValidationError("Density matrix trace is %r, expected 1" % trace)
    lowest = minimum_eigenvalue(rho)
    if lowest < -tol:
        raise ValidationError(
            "Density matrix is not positive semi-definite, minimum eigenvalue %r" % lowest
        )
    return rho


def purity(rho):
    """
    :rtype: float
    """
    rho = np.asarray(rho)
    return float(np.real(np.trace(rho.dot(rho))))


def qubit_from_bloch(a, tol=constants.TOL_STATE_PSD):
    """
    >>> qubit_from_bloch([0, 0, 1]).real.tolist()
    [[1.0, 0.0], [0.0, 0.0]]

    :param a: The Bloch vector (a1, a2, a3).
    :param float tol: Slack accepted on |a| <= 1.
    :rtype: numpy.ndarray
    :raise ValidationError: If |a| > 1 + tol.
    """
    a = np.asarray(a, dtype=float).ravel()
    if a.shape != (3,):
        raise ValidationError("A qubit Bloch vector has 3 components, got %d" % a.size)
    norm = float(np.linalg.norm(a))
    if norm > 1.0 + tol:
        raise ValidationError("Qubit Bloch vector norm %r exceeds 1" % norm)
    return (IDENTITY_2 + np.einsum("k,kij->ij", a, PAULIS)) / 2.0


def qutrit_from_bloch(n, tol=constants.TOL_STATE_PSD):
    """
    :param n: The Gell-Mann vector (n1, ..., n8).
    :param float tol: Largest accepted negative eigenvalue, in absolute value.
    :rtype: numpy.ndarray
    :raise ValidationError: If the resulting matrix is not PSD.
    """
    n = np.asarray(n, dtype=float).ravel()
    if n.shape != (8,):
        raise ValidationError("A qutrit Bloch vector has 8 components, got %d" % n.size)
    rho = (np.eye(3) + np.sqrt(3.0) * np.einsum("k,kij->ij", n, GELL_MANN)) / 3.0
    return check_density(rho, tol=tol)


def _two_qubit_operators():
    singles = (IDENTITY_2,) + PAULIS
    return {
        (first, second): np.kron(singles[first], singles[second])
        for first, second in itertools.product(range(4), repeat=2)
    }


_TWO_QUBIT_OPERATORS = _two_qubit_operators()


def two_qubit_from_bloch(a, s, correlations, tol=constants.TOL_STATE_PSD):
    """
    :param a: The first qubit Bloch vector.
    :param s: The second qubit Bloch vector.
    :param correlations: The 3 x 3 correlation matrix t_ij.
    :param float tol: Largest accepted negative eigenvalue, in absolute value.
    :rtype: numpy.ndarray
    :raise ValidationError: If the resulting matrix is not PSD.
    """
    params = TwoQubitBloch(a, s, correlations)
    rho = _TWO_QUBIT_OPERATORS[0, 0].copy()
    for index in range(3):
        rho += params.a[index] * _TWO_QUBIT_OPERATORS[index + 1, 0]
        rho += params.s[index] * _TWO_QUBIT_OPERATORS[0, index + 1]
    for first, second in itertools.product(range(3), repeat=2):
        rho += params.correlations[first, second] * _TWO_QUBIT_OPERATORS[first + 1, second + 1]
    return check_density(rho / 4.0, tol=tol)


def density_from_vector(dimension, values, tol=constants.TOL_STATE_PSD):
    """
    Build a density matrix from a flat list of 3, 8 or 15 Bloch parameters.

    :param int dimension: 2, 3 or 4.
    :param values: The flat parameters.
    :param float tol: Largest accepted negative eigenvalue, in absolute value.
    :rtype: numpy.ndarray
    :raise ValidationError: If the count does not match the dimension.
    """
    values = np.asarray(values, dtype=float).ravel()
    expected = {2: 3, 3: 8, 4: 15}.get(dimension)
    if expected is None:
        raise ValidationError("Unsupported dimension %r" % (dimension,))
    if values.size != expected:
        raise ValidationError(
            "Expected %d Bloch parameters for d=%d, got %d" % (expected, dimension, values.size)
        )
    if dimension == 2:
        return qubit_from_bloch(values, tol=tol)
    if dimension == 3:
        return qutrit_from_bloch(values, tol=tol)
    return two_qubit_from_bloch(values[:3], values[3:6], values[6:], tol=tol)


def bloch_from_density(rho):
    """
    Invert the Bloch parametrization matching the matrix size.

    :param rho: A 2 x 2, 3 x 3 or 4 x 4 Hermitian matrix.
    :rtype: QubitBloch or QutritBloch or TwoQubitBloch
    :raise ValidationError: If the size is not supported.
    """
    rho = as_square_matrix(rho, name="density matrix")
    dimension = rho.shape[0]

    def _expect(operator):
        return float(np.real(np.trace(rho.dot(operator))))

    if dimension == 2:
        return QubitBloch(*[_expect(pauli) for pauli in PAULIS])
    if dimension == 3:
        return QutritBloch(*[np.sqrt(3.0) / 2.0 * _expect(matrix) for matrix in GELL_MANN])
    if dimension == 4:
        return TwoQubitBloch(
            [_expect(_TWO_QUBIT_OPERATORS[index, 0]) for index in range(1, 4)],
            [_expect(_TWO_QUBIT_OPERATORS[0, index]) for index in range(1, 4)],
            [
                [_expect(_TWO_QUBIT_OPERATORS[first, second]) for second in range(1, 4)]
                for first in range(1, 4)
            ],
        )
    raise ValidationError("Unsupported dimension %r" % dimension)


def bloch_to_list(params):
    """
    :param params: Any Bloch parametrization.
    :return: Its flat parameter list.
    :rtype: list(float)
    """
    if isinstance(params, TwoQubitBloch):
        return params.flatten()
    return [float(value) for value in params]


def maximally_mixed(dimension):
    """
    >>> maximally_mixed(2).real.tolist()
    [[0.5, 0.0], [0.0, 0.5]]

    :rtype: numpy.ndarray
    """
    return np.eye(dimension, dtype=complex) / dimension


_BELL_VECTORS = {
    "phi+": np.array([1, 0, 0, 1]) / np.sqrt(2.0),
    "phi-": np.array([1, 0, 0, -1]) / np.sqrt(2.0),
    "psi+": np.array([0, 1, 1, 0]) / np.sqrt(2.0),
    "psi-": np.array([0, 1, -1, 0]) / np.sqrt(2.0),
}


def bell_label(label):
    """
    >>> bell_label("bell_phi_plus")
    'phi+'

    :param str label: Any accepted spelling of a Bell state.
    :return: The canonical label.
    :rtype: str
    :raise ValidationError: If the label is unknown.
    """
    try:
        key = label.strip()
        return constants.BELL_LABELS.get(key) or constants.BELL_LABELS[key.lower()]
    except (KeyError, AttributeError):
        raise ValidationError(
            "Unknown Bell state %r, expected one of %r"
            % (label, sorted(set(constants.BELL_LABELS.values())))
        )


def bell_state(label):
    """
    :param str label: phi+, phi-, psi+ or psi- (or an accepted alias).
    :rtype: numpy.ndarray
    """
    return projector(_BELL_VECTORS[bell_label(label)])


def random_density(dimension, rng, rank=None):
    """
    Draw a density matrix W W^dagger / Tr(W W^dagger) from a complex Ginibre matrix W.

    :param int dimension: The matrix size.
    :param numpy.random.Generator rng: The random generator.
    :param int rank: Number of columns of W, full rank if omitted.
    :rtype: numpy.ndarray
    """
    rank = rank or dimension
    ginibre = rng.standard_normal((dimension, rank)) + 1j * rng.standard_normal((dimension, rank))
    rho = ginibre.dot(dagger(ginibre))
    return rho / np.trace(rho).real


def random_hermitian(dimension, rng):
    """
    Draw a unit-trace Hermitian matrix that is not necessarily PSD.

    :param int dimension: The matrix size.
    :param numpy.random.Generator rng: The random generator.
    :rtype: numpy.ndarray
    """
    matrix = rng.standard_normal((dimension, dimension)) + 1j * rng.standard_normal(
        (dimension, dimension)
    )
    matrix = (matrix + dagger(matrix)) / 2.0
    return matrix + (1.0 - np.trace(matrix).real) / dimension * np.eye(dimension)


def project_to_psd(rho):
    """
    Clip the negative eigenvalues of a unit-trace Hermitian matrix and renormalize.

    :param numpy.ndarray rho: A Hermitian matrix.
    :return: The projected matrix, the clipped weight and the original minimum eigenvalue.
    :rtype: tuple(numpy.ndarray, float, float)
    """
    rho = (rho + dagger(rho)) / 2.0
    values, vectors = np.linalg.eigh(rho)
    clipped = float(-values[values < 0].sum())
    kept = np.clip(values, 0.0, None)
    result = (vectors * kept).dot(dagger(vectors))
    return result / np.trace(result).real, clipped, float(values[0])

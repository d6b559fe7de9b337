"""
Search for the quantum net a closed-form Wigner table was written in.

A closed form is affine in the Bloch parameters, so it defines one operator
C_a per point with W_a = Tr(C_a rho) / d. A net reproduces it exactly when
the operators summed along each of its lines equal the projector attached
to that line. Lines of different striations never compete for a vector, so
the search splits into one assignment problem per (striation, basis) pair
and a final striation to basis assignment.
"""
import itertools
import logging

import numpy as np
from scipy import optimize

from discrete_wigner.base import constants
from discrete_wigner.states.bloch import GELL_MANN, PAULIS
from discrete_wigner.wigner.closed_form import (
    closed_form_qubit_dwf,
    closed_form_qutrit_dwf,
    closed_form_two_qubit_dwf,
)
from discrete_wigner.wigner.dwf import dwf
from discrete_wigner.wigner.net import NetAssignment, build_quantum_net, phase_point_operators

_LOG = logging.getLogger(__name__)

QUBIT_PARAMETERS = ("a1", "a2", "a3")
QUTRIT_PARAMETERS = tuple("n%d" % index for index in range(1, 9))
TWO_QUBIT_PARAMETERS = ("a1", "a2", "a3", "s1", "s2", "s3") + tuple(
    "t%d%d" % pair for pair in itertools.product(range(1, 4), repeat=2)
)


def _two_qubit_closed_form(params):
    return closed_form_two_qubit_dwf(params[:3], params[3:6], params[6:])


CLOSED_FORMS = {
    2: (closed_form_qubit_dwf, QUBIT_PARAMETERS),
    3: (closed_form_qutrit_dwf, QUTRIT_PARAMETERS),
    4: (_two_qubit_closed_form, TWO_QUBIT_PARAMETERS),
}


def parameter_operators(dimension):
    """
    The operators M_k whose expectations are the Bloch parameters, x_k = Tr(rho M_k).

    :param int dimension: 2, 3 or 4.
    :rtype: list(numpy.ndarray)
    """
    if dimension == 2:
        return list(PAULIS)
    if dimension == 3:
        return [np.sqrt(3.0) / 2.0 * matrix for matrix in GELL_MANN]
    identity = np.eye(2)
    return (
        [np.kron(pauli, identity) for pauli in PAULIS]
        + [np.kron(identity, pauli) for pauli in PAULIS]
        + [np.kron(first, second) for first, second in itertools.product(PAULIS, repeat=2)]
    )


def _state_from_parameters(params, operators):
    dimension = operators[0].shape[0]
    rho = np.eye(dimension, dtype=complex) / dimension
    for value, operator in zip(params, operators):
        rho = rho + value * operator / np.trace(operator.dot(operator)).real
    return rho


def implied_operators(closed_form, dimension):
    """
    Recover the operators C_a of an affine closed form.

    :param callable closed_form: Maps a flat Bloch parameter vector to a DwfTable.
    :param int dimension: 2, 3 or 4.
    :return: A (d, d, d, d) grid, indexed like the closed-form table.
    :rtype: numpy.ndarray
    """
    operators = parameter_operators(dimension)
    count = len(operators)
    base = closed_form(np.zeros(count)).entries
    # W_a = Tr(rho)/d² + Σ_k c_ak x_k / d², hence C_a = (I + Σ_k c_ak M_k) / d
    grid = np.zeros((dimension,) * 4, dtype=complex)
    grid[:, :] = np.eye(dimension) / dimension * (base[:, :, None, None] * dimension ** 2)
    for index, operator in enumerate(operators):
        unit = np.zeros(count)
        unit[index] = 1.0
        slope = (closed_form(unit).entries - base) * dimension ** 2
        grid += slope[:, :, None, None] * operator / dimension
    return grid


def missing_parameters(closed_form, dimension, names=None, tol=constants.TOL_UNIT):
    """
    >>> missing_parameters(closed_form_qubit_dwf, 2, QUBIT_PARAMETERS)
    ['a1']

    :param callable closed_form: Maps a flat Bloch parameter vector to a DwfTable.
    :param int dimension: 2, 3 or 4.
    :param names: The parameter names, indices are used if omitted.
    :return: The parameters the closed form does not depend on.
    :rtype: list
    """
    count = len(parameter_operators(dimension))
    names = names or list(range(count))
    base = closed_form(np.zeros(count)).entries
    missing = []
    for index in range(count):
        unit = np.zeros(count)
        unit[index] = 1.0
        if np.max(np.abs(closed_form(unit).entries - base)) <= tol:
            missing.append(names[index])
    return missing


class NetSearchResult(object):
    """
    Best net found for a closed form.
    """

    def __init__(self, assignment, residual, transposed, missing, tol=constants.TOL_MATCH):
        """
        :param NetAssignment assignment: The best assignment.
        :param float residual: Largest Wigner entry difference on the parameter basis states.
        :param bool transposed: True if the closed-form rows index p instead of q.
        :param list missing: Parameters the closed form ignores.
        :param float tol: Residual below which the net is a match.
        """
        self.assignment = assignment
        self.residual = float(residual)
        self.transposed = transposed
        self.missing = list(missing)
        self.tol = tol

    def __repr__(self):
        return "<NetSearchResult %s residual=%.3g>" % (
            "match" if self.matched else "mismatch",
            self.residual,
        )

    @property
    def matched(self):
        """
        :rtype: bool
        """
        return self.residual <= self.tol

    def to_dict(self):
        """
        :rtype: dict
        """
        return {
            "matched": self.matched,
            "residual": self.residual,
            "transposed": self.transposed,
            "missing_parameters": self.missing,
            "assignment": self.assignment.to_dict(),
        }


def _best_assignment(grid, space, mubs):
    """
    Maximize the overlap between line sums of the implied operators and the
    projectors of the tabulated bases.
    """
    dimension = space.dimension
    projectors = [basis.projectors() for basis in mubs]
    striation_profit = np.zeros((dimension + 1, dimension + 1))
    line_maps = {}
    for striation in space.striations:
        line_sums = [sum(grid[point.q, point.p] for point in line.points) for line in striation]
        for basis_index, basis_projectors in enumerate(projectors):
            profit = np.real(np.einsum("lij,vji->lv", np.array(line_sums), basis_projectors))
            rows, columns = optimize.linear_sum_assignment(profit, maximize=True)
            striation_profit[striation.index, basis_index] = profit[rows, columns].sum()
            line_maps[striation.index, basis_index] = tuple(columns[np.argsort(rows)])

    rows, columns = optimize.linear_sum_assignment(striation_profit, maximize=True)
    striation_to_basis = columns[np.argsort(rows)]
    return NetAssignment(
        striation_to_basis,
        [line_maps[index, basis] for index, basis in enumerate(striation_to_basis)],
    )


def _residual(closed_form, net, dimension, transposed):
    operators = parameter_operators(dimension)
    ops = phase_point_operators(net)
    points = [np.zeros(len(operators))] + list(np.eye(len(operators)))
    worst = 0.0
    for params in points:
        expected = closed_form(params).entries
        if transposed:
            expected = expected.T
        actual = dwf(_state_from_parameters(params, operators), ops).entries
        worst = max(worst, float(np.max(np.abs(actual - expected))))
    return worst


def find_matching_net(closed_form, space, mubs, names=None, tol=constants.TOL_MATCH):
    """
    Find the quantum net whose Wigner tables reproduce a closed form.

    :param callable closed_form: Maps a flat Bloch parameter vector to a DwfTable.
    :param PhaseSpace space: The phase space.
    :param MubSet mubs: The tabulated bases.
    :param names: The parameter names used in the result.
    :param float tol: Residual below which a net is a match.
    :return: The best assignment over both table orientations, matched or not.
    :rtype: NetSearchResult
    """
    dimension = space.dimension
    implied = implied_operators(closed_form, dimension)
    best = None
    for transposed in (False, True):
        grid = implied.transpose(1, 0, 2, 3) if transposed else implied
        assignment = _best_assignment(grid, space, mubs)
        net = build_quantum_net(space, mubs, assignment)
        residual = _residual(closed_form, net, dimension, transposed)
        _LOG.debug(
            "d=%d transposed=%s residual %.3g for %r", dimension, transposed, residual, assignment
        )
        if best is None or residual < best[1]:
            best = (assignment, residual, transposed)

    return NetSearchResult(
        best[0],
        best[1],
        best[2],
        missing_parameters(closed_form, dimension, names=names),
        tol=tol,
    )


def search_closed_form(space, mubs, tol=constants.TOL_MATCH):
    """
    Run `find_matching_net` with the printed closed form of the space dimension.

    :param PhaseSpace space: The phase space.
    :param MubSet mubs: The tabulated bases.
    :rtype: NetSearchResult
    """
    closed_form, names = CLOSED_FORMS[space.dimension]
    return find_matching_net(closed_form, space, mubs, names=names, tol=tol)

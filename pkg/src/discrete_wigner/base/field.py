"""
Small Galois fields used as phase-space coordinates.

Elements are manipulated through their integer index. For GF(4) the indices
0, 1, 2, 3 stand for 0, 1, ω, ω² with ω² = ω + 1.
"""
import functools
import itertools
import logging

import galois
import numpy as np

from discrete_wigner.base import constants
from discrete_wigner.base._utils import freeze
from discrete_wigner.base.errors import ValidationError

_LOG = logging.getLogger(__name__)

_IRREDUCIBLE_POLY_BY_ORDER = {4: "x^2 + x + 1"}
_LABELS_BY_ORDER = {
    2: ("0", "1"),
    3: ("0", "1", "2"),
    4: ("0", "1", u"ω", u"ω²"),
}


class GaloisField(object):
    """
    Addition and multiplication tables of a finite field.
    """

    def __init__(self, characteristic, degree, add_table, mul_table, labels=None):
        """
        :param int characteristic: The field characteristic p.
        :param int degree: The extension degree n.
        :param add_table: A d x d table of element indices.
        :param mul_table: A d x d table of element indices.
        :param labels: Display names of the elements.
        :type labels: tuple(str)
        """
        order = characteristic ** degree
        add_table = np.asarray(add_table, dtype=int)
        mul_table = np.asarray(mul_table, dtype=int)
        for name, table in (("addition", add_table), ("multiplication", mul_table)):
            if table.shape != (order, order):
                raise ValidationError(
                    "GF(%d) %s table must be %dx%d, got %r"
                    % (order, name, order, order, table.shape)
                )

        self._characteristic = characteristic
        self._degree = degree
        self._add = freeze(add_table)
        self._mul = freeze(mul_table)
        self._labels = tuple(labels or (str(index) for index in range(order)))

    def __repr__(self):
        return "<GaloisField GF(%d)>" % self.order

    def __eq__(self, other):
        return (
            isinstance(other, GaloisField)
            and self.order == other.order
            and np.array_equal(self._add, other.add_table)
            and np.array_equal(self._mul, other.mul_table)
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._characteristic, self._degree))

    @property
    def characteristic(self):
        """
        :rtype: int
        """
        return self._characteristic

    @property
    def degree(self):
        """
        :rtype: int
        """
        return self._degree

    @property
    def order(self):
        """
        :return: The number of elements d = p^n.
        :rtype: int
        """
        return self._characteristic ** self._degree

    @property
    def elements(self):
        """
        :return: Every element index, in canonical order.
        :rtype: tuple(int)
        """
        return tuple(range(self.order))

    @property
    def labels(self):
        """
        :rtype: tuple(str)
        """
        return self._labels

    @property
    def add_table(self):
        """
        :rtype: numpy.ndarray
        """
        return self._add

    @property
    def mul_table(self):
        """
        :rtype: numpy.ndarray
        """
        return self._mul

    def add(self, left, right):
        """
        >>> build_field(2, 1).add(1, 1)
        0

        :rtype: int
        """
        return int(self._add[left, right])

    def mul(self, left, right):
        """
        >>> build_field(3, 1).mul(2, 2)
        1

        :rtype: int
        """
        return int(self._mul[left, right])

    def neg(self, value):
        """
        :return: The additive inverse of an element.
        :rtype: int
        """
        return int(np.flatnonzero(self._add[value] == 0)[0])

    def inv(self, value):
        """
        :return: The multiplicative inverse of a non-zero element.
        :rtype: int
        :raise ZeroDivisionError: If the element is zero.
        """
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.order)
        return int(np.flatnonzero(self._mul[value] == 1)[0])

    def label(self, value):
        """
        :return: The display name of an element.
        :rtype: str
        """
        return self._labels[value]

    def check_axioms(self):
        """
        Exhaustively check the field axioms on the tables.

        :return: Human readable descriptions of every violated axiom.
        :rtype: list(str)
        """
        violations = []
        elements = self.elements
        add, mul = self._add, self._mul

        if not ((add >= 0) & (add < self.order)).all():
            violations.append("addition table not closed")
        if not ((mul >= 0) & (mul < self.order)).all():
            violations.append("multiplication table not closed")
        if violations:
            return violations

        for x in elements:
            if add[x, 0] != x or mul[x, 1] != x:
                violations.append("identity fails for %s" % self.label(x))
            if not (add[x] == 0).any():
                violations.append("no additive inverse for %s" % self.label(x))
            if x and not (mul[x] == 1).any():
                violations.append("no multiplicative inverse for %s" % self.label(x))

        for x, y in itertools.product(elements, repeat=2):
            if add[x, y] != add[y, x] or mul[x, y] != mul[y, x]:
                violations.append(
                    "commutativity fails for (%s, %s)" % (self.label(x), self.label(y))
                )

        for x, y, z in itertools.product(elements, repeat=3):
            if add[add[x, y], z] != add[x, add[y, z]]:
                violations.append("additive associativity fails for %r" % ((x, y, z),))
            if mul[mul[x, y], z] != mul[x, mul[y, z]]:
                violations.append("multiplicative associativity fails for %r" % ((x, y, z),))
            if mul[x, add[y, z]] != add[mul[x, y], mul[x, z]]:
                violations.append("distributivity fails for %r" % ((x, y, z),))
        return violations


def dimension_to_field(dimension):
    """
    :param int dimension: A supported Hilbert space dimension.
    :return: The (characteristic, degree) pair of the matching field.
    :rtype: tuple(int, int)
    :raise ValidationError: If the dimension is not supported.
    """
    try:
        return constants.FIELD_BY_DIMENSION[dimension]
    except (KeyError, TypeError):
        raise ValidationError(
            "Unsupported dimension %r, expected one of %r"
            % (dimension, constants.SUPPORTED_DIMENSIONS)
        )


@functools.lru_cache(maxsize=None)
def build_field(characteristic, degree):
    """
    Build the tables of GF(p^n) for p^n in {2, 3, 4}.

    :param int characteristic: A prime p.
    :param int degree: A positive integer n.
    :return: The field tables.
    :rtype: GaloisField
    :raise ValidationError: If p^n is not a supported dimension.
    """
    if degree < 1 or not galois.is_prime(characteristic):
        raise ValidationError(
            "GF(%r^%r) is not a field this package supports" % (characteristic, degree)
        )
    order = characteristic ** degree
    if order not in constants.SUPPORTED_DIMENSIONS:
        raise ValidationError(
            "Unsupported field order %d, expected one of %r"
            % (order, constants.SUPPORTED_DIMENSIONS)
        )

    poly = _IRREDUCIBLE_POLY_BY_ORDER.get(order)
    field_cls = galois.GF(order, irreducible_poly=poly) if poly else galois.GF(order)
    elements = field_cls.elements
    add_table = (elements[:, np.newaxis] + elements[np.newaxis, :]).view(np.ndarray)
    mul_table = (elements[:, np.newaxis] * elements[np.newaxis, :]).view(np.ndarray)
    _LOG.debug("Built GF(%d) over %s", order, field_cls.irreducible_poly)

    return GaloisField(
        characteristic,
        degree,
        add_table.astype(int),
        mul_table.astype(int),
        labels=_LABELS_BY_ORDER[order],
    )


def field_for_dimension(dimension):
    """
    :param int dimension: A supported Hilbert space dimension.
    :return: The field whose order is that dimension.
    :rtype: GaloisField
    """
    return build_field(*dimension_to_field(dimension))

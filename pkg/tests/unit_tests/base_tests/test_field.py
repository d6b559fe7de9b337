"""
Test cases for GaloisField
"""
import pytest

from discrete_wigner.base.errors import ValidationError
from discrete_wigner.base.field import (
    GaloisField,
    build_field,
    dimension_to_field,
    field_for_dimension,
)


def test_field_axioms(dimension):
    """Assert every supported field satisfies the field axioms."""
    assert field_for_dimension(dimension).check_axioms() == []


def test_gf4_omega_squared():
    """Assert ω² = ω + 1 in GF(4)."""
    field = build_field(2, 2)
    assert field.mul(2, 2) == 3
    assert field.add(2, 1) == 3


def test_gf4_omega_times_omega_squared():
    """Assert ω·ω² = 1 in GF(4)."""
    field = build_field(2, 2)
    assert field.mul(2, 3) == 1
    assert field.inv(2) == 3


def test_gf4_labels():
    """Assert GF(4) elements display with ω."""
    assert build_field(2, 2).labels == ("0", "1", u"ω", u"ω²")


def test_gf3_inverse():
    """Assert 2 is its own inverse in GF(3)."""
    field = build_field(3, 1)
    assert field.inv(2) == 2
    assert field.neg(1) == 2


def test_characteristic_two_negation(dimension):
    """Assert x + x = 0 for every element of a characteristic 2 field."""
    field = field_for_dimension(dimension)
    if field.characteristic != 2:
        pytest.skip("only for characteristic 2")
    assert all(field.neg(x) == x for x in field.elements)


def test_zero_has_no_inverse():
    """Assert inverting 0 raises."""
    with pytest.raises(ZeroDivisionError):
        build_field(3, 1).inv(0)


@pytest.mark.parametrize("characteristic,degree", [(5, 1), (2, 3), (4, 1), (3, 0)])
def test_unsupported_field(characteristic, degree):
    """Assert fields outside GF(2), GF(3) and GF(4) are refused."""
    with pytest.raises(ValidationError):
        build_field(characteristic, degree)


@pytest.mark.parametrize("dimension,expected", [(2, (2, 1)), (3, (3, 1)), (4, (2, 2))])
def test_dimension_to_field(dimension, expected):
    """Assert each dimension maps to its (characteristic, degree) pair."""
    assert dimension_to_field(dimension) == expected


def test_dimension_to_field_unsupported():
    """Assert an unsupported dimension raises a ValidationError."""
    with pytest.raises(ValidationError):
        dimension_to_field(5)


def test_broken_table_is_reported():
    """Assert check_axioms reports a non-commutative addition table."""
    field = GaloisField(2, 1, [[0, 1], [0, 0]], [[0, 0], [0, 1]])
    violations = field.check_axioms()
    assert "commutativity fails for (0, 1)" in violations


def test_table_shape_mismatch():
    """Assert tables of the wrong shape are refused."""
    with pytest.raises(ValidationError):
        GaloisField(3, 1, [[0, 1], [1, 0]], [[0, 0], [0, 1]])


def test_field_equality():
    """Assert two builds of the same field are equal."""
    assert build_field(2, 2) == field_for_dimension(4)
    assert build_field(2, 1) != build_field(3, 1)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qelectric.charges import (
    ChargeVector,
    GenericityError,
    Residue,
    differ_by_int,
    is_generic,
    parse_charges,
    parse_residue,
    validate_generic,
)

d1, d2 = Residue.symbolic(1), Residue.symbolic(2)


def test_differ_by_int_examples():
    assert differ_by_int(d1.plus(3), d1) == 3
    assert differ_by_int(d1, d2) is None
    assert differ_by_int(Residue.concrete(Fraction(1, 2)), Residue.concrete(Fraction(5, 2))) == -2


def test_genericity_examples():
    validate_generic(ChargeVector((d1, d2)))
    with pytest.raises(GenericityError) as info:
        validate_generic(ChargeVector.concrete([0, 1]))
    assert info.value.pair == (1, 2)
    assert is_generic(ChargeVector.concrete([0, Fraction(1, 2)]))


def test_parsing():
    assert parse_residue("d1+3") == d1.plus(3)
    assert parse_residue("d2") == d2
    assert parse_residue("-3/2") == Residue.concrete(Fraction(-3, 2))
    assert parse_charges("d1,d2") == ChargeVector.symbolic(2)
    with pytest.raises(GenericityError):
        parse_charges("0,2")


def test_component_lookup():
    cv = ChargeVector.symbolic(3)
    assert cv.component_of(d2.plus(-4)) == 2
    assert cv.component_of(Residue.concrete(0)) is None
    assert cv[1] == d1


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_offsets_compose(a, b):
    assert differ_by_int(d1.plus(a), d1.plus(b)) == a - b
    assert str(parse_residue(str(d1.plus(a)))) == str(d1.plus(a))

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from syzkit.errors import DivisionByZero, FieldMismatch
from syzkit.scalars import DEFAULT_PRIME, Field, FieldElement, is_prime, parse_field

Q = Field.rationals()
F7 = Field.prime(7)
FP = Field.prime(DEFAULT_PRIME)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


def test_fraction_sum():
    assert Q.element(Fraction(1, 2)) + Q.element(Fraction(1, 3)) == Q.element(Fraction(5, 6))


def test_inverse_mod_7():
    assert F7.element(2).inverse() == F7.element(4)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        Q.element(0).inverse()
    with pytest.raises(DivisionByZero):
        F7.element(7).inverse()
    with pytest.raises(ZeroDivisionError):
        F7.element(3) / F7.element(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        F7.element(1) + FP.element(1)


def test_canonical_storage():
    a = Q.element((6, -4))
    assert a.value == Fraction(-3, 2) and a.value.denominator > 0
    assert F7.element(-1).value == 6
    assert F7.element(Fraction(1, 2)).value == 4


@pytest.mark.parametrize("p", [0, 1, 2, 4, 9, 1000001, 2**61 - 1 + 2])
def test_bad_characteristics(p):
    with pytest.raises(ValueError):
        Field.prime(p)


def test_primality_against_trial_division():
    def slow(n):
        return n > 1 and all(n % k for k in range(2, int(n ** 0.5) + 1))
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]
    assert is_prime(DEFAULT_PRIME)
    assert is_prime(2**61 - 1)


def test_parse_literals():
    assert Q.parse("-3/6") == Fraction(-1, 2)
    assert Q.parse("7") == 7
    assert F7.parse("1/2") == 4
    with pytest.raises(ValueError):
        Q.parse("1/-2")
    assert parse_field("Fp:1000003") == FP
    assert parse_field("F 7") == F7
    assert parse_field("Q") == Q


@given(rationals)
def test_normalize_idempotent(a):
    for f in (Q, FP):
        if f is FP and a.denominator % DEFAULT_PRIME == 0:
            continue
        once = f.normalize(a)
        assert f.normalize(once) == once


@given(rationals.filter(bool))
def test_inverse_axiom(a):
    x = Q.element(a)
    assert x * x.inverse() == 1
    y = FP.element(a)
    if y:
        assert y * y.inverse() == 1


@given(rationals, rationals, rationals)
def test_associativity(a, b, c):
    for f in (Q, FP):
        x, y, z = f.element(a), f.element(b), f.element(c)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)


@given(rationals, rationals)
def test_reduction_commutes(a, b):
    red = lambda v: FP.reduce_from(Q, v)  # noqa: E731
    assert red(a + b) == FP.add(red(a), red(b))
    assert red(a * b) == FP.mul(red(a), red(b))


def test_element_repr_and_hash():
    assert str(Q.element(Fraction(3, 4))) == "3/4"
    assert hash(F7.element(8)) == hash(F7.element(1))
    assert FieldElement(F7, 10).value == 3

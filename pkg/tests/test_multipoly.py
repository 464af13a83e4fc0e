from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from syzkit import varieties
from syzkit.errors import ContextMismatch, InhomogeneousError, LengthMismatch, \
    PolynomialSyntaxError, UnknownVariable
from syzkit.multipoly import RingContext, coordinates, format_poly, from_coordinates, \
    monomial_basis, multiply, parse_poly
from syzkit.scalars import Field

Q = Field.rationals()
P3 = RingContext(4, Q)


def mono(*e):
    return tuple(e)


def test_parse_q01():
    q = parse_poly("x0*x2 - x1^2", P3)
    assert q.degree == 2
    assert q.terms == {mono(1, 0, 1, 0): 1, mono(0, 2, 0, 0): -1}


def test_parse_q12():
    q = parse_poly("x1*x3 - x2^2", P3)
    assert q.terms == {mono(0, 1, 0, 1): 1, mono(0, 0, 2, 0): -1}


def test_inhomogeneous():
    with pytest.raises(InhomogeneousError):
        parse_poly("x0 + x1^2", P3)


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_poly("x0*x4", P3)


@pytest.mark.parametrize("text", ["x0 +", "x0 ** x1", "2 x0", "x0*", "1/0*x0", "y1", "", "x0^"])
def test_syntax_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, P3)


def test_coefficients_and_comments():
    q = parse_poly("3/2*x0*x1 - 4/6*x2^2  # trailing comment", P3)
    assert q.terms == {mono(1, 1, 0, 0): Fraction(3, 2), mono(0, 0, 2, 0): Fraction(-2, 3)}
    assert format_poly(q) == "3/2*x0*x1 - 2/3*x2^2"


def test_multiply_examples():
    x0 = P3.variable(0)
    q12 = parse_poly("x1*x3 - x2^2", P3)
    assert multiply(x0, q12) == parse_poly("x0*x1*x3 - x0*x2^2", P3)
    zero = P3.zero(1)
    prod = multiply(zero, q12)
    assert prod.is_zero() and prod.degree == 3
    q01 = parse_poly("x0*x2 - x1^2", P3)
    assert multiply(q01, q12) == parse_poly(
        "x0*x1*x2*x3 - x0*x2^3 - x1^3*x3 + x1^2*x2^2", P3)


def test_context_mismatch():
    other = RingContext(5, Q)
    with pytest.raises(ContextMismatch):
        multiply(P3.variable(0), other.variable(0))


@pytest.mark.parametrize("n, d", [(4, 2), (5, 3), (4, 0), (7, 4)])
def test_monomial_basis_size(n, d):
    ctx = RingContext(n, Q)
    basis = monomial_basis(ctx, d)
    assert len(basis) == comb(n - 1 + d, d)
    assert len(set(basis)) == len(basis)
    assert all(sum(m) == d for m in basis)


def test_monomial_basis_order():
    basis = monomial_basis(P3, 2)
    assert basis[0] == mono(2, 0, 0, 0)
    assert basis[1] == mono(1, 1, 0, 0)
    assert basis[-1] == mono(0, 0, 0, 2)
    assert list(basis) == sorted(basis, reverse=True)
    assert monomial_basis(P3, 0) == (mono(0, 0, 0, 0),)


def test_coordinates_unit_vector():
    v = coordinates(parse_poly("x1^2", P3))
    k = monomial_basis(P3, 2).index(mono(0, 2, 0, 0))
    assert v == [1 if i == k else 0 for i in range(10)]


def test_coordinates_round_trip():
    q01 = parse_poly("x0*x2 - x1^2", P3)
    assert from_coordinates(coordinates(q01), 2, P3) == q01
    assert from_coordinates([0] * 10, 2, P3).is_zero()
    with pytest.raises(LengthMismatch):
        from_coordinates([0] * 9, 2, P3)


def test_parser_round_trip_catalog():
    for v in [varieties.twisted_cubic(), varieties.rational_normal_curve(5), varieties.scroll(1, 2),
              varieties.veronese(), varieties.hyperelliptic_g2(0), varieties.elliptic_quintic(0)]:
        for g in v.ideal.generators:
            assert parse_poly(format_poly(g), g.context) == g


def test_prime_field_printing():
    ctx = RingContext(3, Field.prime(7))
    q = parse_poly("x0^2 - x1*x2", ctx)
    assert format_poly(q) == "x0^2 + 6*x1*x2"
    assert parse_poly(format_poly(q), ctx) == q


small = st.integers(-5, 5)


@st.composite
def quadrics(draw):
    return from_coordinates(draw(st.lists(small, min_size=10, max_size=10)), 2, P3)


@given(quadrics(), quadrics(), small, small)
def test_coordinates_linear(f, g, a, b):
    lhs = coordinates(f.scale(a) + g.scale(b))
    rhs = [a * x + b * y for x, y in zip(coordinates(f), coordinates(g))]
    assert lhs == rhs


@given(quadrics(), quadrics())
def test_product_homogeneous(f, g):
    h = multiply(f, g)
    assert h.degree == 4
    assert all(sum(m) == 4 for m in h.terms)


@given(quadrics())
def test_print_parse_round_trip(f):
    assert parse_poly(format_poly(f), P3, degree=2) == f

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import rnc_ideal_dim, sym_dim
from syzkit.errors import NotSkew
from syzkit.graded_ideal import GradedIdeal
from syzkit.linalg import Subspace
from syzkit.multipoly import RingContext, coordinates
from syzkit.scalars import Field
from syzkit.varieties import (CatalogSpec, generate, hyperelliptic_g2, parse_catalog_name,
                              pfaffian_4x4, pfaffians, rational_normal_curve, scroll,
                              two_by_two_minors, veronese)

Q = Field.rationals()


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_pfaffian_squared_is_determinant(vals):
    a, b, c, d, e, f = vals
    m = [[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]]
    assert pfaffian_4x4(m) ** 2 == leibniz_det(m)


def test_zero_matrix_gives_zero_pfaffians():
    ctx = RingContext(5, Q)
    m = [[ctx.zero(1)] * 5 for _ in range(5)]
    out = pfaffians(m)
    assert len(out) == 5 and all(q.is_zero() for q in out)


def test_not_skew():
    ctx = RingContext(5, Q)
    x = [ctx.variable(i) for i in range(5)]
    m = [[ctx.zero(1)] * 5 for _ in range(5)]
    m[0][1] = x[0]
    m[1][0] = x[0]
    with pytest.raises(NotSkew):
        pfaffians(m)
    m2 = [[ctx.zero(1)] * 5 for _ in range(5)]
    m2[2][2] = x[1]
    with pytest.raises(NotSkew):
        pfaffians(m2)
    with pytest.raises(NotSkew):
        pfaffians(m[:4])


def test_generic_pfaffians_span_five(quintic):
    ideal = quintic.ideal
    span = Subspace.span(Q, sym_dim(5, 2), [coordinates(g) for g in ideal.generators])
    assert span.dim == 5
    assert [ideal.hilbert_quotient(t) for t in range(1, 5)] == [5, 10, 15, 20]


def test_minors_count():
    ctx = RingContext(4, Q)
    x = [ctx.variable(i) for i in range(4)]
    assert len(two_by_two_minors(x[:3], x[1:])) == 3


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_rnc_hilbert(d):
    ideal = rational_normal_curve(d).ideal
    for t in range(1, 4):
        assert ideal.hilbert_quotient(t) == d * t + 1
        assert ideal.piece(t).dim == rnc_ideal_dim(d, t)


def test_scroll_and_veronese_hilbert():
    s = scroll(1, 2).ideal
    assert [s.hilbert_quotient(t) for t in range(1, 5)] == [5, 12, 22, 35]
    v = veronese().ideal
    assert len(v.generators) == 6
    assert [v.hilbert_quotient(t) for t in range(1, 4)] == [6, 15, 28]


def test_hyperelliptic(hyper, scroll12):
    assert [hyper.ideal.hilbert_quotient(t) for t in range(1, 5)] == [5, 11, 17, 23]
    for d in range(1, 5):
        assert hyper.ideal.piece(d).contains_subspace(scroll12.ideal.piece(d))
    assert hyper.ideal.generation_check(2)
    assert hyper.ideal.generation_check(3)


def test_catalog_generation_checks(catalog):
    for name, v in catalog.items():
        assert v.ideal.generation_check(2), name


def test_determinism():
    a = hyperelliptic_g2(7)
    b = hyperelliptic_g2(7)
    assert a.ideal.generators == b.ideal.generators
    q1 = generate(CatalogSpec("EllipticQuintic", seed=3)).ideal
    q2 = generate(CatalogSpec("EllipticQuintic", seed=3)).ideal
    assert q1.generators == q2.generators


def test_prime_field_generation():
    f = Field.prime(1000003)
    v = hyperelliptic_g2(0, f)
    assert v.ideal.field == f
    assert v.ideal.hilbert_quotient(3) == 17


def test_catalog_names():
    assert parse_catalog_name("rnc:5") == CatalogSpec("RNC", (5,))
    assert parse_catalog_name("scroll:1,2", seed=4) == CatalogSpec("Scroll", (1, 2), 4)
    assert parse_catalog_name("hyperell-g2").kind == "HyperellipticG2"
    for name in ("twisted-cubic", "rnc:4", "scroll:2,3", "veronese", "hyperelliptic-g2",
                 "elliptic-quintic"):
        assert parse_catalog_name(name).name == name
    for bad in ("rnc:1", "foo", "scroll:0,2"):
        with pytest.raises(ValueError):
            parse_catalog_name(bad)


def test_twisted_cubic_syzygy(tc):
    assert tc.syzygy.is_valid()
    assert isinstance(tc.ideal, GradedIdeal)

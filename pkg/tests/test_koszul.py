import random

import pytest

from oracles import eagon_northcott
from syzkit.graded_ideal import GradedIdeal
from syzkit.koszul import AMBIENT, IDEAL, QUOTIENT, apply_differential, betti_table, \
    exterior_basis, k_p1_ideal_form, koszul_group_dim, koszul_matrix, np_check, tensor_to_vector
from syzkit.multipoly import parse_poly
from syzkit.varieties import rational_normal_curve


def e(i, n=4):
    return tuple(1 if k == i else 0 for k in range(n))


def test_exterior_basis_order():
    assert exterior_basis(4, 2) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert exterior_basis(4, 0) == ((),)
    assert exterior_basis(3, 4) == ()


def test_two_term_formula(tc):
    out = apply_differential(tc.ideal, 2, 1, {((0, 1), e(3)): 1})
    assert out == {((0,), (0, 1, 0, 1)): 1, ((1,), (1, 0, 0, 1)): -1}


def test_known_gamma_image(tc):
    ctx = tc.ideal.context
    out = apply_differential(tc.ideal, 2, 1, tc.gamma)
    q01 = parse_poly("x0*x2 - x1^2", ctx)
    q02 = parse_poly("x0*x3 - x1*x2", ctx)
    q12 = parse_poly("x1*x3 - x2^2", ctx)
    expected = {}
    for j, q in ((0, q12), (1, -q02), (2, q01)):
        for m, c in q.terms.items():
            expected[((j,), m)] = c
    assert out == expected
    assert not any(J == (3,) for J, _ in out)


@pytest.mark.parametrize("kind", [AMBIENT, QUOTIENT, IDEAL])
@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("q", [1, 2])
def test_complex_property(tc, kind, p, q):
    first = koszul_matrix(p, q, kind, tc.ideal)
    second = koszul_matrix(p - 1, q + 1, kind, tc.ideal)
    assert (second @ first).is_zero()


def test_complex_on_random_vectors(rnc4):
    rng = random.Random(11)
    for p, q in [(2, 1), (3, 1), (3, 2)]:
        a = koszul_matrix(p, q, QUOTIENT, rnc4.ideal)
        b = koszul_matrix(p - 1, q + 1, QUOTIENT, rnc4.ideal)
        for _ in range(5):
            v = [rng.randint(-9, 9) for _ in range(a.ncols)]
            assert not any(b.apply(a.apply(v)))


def test_twisted_cubic_k21(tc):
    assert koszul_group_dim(tc.ideal, 2, 1) == 2
    assert k_p1_ideal_form(tc.ideal, 2).dim == 2


def test_rnc4_values(rnc4):
    assert koszul_group_dim(rnc4.ideal, 2, 1) == eagon_northcott(4, 2) == 8
    assert koszul_group_dim(rnc4.ideal, 1, 2) == 0
    assert koszul_group_dim(rnc4.ideal, 2, 2) == 0


def test_ideal_form_examples(hyper, scroll12):
    assert k_p1_ideal_form(hyper.ideal, 2).dim == 5 * 4 - hyper.ideal.piece(3).dim == 2
    assert k_p1_ideal_form(scroll12.ideal, 2).dim == eagon_northcott(3, 2) == 2


def test_betti_twisted_cubic(tc):
    t = betti_table(tc.ideal, 2, 2)
    assert (t[1, 1], t[2, 1], t[1, 2], t[2, 2]) == (3, 2, 0, 0)
    assert t[0, 0] == 1


def test_betti_elliptic_quintic(quintic):
    t = betti_table(quintic.ideal, 3, 2)
    assert (t[1, 1], t[2, 1], t[1, 2], t[2, 2]) == (5, 5, 0, 0)
    assert t[3, 2] == 1


def test_betti_rnc5(rnc5):
    t = betti_table(rnc5.ideal, 3, 2)
    for p in (1, 2, 3):
        assert t[p, 1] == eagon_northcott(5, p)
        assert t[p, 2] == 0
    assert (t[1, 1], t[2, 1], t[3, 1]) == (10, 20, 15)


def test_betti_json_and_format(tc):
    t = betti_table(tc.ideal, 2, 2)
    js = t.to_json()
    assert js["pmax"] == 2 and js["qmax"] == 2
    assert {"p": 2, "q": 1, "dim": 2} in js["entries"]
    text = t.format()
    assert "total:" in text and text.splitlines()[3].split() == ["1:", ".", "3", "2"]


def test_np_examples(rnc5, hyper):
    assert np_check(rnc5.ideal, 2, 3).holds
    bad = np_check(hyper.ideal, 2, 3)
    assert not bad.holds
    i, q = bad.fails_at
    assert i <= 2 and q == 2
    assert np_check(hyper.ideal, 1, 3).holds


def test_np_generation_failure():
    from syzkit.multipoly import RingContext
    from syzkit.scalars import Field
    ctx = RingContext(4, Field.rationals())
    ideal = GradedIdeal(ctx, [parse_poly("x0^2", ctx), parse_poly("x1^3", ctx)])
    res = np_check(ideal, 1, 2)
    assert not res.holds and not res.quadratic_generation
    assert res.fails_at == (1, 2)


def test_route_equivalence(catalog):
    for name, v in catalog.items():
        for p in (2, 3):
            assert k_p1_ideal_form(v.ideal, p).dim == koszul_group_dim(v.ideal, p, 1), (name, p)


def test_betti_basis_independence(tc):
    ctx = tc.ideal.context
    q01, q02, q12 = tc.ideal.generators
    mixed = GradedIdeal(ctx, [q12, q01 + q02, q02.scale(3) - q12.scale(2), q01 + q12])
    assert betti_table(mixed, 3, 2) == betti_table(tc.ideal, 3, 2)


def test_tensor_coordinates_slot_major(tc):
    v = tensor_to_vector(tc.ideal, 2, 1, {((0, 2), e(1)): 5})
    assert v.index(5) == 1 * 4 + 1


def test_rnc6_k21():
    assert koszul_group_dim(rational_normal_curve(6).ideal, 2, 1) == eagon_northcott(6, 2) == 40

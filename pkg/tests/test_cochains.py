import itertools
from fractions import Fraction

import pytest

from hochfrob import (BarCochain, Chain, Cochain, Field, GroupRingElement,
                      bar_coboundary, bar_cup, bar_to_cochain, circle_product,
                      coboundary, cochain_to_bar, convolution_coproduct,
                      convolution_cup, convolution_unit, cyclic,
                      eval_multilinear, homotopy_commutator_defect,
                      homotopy_signs, in_norm_radical, insertion_product,
                      is_identity_supported, norm_element, norm_pairing,
                      random_cochain, simplicial_cup, simplicial_cup_one,
                      symmetric)
from hochfrob.errors import ArityMismatchError, SizeGuardError
from hochfrob.rng import random_bar_cochain, random_identity_supported_cochain

Q = Field.rationals()
F2 = Field.prime(2)
F3 = Field.prime(3)
C2 = cyclic(2)
C3 = cyclic(3)
S3 = symmetric(3)


# -- comparison maps ---------------------------------------------------------------


def test_generator_rule_degree_zero():
    assert bar_to_cochain(BarCochain.basis(C3, Q, 1, ())) == Cochain.dual_basis(C3, Q, (2,))
    assert bar_to_cochain(BarCochain.basis(C3, Q, 0, ())) == Cochain.dual_basis(C3, Q, (0,))


def test_generator_rule_degree_one():
    for y in C3.elements():
        assert bar_to_cochain(BarCochain.basis(C3, Q, 1, (y,))) == \
            Cochain.dual_basis(C3, Q, (2, y))


def test_inverse_generator_rule():
    assert cochain_to_bar(Cochain.dual_basis(C3, Q, (2,))) == BarCochain.basis(C3, Q, 1, ())


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_round_trips(groups, fields, degree):
    for g in groups.values():
        for fld in fields.values():
            f = random_bar_cochain(g, fld, degree, seed=degree + 5)
            assert cochain_to_bar(bar_to_cochain(f)) == f
            a = random_cochain(g, fld, degree, seed=degree + 6)
            assert bar_to_cochain(cochain_to_bar(a)) == a


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_comparison_maps_intertwine_coboundaries(groups, fields, degree):
    for g in groups.values():
        for fld in fields.values():
            f = random_bar_cochain(g, fld, degree, seed=degree + 21)
            assert bar_to_cochain(bar_coboundary(f)) == coboundary(bar_to_cochain(f))
            a = random_cochain(g, fld, degree, seed=degree + 22)
            assert bar_coboundary(cochain_to_bar(a)) == cochain_to_bar(coboundary(a))


# -- coboundaries ------------------------------------------------------------------


def test_coboundary_vanishes_on_abelian_degree_zero():
    assert coboundary(Cochain.dual_basis(C2, Q, (0,))).is_zero()


def test_coboundary_detects_noncommuting_pair():
    tr = S3.label_to_index("102")
    out = coboundary(Cochain.dual_basis(S3, Q, (tr,)))
    assert not out.is_zero()
    witness = next((g, h) for g in S3.elements() for h in S3.elements()
                   if S3.mul(g, h) == tr and S3.mul(h, g) != tr)
    g, h = witness
    assert out((g, h)) == 1


def test_coboundary_matches_boundary_duality():
    for g in (C2, S3):
        for deg in (1, 2):
            a = random_cochain(g, Q, deg - 1, seed=3)
            ba = coboundary(a)
            stream_tuples = itertools.islice(
                itertools.product(g.elements(), repeat=deg + 1), 0, None, 7)
            from hochfrob import boundary

            for t in stream_tuples:
                bt = boundary(Chain.basis(g, Q, t))
                assert ba(t) == sum(c * a(tt) for tt, c in bt.terms.items())


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_coboundary_squared_zero(groups, fields, degree):
    for g in groups.values():
        for fld in fields.values():
            a = random_cochain(g, fld, degree, seed=degree + 9)
            assert coboundary(coboundary(a)).is_zero()


def test_bar_coboundary_degree_zero_formula():
    f0 = BarCochain.basis(S3, Q, 0, ())
    assert bar_coboundary(f0).is_zero()
    tr = S3.label_to_index("102")
    df = bar_coboundary(BarCochain.basis(S3, Q, tr, ()))
    assert not df.is_zero()
    g0 = S3.label_to_index("021")
    expect = {}
    expect[S3.mul(g0, tr)] = 1
    k = S3.mul(tr, g0)
    expect[k] = expect.get(k, 0) - 1
    assert df.value_at((g0,)).coeffs == {k: v for k, v in expect.items() if v}


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_bar_coboundary_squared_zero(groups, fields, degree):
    for g in groups.values():
        for fld in fields.values():
            f = random_bar_cochain(g, fld, degree, seed=degree + 11)
            assert bar_coboundary(bar_coboundary(f)).is_zero()


# -- evaluation and pairing ----------------------------------------------------------


def test_eval_multilinear_examples():
    n = norm_element(C2, Q)
    x = GroupRingElement.basis(C2, Q, 1)
    alpha = Cochain.dual_basis(C2, Q, (1, 0))
    assert eval_multilinear(alpha, [x, n]) == 1
    mixed = alpha.sub(Cochain.dual_basis(C2, Q, (1, 1)))
    assert eval_multilinear(mixed, [x, n]) == 0
    e = GroupRingElement.basis(C2, Q, 0)
    assert eval_multilinear(alpha, [x, e]) == 1
    with pytest.raises(ArityMismatchError):
        eval_multilinear(alpha, [x])


def test_eval_multilinear_fractional():
    alpha = Cochain(C2, Q, 0, [Fraction(1, 2), Fraction(1, 3)])
    n = norm_element(C2, Q)
    assert eval_multilinear(alpha, [n]) == Fraction(5, 6)


def test_pairing_examples():
    assert norm_pairing(Cochain.dual_basis(C2, Q, (1,)), Cochain.dual_basis(C2, Q, (1,))) == 1
    assert norm_pairing(Cochain.dual_basis(C3, Q, (1,)), Cochain.dual_basis(C3, Q, (1,))) == 0
    assert norm_pairing(Cochain.dual_basis(C3, Q, (1,)), Cochain.dual_basis(C3, Q, (2,))) == 1
    assert norm_pairing(Cochain.dual_basis(C2, Q, (1, 0)), Cochain.dual_basis(C2, Q, (1, 1))) == 1


def test_pairing_symmetry_mixed_degrees(groups, fields):
    for g in groups.values():
        for fld in fields.values():
            for (p, q) in ((0, 0), (1, 2), (2, 1)):
                a = random_cochain(g, fld, p, seed=31)
                b = random_cochain(g, fld, q, seed=32)
                assert norm_pairing(a, b) == norm_pairing(b, a)


def test_unit_pairing_gives_identity_value():
    u = convolution_unit(C3, Q)
    a = random_cochain(C3, Q, 0, seed=4)
    assert norm_pairing(a, u) == a((0,))


def test_support_and_radical_predicates():
    assert is_identity_supported(Cochain.dual_basis(C2, Q, (1, 1)))
    assert not is_identity_supported(Cochain.dual_basis(C2, Q, (1, 0)))
    mixed = Cochain.dual_basis(C2, Q, (1, 0)).sub(Cochain.dual_basis(C2, Q, (1, 1)))
    assert in_norm_radical(mixed)
    u = convolution_unit(C2, Q)
    assert is_identity_supported(u) and not in_norm_radical(u)


# -- products -----------------------------------------------------------------------


def test_convolution_cup_generator_rule():
    for g in (C3, S3):
        sampler = itertools.islice(itertools.product(g.elements(), repeat=4), 0, None, 23)
        for a0, a1, b0, b1 in sampler:
            lhs = convolution_cup(Cochain.dual_basis(g, Q, (a0, a1)),
                                  Cochain.dual_basis(g, Q, (b0, b1)))
            assert lhs == Cochain.dual_basis(g, Q, (g.mul(b0, a0), a1, b1))


def test_convolution_cup_degree_zero():
    assert convolution_cup(Cochain.dual_basis(C3, Q, (1,)),
                           Cochain.dual_basis(C3, Q, (1,))) == Cochain.dual_basis(C3, Q, (2,))


def test_unit_laws(groups, fields):
    for g in groups.values():
        for fld in fields.values():
            u = convolution_unit(g, fld)
            assert convolution_cup(u, u) == u
            b = random_cochain(g, fld, 2, seed=44)
            assert convolution_cup(u, b) == b
            assert convolution_cup(b, u) == b


@pytest.mark.parametrize("pq", [(0, 0), (0, 1), (1, 1), (1, 2)])
def test_product_definition_route(groups, fields, pq):
    p, q = pq
    for g in groups.values():
        for fld in fields.values():
            a = random_cochain(g, fld, p, seed=51)
            b = random_cochain(g, fld, q, seed=52)
            via_bar = bar_to_cochain(bar_cup(cochain_to_bar(a), cochain_to_bar(b)))
            assert via_bar == convolution_cup(a, b)


@pytest.mark.parametrize("pq", [(0, 0), (1, 1), (1, 2)])
def test_leibniz(groups, fields, pq):
    p, q = pq
    for g in groups.values():
        for fld in fields.values():
            a = random_cochain(g, fld, p, seed=53)
            b = random_cochain(g, fld, q, seed=54)
            lhs = coboundary(convolution_cup(a, b))
            rhs = convolution_cup(coboundary(a), b).add(
                convolution_cup(a, coboundary(b)).scale((-1) ** p))
            assert lhs == rhs


def test_bar_cup_identity_maps():
    idm = BarCochain.identity_map(C3, Q)
    fg = bar_cup(idm, idm)
    for a in C3.elements():
        for b in C3.elements():
            assert fg.value_at((a, b)).coeffs == {C3.mul(a, b): 1}


def test_bar_cup_degree_zero_unit():
    e = BarCochain.basis(C3, Q, 0, ())
    f = random_bar_cochain(C3, Q, 1, seed=2)
    assert bar_cup(e, f) == f
    assert bar_cup(f, e) == f


def test_insertion_composition():
    idm = BarCochain.identity_map(C3, Q)
    assert insertion_product(idm, idm) == idm
    assert insertion_product(BarCochain.basis(C3, Q, 1, ()), idm).is_zero()


def test_insertion_direct_sum_oracle():
    # p=2, q=1 over C2: (f o g)(a, b) = f(g(a), b) + f(a, g(b)).
    f = random_bar_cochain(C2, Q, 2, seed=8)
    g = BarCochain.identity_map(C2, Q)
    out = insertion_product(f, g)
    for a in C2.elements():
        for b in C2.elements():
            direct = f.value_at((a, b)).scale(2)
            assert out.value_at((a, b)) == direct


def test_circle_product_degree_zero_left():
    a = random_cochain(C2, Q, 0, seed=9)
    b = random_cochain(C2, Q, 1, seed=10)
    assert circle_product(a, b).is_zero()


def test_frobenius_associativity(groups, fields):
    for g in groups.values():
        for fld in fields.values():
            for (p, q, r) in ((0, 0, 0), (1, 1, 1), (0, 1, 2), (2, 1, 0)):
                a = random_cochain(g, fld, p, seed=61)
                b = random_cochain(g, fld, q, seed=62)
                c = random_cochain(g, fld, r, seed=63)
                assert norm_pairing(convolution_cup(a, b), c) == \
                    norm_pairing(a, convolution_cup(b, c))


# -- simplicial products ---------------------------------------------------------


def test_simplicial_cup_degree_zero_pointwise():
    a = random_cochain(C3, Q, 0, seed=71)
    b = random_cochain(C3, Q, 0, seed=72)
    out = simplicial_cup(a, b)
    for g in C3.elements():
        assert out((g,)) == a((g,)) * b((g,))


def test_simplicial_cup_unit_on_identity_support():
    u = convolution_unit(C2, Q)
    assert simplicial_cup(u, u) == u


@pytest.mark.parametrize("pq", [(0, 0), (0, 1), (1, 1), (1, 2), (2, 1), (2, 2)])
def test_cup_agreement_on_identity_support(groups, fields, pq):
    p, q = pq
    for g in groups.values():
        if g.order ** (p + q + 1) > 10 ** 5:
            continue
        for fld in fields.values():
            a = random_identity_supported_cochain(g, fld, p, seed=7)
            b = random_identity_supported_cochain(g, fld, q, seed=8)
            assert convolution_cup(a, b) == simplicial_cup(a, b)


def test_cup_one_degree_zero_is_zero():
    a = random_cochain(C2, Q, 0, seed=1)
    b = random_cochain(C2, Q, 0, seed=2)
    assert simplicial_cup_one(a, b).is_zero()


@pytest.mark.parametrize("pq", [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (2, 2)])
def test_cup_one_agreement_on_identity_support(groups, fields, pq):
    p, q = pq
    for g in groups.values():
        if g.order ** (p + q + 2) > 10 ** 5:
            continue
        for fld in fields.values():
            a = random_identity_supported_cochain(g, fld, p, seed=17)
            b = random_identity_supported_cochain(g, fld, q, seed=18)
            assert circle_product(a, b) == simplicial_cup_one(a, b)


# -- duality and homotopy -------------------------------------------------------------


def test_coproduct_duality(groups, fields):
    for g in groups.values():
        for fld in fields.values():
            for (p, q) in ((0, 0), (1, 1), (0, 2)):
                a = random_cochain(g, fld, p, seed=71)
                b = random_cochain(g, fld, q, seed=72)
                prod = convolution_cup(a, b)
                sampler = itertools.islice(
                    itertools.product(g.elements(), repeat=p + q + 1), 0, None, 29)
                for t in sampler:
                    tens = convolution_coproduct(Chain.basis(g, fld, t))
                    val = fld.zero
                    for (l, r), c in tens.terms.items():
                        if len(l) - 1 == p and len(r) - 1 == q:
                            val = fld.add(val, fld.mul(c, fld.mul(a(l), b(r))))
                    assert prod(t) == val


def test_homotopy_signs_are_degree_dependent():
    assert homotopy_signs(1, 1) == (-1, 1, 1)
    assert homotopy_signs(1, 2) == (-1, -1, 1)
    assert homotopy_signs(2, 2) == (-1, -1, 1)
    assert homotopy_signs(2, 1) == (1, -1, -1)


@pytest.mark.parametrize("pq", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_homotopy_commutativity(groups, fields, pq):
    p, q = pq
    for g in groups.values():
        if g.order ** (p + q + 2) > 10 ** 5:
            continue
        for fld in fields.values():
            a = random_cochain(g, fld, p, seed=81)
            b = random_cochain(g, fld, q, seed=82)
            assert homotopy_commutator_defect(a, b).is_zero()


# -- guards -------------------------------------------------------------------------


def test_size_guard():
    with pytest.raises(SizeGuardError):
        Cochain.zero(S3, Q, 8)
    with pytest.raises(SizeGuardError):
        random_cochain(S3, Q, 3, seed=0, budget=100)


def test_object_lane_promotion():
    half = Cochain(C2, Q, 1, [Fraction(1, 2)] * 4)
    two = Cochain(C2, Q, 1, [2] * 4)
    out = convolution_cup(half, two)
    assert out.values.dtype == object
    assert out((0, 0, 0)) == Fraction(1, 2) * 2 * 2
    total = half.add(two)
    assert total((0, 0)) == Fraction(5, 2)

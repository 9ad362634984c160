import numpy as np
import pytest
import sympy

import ringlab as rl
from ringlab.constructions import Pattern, decode_digits
from ringlab.core import ConstructionError

from conftest import (
    flags_of,
    oracle_jacobson_two_sided,
    oracle_nilpotents,
    oracle_units,
)


def test_zmod_basics(z6, z12):
    assert z6.card == 6
    assert z6.one == 1
    assert oracle_nilpotents(z12) == {0, 6}
    assert sorted(rl.nilpotents(z12)) == [0, 6]
    with pytest.raises(ConstructionError):
        rl.zmod(1)


def test_gf_basics():
    g = rl.gf(2, 2)
    assert g.card == 4
    assert oracle_units(g) == {1, 2, 3}


def test_gf_modulus_is_lexicographically_first_irreducible():
    # independent route: sympy irreducibility over GF(p), scanning the same
    # little-endian coefficient order
    for p, k in ((2, 2), (3, 2), (2, 3), (5, 2)):
        ring = rl.gf(p, k)
        x = sympy.symbols("x")
        found = None
        for t in range(p**k):
            coeffs = [(t // p**i) % p for i in range(k)] + [1]
            poly = sympy.Poly(list(reversed(coeffs)), x, modulus=p)
            if poly.is_irreducible:
                found = tuple(coeffs)
                break
        assert ring.modulus == found
    assert rl.gf(3, 2).modulus == (1, 0, 1)  # x**2 + 1


def test_gf_validation():
    with pytest.raises(ConstructionError):
        rl.gf(4, 2)
    with pytest.raises(ConstructionError):
        rl.gf(2, 5)


def test_matrix_ring_encoding(m2z2):
    assert m2z2.card == 16
    # identity digits are (1,0,0,1) row-major, entry (0,0) most significant
    assert m2z2.one == 1 * 2**3 + 0 * 2**2 + 0 * 2**1 + 1
    assert len(oracle_units(m2z2)) == 6  # |GL_2(F_2)|
    assert len(rl.units(m2z2)) == 6


def test_matrix_ring_guard():
    with pytest.raises(rl.GuardError) as err:
        rl.matrix_ring(3, rl.zmod(5))
    assert err.value.required == 5**9
    small = rl.matrix_ring(2, rl.zmod(2), max_card=16)
    assert small.card == 16
    with pytest.raises(rl.GuardError):
        rl.matrix_ring(2, rl.zmod(2), max_card=15)


def test_upper_triangular_cards_and_radical():
    assert rl.upper_triangular(2, rl.zmod(3)).card == 27
    assert rl.upper_triangular(3, rl.zmod(2)).card == 64
    T = rl.upper_triangular(2, rl.zmod(4))
    assert len(oracle_jacobson_two_sided(T)) == 16
    assert len(rl.jacobson(T)) == 16


def test_pattern_s2_matches_trivial_extension_flags():
    for n in range(2, 7):
        pat_ring = rl.pattern_subring(rl.s_pattern(2), rl.zmod(n))
        te_ring = rl.trivial_extension(rl.zmod(n))
        assert pat_ring.card == n * n
        assert flags_of(pat_ring) == flags_of(te_ring)


def test_u3_pattern_builds():
    ring = rl.pattern_subring(rl.u_pattern(3), rl.zmod(2))
    assert ring.card == 16


def test_pattern_closure_violation_names_a_witness():
    # Toeplitz superdiagonal inside a 3x3 frame with (0,2) forced to zero:
    # the square of such a matrix picks up b*b at (0,2).
    diag = tuple((i, i) for i in range(3))
    bad = Pattern(3, (diag, ((0, 1), (1, 2))), "bad")
    for n in (2, 3):
        with pytest.raises(ConstructionError, match="witness pair"):
            rl.pattern_subring(bad, rl.zmod(n))


def test_pattern_validation():
    with pytest.raises(ConstructionError):
        Pattern(2, (((0, 0), (0, 1)),), "mixed")  # diagonal mixed with upper
    with pytest.raises(ConstructionError):
        Pattern(2, (((0, 0),),), "no-diag")  # (1,1) uncovered
    with pytest.raises(ConstructionError):
        Pattern(2, (((0, 0),), ((1, 1),), ((1, 0),)), "lower")


def test_direct_product_encoding():
    prod = rl.direct_product(rl.zmod(2), rl.zmod(3))
    assert prod.card == 6
    assert prod.one == 1 * 3 + 1
    assert prod.format_element(prod.one) == "(1, 1)"


def test_product_matches_crt_flags():
    prod = rl.direct_product(rl.zmod(2), rl.zmod(3))
    assert flags_of(prod) == flags_of(rl.zmod(6))
    prod2 = rl.direct_product(rl.zmod(4), rl.zmod(9))
    assert flags_of(prod2) == flags_of(rl.zmod(36))


def test_trivial_extension():
    te = rl.trivial_extension(rl.zmod(3))
    assert te.card == 9
    for m in range(3):
        pair = 0 * 3 + m  # (0, m)
        assert te.mul(pair, pair) == te.zero
    assert rl.gwnc(rl.trivial_extension(rl.zmod(2)))[0] is True


def test_poly_quot():
    pq = rl.poly_quot(rl.zmod(2), [0, 0, 1])  # x**2
    assert pq.card == 4
    x = 2  # coefficient digits little-endian: index 2 is x
    assert rl.is_nilpotent(pq, x) == (True, 2)
    gf4 = rl.poly_quot(rl.zmod(2), [1, 1, 1])
    assert oracle_units(gf4) == {1, 2, 3}
    with pytest.raises(ConstructionError):
        rl.poly_quot(rl.zmod(3), [1, 2])  # not monic
    with pytest.raises(ConstructionError):
        rl.poly_quot(rl.matrix_ring(2, rl.zmod(2)), [0, 0, 1])  # noncommutative


def test_poly_quot_x2_flags_match_trivial_extension():
    for n in (2, 3, 4):
        assert flags_of(rl.poly_quot(rl.zmod(n), [0, 0, 1])) == flags_of(
            rl.trivial_extension(rl.zmod(n))
        )


def test_formal_matrix_zero_twist_kills_cross_terms():
    fm = rl.formal_matrix(2, 0, rl.zmod(2))
    e01 = 1 * 2**2  # digits (0,1,0,0)
    e10 = 1 * 2**1  # digits (0,0,1,0)
    assert fm.mul(e01, e10) == fm.zero
    assert fm.mul(e10, e01) == fm.zero


def test_formal_matrix_identity_twist_is_matrix_ring(m2z3):
    fm = rl.formal_matrix(2, 1, rl.zmod(3))
    ar = np.arange(81)
    left, right = np.repeat(ar, 81), np.tile(ar, 81)
    assert np.array_equal(fm.mul_vec(left, right), m2z3.mul_vec(left, right))
    assert np.array_equal(fm.add_vec(left, right), m2z3.add_vec(left, right))


def test_formal_matrix_agrees_with_generalized_matrix_square_twist():
    # the delta-exponent product at size 2 realises the generalized matrix
    # ring twisted by s**2
    base = rl.zmod(4)
    for s in (0, 1, 2, 3):
        fm = rl.formal_matrix(2, s, base)
        ks = rl.generalized_matrix_ring(base, base.mul(s, s))
        ar = np.arange(fm.card)
        left, right = np.repeat(ar, fm.card), np.tile(ar, fm.card)
        assert np.array_equal(fm.mul_vec(left, right), ks.mul_vec(left, right))


def test_formal_matrix_requires_central_twist():
    m = rl.matrix_ring(2, rl.zmod(2))
    e10 = 2  # digits (0,0,1,0): not central in M_2
    with pytest.raises(ConstructionError):
        rl.formal_matrix(2, e10, m)


def test_fm_gwnc_example():
    assert rl.gwnc(rl.build("FM(2,2,Z(4))"))[0] is True


def test_groups():
    c1 = rl.cyclic_group(1)
    assert c1.order == 1
    c4 = rl.cyclic_group(4)
    assert c4.element_order(1) == 4
    klein = rl.group_product(rl.cyclic_group(2), rl.cyclic_group(2))
    assert all(klein.element_order(g) == 2 for g in range(1, 4))
    assert klein.is_abelian and klein.is_p_group(2)
    with pytest.raises(ConstructionError):
        rl.FiniteGroup([[0, 1], [1, 1]], "bad")


def test_group_ring():
    rg = rl.group_ring(rl.zmod(2), rl.cyclic_group(2))
    assert rg.card == 4
    assert rg.one == 1  # 1 * g0
    z2c3 = rl.group_ring(rl.zmod(2), rl.cyclic_group(3))
    assert len(oracle_units(z2c3)) == 3
    assert len(rl.units(z2c3)) == 3


def test_augmentation():
    rg = rl.group_ring(rl.zmod(2), rl.cyclic_group(2))
    delta = rg.augmentation_ideal()
    assert len(delta) == 2  # {0, g0 + g1}
    assert rl.is_nil_subset(rg, delta)
    for a in rg.elements():
        total = rg.augmentation(a)
        assert total == sum(
            int(c) for c in decode_digits(np.array([a]), 2, 2)[0]
        ) % 2


def test_ideal_generated(z12):
    def saturate(ring, gens):
        members = set(gens) | {ring.zero}
        while True:
            fresh = set()
            for x in members:
                fresh.add(ring.neg(x))
                for y in members:
                    fresh.add(ring.add(x, y))
                for r in ring.elements():
                    fresh.add(ring.mul(r, x))
                    fresh.add(ring.mul(x, r))
            if fresh <= members:
                return members
            members |= fresh

    assert set(rl.ideal_generated(z12, [6])) == saturate(z12, [6]) == {0, 6}
    assert set(rl.ideal_generated(z12, [0])) == {0}
    assert set(rl.ideal_generated(z12, [1])) == set(range(12))


def test_quotient_by_ideal(z12):
    ideal = rl.ideal_generated(z12, [6])
    q = rl.quotient_by_ideal(z12, ideal)
    assert q.card == 6
    assert flags_of(q) == flags_of(rl.zmod(6))
    assert q.project(7) == q.project(1)
    assert q.lift(q.project(7)) == 1
    trivial = rl.quotient_by_ideal(z12, rl.ideal_generated(z12, [0]))
    assert trivial.card == 12
    assert flags_of(trivial) == flags_of(z12)


def test_quotient_of_triangular_by_strict_upper():
    T = rl.upper_triangular(2, rl.zmod(2))
    # classes are ordered (0,0), (0,1), (1,1); the strictly-upper generator
    # has digits (0,1,0), i.e. index 2
    strict = rl.ideal_generated(T, [2])
    assert sorted(strict) == [0, 2]
    q = rl.quotient_by_ideal(T, strict)
    assert q.card == 4
    from ringlab.structure import is_commutative

    assert is_commutative(q)


def test_quotient_rejects_non_ideal(z12):
    with pytest.raises(ConstructionError):
        rl.quotient_by_ideal(z12, rl.Subset.from_indices(z12, [0, 1]))


def test_dt_tower_matches_pattern_flags():
    for n in (2, 3):
        tower = rl.trivial_extension(rl.trivial_extension(rl.zmod(n)))
        frame = rl.pattern_subring(rl.double_extension_pattern(), rl.zmod(n))
        assert flags_of(tower) == flags_of(frame)

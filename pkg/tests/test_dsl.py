import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ringlab as rl
from ringlab import dsl
from ringlab.dsl import (
    CyclicExpr,
    FMExpr,
    GFExpr,
    GRExpr,
    GroupProductExpr,
    MatExpr,
    ModJExpr,
    ParseError,
    PatExpr,
    PQExpr,
    ProductExpr,
    TEExpr,
    TriExpr,
    ZExpr,
    build,
    canonical,
    parse,
)


def test_parse_examples():
    assert parse("M(2,Z(3))") == MatExpr(2, ZExpr(3))
    assert parse("Z(2) x Z(3) x Z(3)") == ProductExpr(
        ProductExpr(ZExpr(2), ZExpr(3)), ZExpr(3)
    )
    assert parse("GR(Z(2),C(2) x C(2))") == GRExpr(
        ZExpr(2), GroupProductExpr(CyclicExpr(2), CyclicExpr(2))
    )
    assert parse("PAT(S(2,2),Z(3))") == PatExpr("S", (2, 2), ZExpr(3))
    assert parse("PQ(Z(2),[0,0,1])") == PQExpr(ZExpr(2), (0, 0, 1))
    assert parse("MODJ(Z(12))") == ModJExpr(ZExpr(12))


def test_whitespace_insensitive():
    assert parse("Z( 6 )") == ZExpr(6)
    assert parse("Z(2)xZ(3)") == parse("Z(2) x Z(3)")
    assert parse(" M( 2 , Z(3) ) ") == parse("M(2,Z(3))")


def test_parse_validation_errors():
    with pytest.raises(ParseError, match="matrix size must be >= 1"):
        parse("M(0,Z(2))")
    with pytest.raises(ParseError, match="modulus must be >= 2"):
        parse("Z(1)")
    with pytest.raises(ParseError, match="formal matrix size"):
        parse("FM(1,0,Z(2))")
    with pytest.raises(ParseError, match="degree must be >= 1"):
        parse("PQ(Z(2),[1])")
    with pytest.raises(ParseError, match="expected RPAREN"):
        parse("PAT(S(2,2,2),Z(2))")  # patname takes at most two naturals
    with pytest.raises(ParseError, match="does not take 1 argument"):
        parse("PAT(Tb(2),Z(2))")
    with pytest.raises(ParseError, match="arguments must be >= 2"):
        parse("PAT(U(1),Z(2))")
    with pytest.raises(ParseError, match="unknown constructor"):
        parse("Q(2)")


def test_parse_positions():
    try:
        parse("M(2,Z(3)")
    except ParseError as err:
        assert err.offset == 8
        assert "RPAREN" in err.expected
    else:
        raise AssertionError("expected a parse error")
    try:
        parse("Z(5) y")
    except ParseError as err:
        assert err.offset == 5
    else:
        raise AssertionError("expected a parse error")


def test_canonical_examples():
    assert canonical(parse("Z( 6 )")) == "Z(6)"
    assert canonical(parse("Z(2) x Z(3)")) == "(Z(2) x Z(3))"
    assert canonical(parse("Z(2) x Z(3) x Z(3)")) == "((Z(2) x Z(3)) x Z(3))"
    assert canonical(parse("GR(Z(2),C(2) x C(2))")) == "GR(Z(2),C(2) x C(2))"


def _random_ring_expr(rng, depth):
    if depth == 0:
        if rng.random() < 0.7:
            return ZExpr(rng.randint(2, 12))
        return GFExpr(rng.choice([2, 3, 5, 7]), rng.randint(1, 4))
    inner = _random_ring_expr(rng, depth - 1)
    pick = rng.randrange(9)
    if pick == 0:
        return MatExpr(rng.randint(1, 3), inner)
    if pick == 1:
        return TriExpr(rng.randint(1, 3), inner)
    if pick == 2:
        return TEExpr(inner)
    if pick == 3:
        coeffs = tuple(rng.randint(0, 9) for _ in range(rng.randint(1, 3))) + (1,)
        return PQExpr(inner, coeffs)
    if pick == 4:
        return FMExpr(rng.randint(2, 3), rng.randint(0, 9), inner)
    if pick == 5:
        grp = CyclicExpr(rng.randint(1, 6))
        if rng.random() < 0.4:
            grp = GroupProductExpr(grp, CyclicExpr(rng.randint(1, 4)))
        return GRExpr(inner, grp)
    if pick == 6:
        return ModJExpr(inner)
    if pick == 7:
        name = rng.choice(["S", "Tb", "U"])
        if name == "S":
            args = (rng.randint(2, 4),) if rng.random() < 0.5 else (2, rng.randint(2, 4))
        elif name == "Tb":
            args = (2, rng.randint(2, 4))
        else:
            args = (rng.randint(2, 4),)
        return PatExpr(name, args, inner)
    return ProductExpr(inner, _random_ring_expr(rng, depth - 1))


def test_roundtrip_on_1000_random_expressions():
    rng = random.Random(20240811)
    for _ in range(1000):
        expr = _random_ring_expr(rng, rng.randint(0, 3))
        text = canonical(expr)
        assert parse(text) == expr
        assert canonical(parse(text)) == text


@st.composite
def ring_expr_strategy(draw, depth=2):
    if depth == 0:
        return draw(
            st.one_of(
                st.integers(2, 12).map(ZExpr),
                st.builds(GFExpr, st.sampled_from([2, 3, 5]), st.integers(1, 4)),
            )
        )
    inner = draw(ring_expr_strategy(depth=depth - 1))
    choice = draw(st.integers(0, 5))
    if choice == 0:
        return MatExpr(draw(st.integers(1, 3)), inner)
    if choice == 1:
        return TEExpr(inner)
    if choice == 2:
        coeffs = tuple(draw(st.lists(st.integers(0, 9), min_size=1, max_size=3))) + (1,)
        return PQExpr(inner, coeffs)
    if choice == 3:
        return GRExpr(inner, CyclicExpr(draw(st.integers(1, 5))))
    if choice == 4:
        return ProductExpr(inner, draw(ring_expr_strategy(depth=0)))
    return TriExpr(draw(st.integers(1, 3)), inner)


@given(ring_expr_strategy())
@settings(max_examples=200, deadline=None)
def test_roundtrip_property(expr):
    assert parse(canonical(expr)) == expr


def test_build_examples():
    assert build("Z(6)").card == 6
    assert build("FM(2,2,Z(4))").card == 256
    assert build("PAT(U(3),Z(2))").card == 16
    assert build("MODJ(Z(12))").card == 6
    assert build("GR(Z(2),C(2) x C(2))").card == 16


def test_build_guard_reports_required_card():
    with pytest.raises(rl.GuardError) as err:
        build("M(3,Z(5))")
    assert err.value.required == 1953125
    assert err.value.limit == 200000
    with pytest.raises(rl.GuardError):
        build("M(2,Z(5))", max_card=100)


def test_estimated_card_matches_built_card():
    for text in (
        "Z(9)",
        "GF(2,3)",
        "M(2,Z(3))",
        "T(3,Z(2))",
        "TE(Z(5))",
        "PQ(Z(3),[0,0,0,1])",
        "FM(2,1,Z(3))",
        "GR(Z(3),C(3))",
        "PAT(Tb(2,2),Z(3))",
        "(Z(2) x Z(9))",
    ):
        assert dsl.estimated_card(parse(text)) == build(text).card


def test_build_is_deterministic():
    a = build("T(2,Z(4))")
    b = build("T(2,Z(4))")
    ar = np.arange(a.card)
    left, right = np.repeat(ar, a.card), np.tile(ar, a.card)
    assert np.array_equal(a.mul_vec(left, right), b.mul_vec(left, right))
    assert np.array_equal(a.add_vec(left, right), b.add_vec(left, right))


def test_build_monic_enforcement():
    with pytest.raises(rl.ConstructionError):
        build("PQ(Z(3),[1,2])")
    with pytest.raises(IndexError):
        build("PQ(Z(3),[5,1])")  # coefficient outside the carrier


def test_build_fm_s_is_element_index():
    with pytest.raises(IndexError):
        build("FM(2,7,Z(4))")

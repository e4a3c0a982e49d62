from fractions import Fraction

import pytest
from hypothesis import given

from basenorm.errors import NegativeInput, NotSymmetric
from basenorm.exact import dot
from basenorm.geometry import Polytope, hexagon
from basenorm.normed import (
    Cmp,
    NormBound,
    SpaceDesc,
    direct_sum_norm,
    dual_norm,
    dual_norm_witness,
    ev,
    l1,
    l2,
    linf,
    norm_cmp,
    norm_value,
    polytopal,
)
from basenorm.geometry import square

from conftest import vectors

HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)


def test_norm_cmp_examples():
    assert norm_cmp(l2(2), (Fraction(3, 5), Fraction(4, 5)), 1) == Cmp.EQUAL
    assert norm_cmp(linf(2), (1, -2), 1) == Cmp.GREATER
    assert norm_cmp(polytopal(square(2)), (HALF, QUARTER), HALF) == Cmp.EQUAL


def test_norm_value_examples():
    assert norm_value(l1(2), (HALF, Fraction(-1, 3))) == Fraction(5, 6)
    assert norm_value(l2(2), (3, 4)) == 5
    b = norm_value(l2(2), (1, 1), Fraction(1, 100))
    assert isinstance(b, NormBound)
    assert b.width <= Fraction(1, 100)
    assert b.lower ** 2 <= 2 <= b.upper ** 2


@given(vectors(3))
def test_l2_bracket_brackets_the_square(x):
    v = norm_value(l2(3), x, Fraction(1, 1000))
    if isinstance(v, NormBound):
        assert v.lower ** 2 <= dot(x, x) <= v.upper ** 2
    else:
        assert v * v == dot(x, x)


def test_direct_sum_norm():
    assert direct_sum_norm("one", 2, 3) == 5
    assert direct_sum_norm("inf", 2, 3) == 3
    assert direct_sum_norm("inf", 0, 0) == 0
    with pytest.raises(NegativeInput):
        direct_sum_norm("one", -1, 0)


def test_dual_norm_examples():
    assert dual_norm(l1(2), (1, -2)) == 2
    assert dual_norm(linf(2), (1, -2)) == 3


@given(vectors(2))
def test_hexagon_dual_norm_is_lp_maximum(phi):
    # oracle: a linear functional attains its max over a polytope at a vertex
    H = polytopal(hexagon())
    oracle = max(dot(phi, v) for v in hexagon().vertices)
    assert dual_norm(H, phi) == oracle
    value, w = dual_norm_witness(H, phi)
    assert value == oracle and dot(phi, w) == value and H.compare(w, 1) != Cmp.GREATER


@given(vectors(2))
def test_polar_dual_witness_from_lp(phi):
    P = polytopal(hexagon()).dual()
    value, w = dual_norm_witness(P, phi)
    assert value == dual_norm(P, phi) == polytopal(hexagon()).norm_of(phi)
    assert dot(phi, w) == value and P.compare(w, 1) != Cmp.GREATER


@given(vectors(3), vectors(3))
def test_holder(x, phi):
    for space in (l1(3), linf(3), polytopal(square(3))):
        assert abs(dot(x, phi)) <= space.norm_of(x) * dual_norm(space, phi)


def test_dual_is_an_involution():
    for space in (l1(2), l2(2), linf(2), polytopal(hexagon())):
        assert space.dual().dual() == space


def test_space_json_round_trip():
    for space in (l1(2), l2(3), polytopal(hexagon()), polytopal(hexagon()).dual()):
        assert SpaceDesc.from_json(space.to_json()) == space


def test_polytopal_space_needs_symmetric_ball():
    with pytest.raises(NotSymmetric):
        polytopal(Polytope(2, ((1, 0), (0, 1), (-1, -1))))


def test_ev():
    assert ev((1, 2))((3, 4)) == 11
    assert ev((0, 0))((5, -7)) == 0

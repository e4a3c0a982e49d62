from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from basenorm import geometry
from basenorm.errors import DimensionMismatch, EmptyInput, NegativeScale, NotAbsorbing, NotSymmetric
from basenorm.geometry import (
    Polytope,
    absolutely_convex_hull,
    convex_hull,
    cross_polytope,
    gauge,
    gauge_decomposition,
    hexagon,
    membership,
    radial_check,
    square,
)

from conftest import nonneg, rationals, vectors


def monotone_chain(points):
    """Andrew's monotone chain: strict hull vertices of planar points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return set(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return set(lower[:-1] + upper[:-1])


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def test_interior_point_removed():
    P = convex_hull([(0, 0), (1, 0), (0, 1), (Fraction(1, 4), Fraction(1, 4))])
    assert set(P.vertices) == {F(0, 0), F(1, 0), F(0, 1)}


def test_single_point():
    assert convex_hull([(2, 3)]).vertices == (F(2, 3),)


def test_centroid_is_redundant():
    P = convex_hull([(1, 0), (0, 1), (-1, -1), (0, 0)])
    assert set(P.vertices) == {F(1, 0), F(0, 1), F(-1, -1)}


def test_absco_examples():
    assert set(absolutely_convex_hull([(1, 0), (0, 1)]).vertices) == set(cross_polytope(2).vertices)
    assert set(absolutely_convex_hull([(1, 1), (1, -1)]).vertices) == set(square(2).vertices)


def test_hexagon_against_monotone_chain():
    tri = [F(1, 0), F(0, 1), F(-1, -1)]
    pts = tri + [tuple(-c for c in p) for p in tri]
    assert set(hexagon().vertices) == monotone_chain(pts)
    assert len(hexagon().vertices) == 6


@given(st.lists(vectors(2), min_size=1, max_size=9))
def test_hull_matches_monotone_chain(points):
    # collinear middle points are dropped by both
    pts = [tuple(p) for p in points]
    assert set(convex_hull(pts).vertices) == monotone_chain(pts)


def test_hull_errors():
    with pytest.raises(EmptyInput):
        convex_hull([])
    with pytest.raises(DimensionMismatch):
        convex_hull([(1, 2), (1, 2, 3)])


@pytest.mark.parametrize(
    "ball, x, g",
    [
        (square(2), (Fraction(1, 2), Fraction(1, 4)), Fraction(1, 2)),
        (cross_polytope(2), (Fraction(1, 2), Fraction(1, 4)), Fraction(3, 4)),
        (hexagon(), (0, 0), 0),
    ],
)
def test_gauge_examples(ball, x, g):
    assert gauge(ball, x) == g


@given(vectors(3))
def test_gauge_of_square_and_cross_match_closed_forms(x):
    assert gauge(square(3), x) == max(abs(c) for c in x)
    assert gauge(cross_polytope(3), x) == sum(abs(c) for c in x)


@given(vectors(2), rationals)
def test_gauge_is_absolutely_homogeneous(x, q):
    B = hexagon()
    assert gauge(B, tuple(q * c for c in x)) == abs(q) * gauge(B, x)


@given(vectors(2), vectors(2))
def test_gauge_subadditive(x, y):
    B = hexagon()
    assert gauge(B, tuple(a + b for a, b in zip(x, y))) <= gauge(B, x) + gauge(B, y)


@given(vectors(2))
def test_gauge_decomposition_certificate(x):
    B = hexagon()
    g, w = gauge_decomposition(B, x)
    assert sum(w) == g and all(c >= 0 for c in w)
    assert tuple(sum(wi * v[k] for wi, v in zip(w, B.vertices)) for k in range(2)) == tuple(x)


def test_gauge_needs_a_ball():
    with pytest.raises(NotSymmetric):
        gauge(Polytope(2, ((1, 0), (0, 1), (-1, -1))), (0, 0))
    with pytest.raises(NotAbsorbing):
        gauge(Polytope(2, ((1, 0), (-1, 0))), (0, 0))


def test_membership_examples():
    assert membership(square(2), (1, 1), 1)
    assert not membership(square(2), (1, 1), Fraction(1, 2))
    centroid = (0, 0)
    assert membership(hexagon(), centroid, Fraction(1, 7))
    with pytest.raises(NegativeScale):
        membership(square(2), (0, 0), -1)


@given(vectors(2), nonneg)
def test_membership_agrees_with_gauge(x, t):
    assert membership(hexagon(), x, t) == (gauge(hexagon(), x) <= t)


def test_radial_check():
    assert radial_check(square(2)) == geometry.RadialReport(True, True, True)
    seg = radial_check(Polytope(2, ((1, 0), (-1, 0))))
    assert seg.bounded and seg.compact and not seg.absorbing


def test_polytope_json_round_trip():
    P = hexagon()
    assert Polytope.from_json(P.to_json()) == P

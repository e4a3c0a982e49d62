"""Rational polytopes in V-representation: hulls, gauges, membership."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from basenorm.errors import (
    DimensionMismatch,
    EmptyInput,
    NegativeScale,
    NotAbsorbing,
    NotSymmetric,
)
from basenorm.exact import (
    OPTIMAL,
    LinearProgram,
    fmt,
    lp_solve,
    rank,
    rat,
    vec,
)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple

    def __post_init__(self):
        verts = tuple(vec(v) for v in self.vertices)
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        for v in verts:
            if len(v) != self.dim:
                raise DimensionMismatch(f"vertex {v} is not {self.dim}-dimensional")
        object.__setattr__(self, "vertices", verts)

    def is_symmetric(self) -> bool:
        vs = set(self.vertices)
        return all(tuple(-c for c in v) in vs for v in vs)

    def is_full_dimensional(self) -> bool:
        # for a symmetric set 0 is the barycentre, so this is "0 is interior"
        return rank(self.vertices) == self.dim

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [[fmt(c) for c in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "Polytope":
        return cls(int(data["dim"]), tuple(vec(v) for v in data["vertices"]))


def _check_points(points: Sequence) -> list:
    pts = [vec(p) for p in points]
    if not pts:
        raise EmptyInput("at least one point is required")
    d = len(pts[0])
    if d == 0 or any(len(p) != d for p in pts):
        raise DimensionMismatch("points must share one positive dimension")
    return pts


def convex_weights(points: Sequence[tuple], target: tuple):
    """Convex weights expressing ``target`` over ``points``, or None."""
    d = len(target)
    n = len(points)
    cons = [([p[k] for p in points], "=", target[k]) for k in range(d)]
    cons.append(([1] * n, "=", 1))
    out = lp_solve(LinearProgram([0] * n, cons))
    return out.witness if out.status == OPTIMAL else None


def convex_hull(points: Iterable) -> Polytope:
    """Irredundant vertex list of ``co(points)``, in first-seen order.

    Each candidate is dropped when an LP finds it as a convex combination
    of the remaining candidates.
    """
    pts = _check_points(list(points))
    unique = list(dict.fromkeys(pts))
    keep = list(unique)
    for p in unique:
        others = [q for q in keep if q != p]
        if others and convex_weights(others, p) is not None:
            keep = others
    return Polytope(len(pts[0]), tuple(keep))


def absolutely_convex_hull(points: Iterable) -> Polytope:
    pts = _check_points(list(points))
    return convex_hull(pts + [tuple(-c for c in p) for p in pts])


def _require_ball(B: Polytope) -> None:
    if not B.is_symmetric():
        raise NotSymmetric("polytope is not symmetric about the origin")
    if not B.is_full_dimensional():
        raise NotAbsorbing("0 is not an interior point (polytope is degenerate)")


def gauge_decomposition(B: Polytope, x: Sequence):
    """Minkowski gauge of ``x`` plus nonnegative vertex weights attaining it.

    The weights ``w`` satisfy ``sum(w_i v_i) == x`` and ``sum(w) == gauge``.
    """
    _require_ball(B)
    x = vec(x)
    if len(x) != B.dim:
        raise DimensionMismatch(f"point has {len(x)} coordinates, ball is {B.dim}-dimensional")
    n = len(B.vertices)
    cons = [([v[k] for v in B.vertices], "=", x[k]) for k in range(B.dim)]
    out = lp_solve(LinearProgram([1] * n, cons))
    # 0 interior guarantees feasibility and boundedness
    assert out.status == OPTIMAL, out.status
    return out.optimum, out.witness


def gauge(B: Polytope, x: Sequence) -> Fraction:
    """``inf {t >= 0 : x in t B}`` for a symmetric, full-dimensional B."""
    return gauge_decomposition(B, x)[0]


def membership(B: Polytope, x: Sequence, t) -> bool:
    """Whether ``x`` lies in ``t B``, decided as an LP feasibility problem."""
    t = rat(t)
    if t < 0:
        raise NegativeScale("scale must be nonnegative")
    x = vec(x)
    if len(x) != B.dim:
        raise DimensionMismatch("point and polytope dimensions differ")
    n = len(B.vertices)
    cons = [([v[k] for v in B.vertices], "=", x[k]) for k in range(B.dim)]
    cons.append(([1] * n, "=", t))
    return lp_solve(LinearProgram([0] * n, cons)).status == OPTIMAL


@dataclass(frozen=True)
class RadialReport:
    bounded: bool
    compact: bool
    absorbing: bool


def radial_check(B: Polytope) -> RadialReport:
    """Radial boundedness / compactness of a polytope.

    A polytope is a finite hull, so it meets every line through the origin
    in a closed segment; both properties hold. ``absorbing`` records
    whether the gauge is actually defined (0 interior).
    """
    return RadialReport(True, True, B.is_symmetric() and B.is_full_dimensional())


def square(dim: int = 2) -> Polytope:
    """Unit ball of l-infinity(dim)."""
    return Polytope(dim, tuple(product((Fraction(1), Fraction(-1)), repeat=dim)))


def cross_polytope(dim: int = 2) -> Polytope:
    """Unit ball of l1(dim)."""
    verts = []
    for i in range(dim):
        for s in (1, -1):
            verts.append(tuple(Fraction(s if j == i else 0) for j in range(dim)))
    return Polytope(dim, tuple(verts))


def hexagon() -> Polytope:
    """absco of the triangle (1,0), (0,1), (-1,-1)."""
    return absolutely_convex_hull([(1, 0), (0, 1), (-1, -1)])

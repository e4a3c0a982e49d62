"""Finite-dimensional normed spaces with exactly decidable norms.

Supported norms are l1, l2, l-infinity, the gauge of a symmetric
polytope (``polytopal``), and its dual, the support function of the same
polytope (``polar``). L2 norms are handled through squared comparisons
and rational brackets, never through square roots.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from basenorm import geometry
from basenorm.errors import DimensionMismatch, NegativeInput, NotSymmetric, NotAbsorbing
from basenorm.exact import (
    OPTIMAL,
    LinearProgram,
    dot,
    fmt,
    is_square,
    lp_solve,
    rat,
    vec,
)
from basenorm.geometry import Polytope

NORM_KINDS = ("l1", "l2", "linf", "polytopal", "polar")
DEFAULT_PRECISION = Fraction(1, 10**6)


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Cmp":
        return cls((a > b) - (a < b))


@dataclass(frozen=True)
class NormBound:
    """Rational bracket ``lower <= norm <= upper``."""

    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, q) -> bool:
        return self.lower <= q <= self.upper

    def to_json(self) -> dict:
        return {"lower": fmt(self.lower), "upper": fmt(self.upper)}


Scalar = Union[Fraction, NormBound]


@dataclass(frozen=True)
class SpaceDesc:
    dim: int
    norm: str
    ball: Optional[Polytope] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.norm not in NORM_KINDS:
            raise ValueError(f"unknown norm kind {self.norm!r}")
        if self.norm in ("polytopal", "polar"):
            if self.ball is None or self.ball.dim != self.dim:
                raise DimensionMismatch("polytopal spaces need a ball of matching dimension")
            if not self.ball.is_symmetric():
                raise NotSymmetric("ball must be symmetric")
            if not self.ball.is_full_dimensional():
                raise NotAbsorbing("ball must have 0 as an interior point")
        elif self.ball is not None:
            raise ValueError(f"{self.norm} spaces do not take a ball")

    def __str__(self) -> str:
        return f"{self.norm}({self.dim})"

    def check(self, x: Sequence) -> tuple:
        x = vec(x)
        if len(x) != self.dim:
            raise DimensionMismatch(f"{len(x)}-vector in {self}")
        return x

    def zero(self) -> tuple:
        return (Fraction(0),) * self.dim

    def dual(self) -> "SpaceDesc":
        swap = {"l1": "linf", "linf": "l1", "l2": "l2", "polytopal": "polar", "polar": "polytopal"}
        return SpaceDesc(self.dim, swap[self.norm], self.ball)

    def ball_vertices(self) -> Optional[tuple]:
        """Extreme points of the closed unit ball when there are finitely many
        and they are known without vertex enumeration."""
        if self.norm == "l1":
            return geometry.cross_polytope(self.dim).vertices
        if self.norm == "linf":
            return geometry.square(self.dim).vertices
        if self.norm == "polytopal":
            return self.ball.vertices
        return None

    def norm_of(self, x: Sequence) -> Optional[Fraction]:
        """Exact norm, or None when it is irrational (L2 only)."""
        x = self.check(x)
        if self.norm == "l1":
            return sum((abs(c) for c in x), Fraction(0))
        if self.norm == "linf":
            return max(abs(c) for c in x)
        if self.norm == "l2":
            return is_square(dot(x, x))
        if self.norm == "polytopal":
            return geometry.gauge(self.ball, x)
        return max(abs(dot(x, v)) for v in self.ball.vertices)

    def compare(self, x: Sequence, t) -> Cmp:
        x = self.check(x)
        t = rat(t)
        if t < 0:
            return Cmp.GREATER
        if self.norm == "l2":
            return Cmp.of(dot(x, x), t * t)
        return Cmp.of(self.norm_of(x), t)

    def to_json(self):
        if self.norm in ("polytopal", "polar"):
            kind = {self.norm: self.ball.to_json()}
        else:
            kind = self.norm
        return {"dim": self.dim, "norm": kind}

    @classmethod
    def from_json(cls, data: dict) -> "SpaceDesc":
        kind = data["norm"]
        if isinstance(kind, dict):
            ((name, ball),) = kind.items()
            return cls(int(data["dim"]), name, Polytope.from_json(ball))
        return cls(int(data["dim"]), kind)


def l1(dim: int) -> SpaceDesc:
    return SpaceDesc(dim, "l1")


def l2(dim: int) -> SpaceDesc:
    return SpaceDesc(dim, "l2")


def linf(dim: int) -> SpaceDesc:
    return SpaceDesc(dim, "linf")


def polytopal(ball: Polytope) -> SpaceDesc:
    return SpaceDesc(ball.dim, "polytopal", ball)


def norm_cmp(space: SpaceDesc, x: Sequence, t) -> Cmp:
    """Exact trichotomy of ``||x||`` against ``t``."""
    return space.compare(x, t)


def norm_value(space: SpaceDesc, x: Sequence, precision=DEFAULT_PRECISION) -> Scalar:
    """Exact norm, or for irrational L2 norms a bracket of width <= precision.

    The bracket is found by bisection driven by :func:`norm_cmp`, so it only
    ever compares squares.
    """
    precision = rat(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    exact = space.norm_of(x)
    if exact is not None:
        return exact
    x = space.check(x)
    lo = max(abs(c) for c in x)  # ||x||_inf <= ||x||_2 <= ||x||_1
    hi = sum((abs(c) for c in x), Fraction(0))
    while hi - lo > precision:
        mid = (lo + hi) / 2
        c = space.compare(x, mid)
        if c == Cmp.EQUAL:
            return mid
        if c == Cmp.GREATER:
            lo = mid
        else:
            hi = mid
    return NormBound(lo, hi)


def direct_sum_norm(kind: str, a, b) -> Fraction:
    """Norm of a pair from its component norms in the l1 or l-infinity sum."""
    a, b = rat(a), rat(b)
    if a < 0 or b < 0:
        raise NegativeInput("component norms are nonnegative")
    if kind == "one":
        return a + b
    if kind == "inf":
        return max(a, b)
    raise ValueError("kind must be 'one' or 'inf'")


def dual_norm(space: SpaceDesc, phi: Sequence, precision=DEFAULT_PRECISION) -> Scalar:
    """Operator norm of the coordinate functional ``phi`` on ``space``."""
    return norm_value(space.dual(), space.check(phi), precision)


def dual_norm_witness(space: SpaceDesc, phi: Sequence):
    """``(||phi||_*, x)`` with ``x`` in Ball(space) and ``phi(x) == ||phi||_*``.

    ``x`` is a ball vertex where one is known (the Hoelder witnesses for
    l1/l-infinity, a polytope vertex otherwise); for ``polar`` spaces it comes
    from an LP over the H-description. Returns None for irrational L2 norms.
    """
    phi = space.check(phi)
    if space.norm == "l2":
        value = is_square(dot(phi, phi))
        if value is None:
            return None
        if value == 0:
            return value, space.zero()
        return value, tuple(c / value for c in phi)
    if space.norm == "polar":
        n = space.dim
        cons = []
        for v in space.ball.vertices:
            cons.append((v, "<=", 1))
        out = lp_solve(LinearProgram(phi, cons, sense="max", bounds=[(None, None)] * n))
        assert out.status == OPTIMAL
        return out.optimum, out.witness
    best = None
    for v in space.ball_vertices():
        val = dot(phi, v)
        if best is None or val > best[0]:
            best = (val, v)
    return best


@dataclass(frozen=True)
class Ev:
    """``ev(x)``: the element x acting on the dual by ``phi |-> phi(x)``."""

    vector: tuple

    def __call__(self, phi: Sequence) -> Fraction:
        phi = vec(phi)
        if len(phi) != len(self.vector):
            raise DimensionMismatch("functional and vector dimensions differ")
        return dot(phi, self.vector)


def ev(x: Sequence) -> Ev:
    return Ev(vec(x))

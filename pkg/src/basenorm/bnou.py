"""The base-norm space BN(E) and the order-unit space OU(E).

Both live on E x R and share the positive cone ``{(x, y) : ||x|| <= y}``.
BN(E) carries the trace ``(x, y) |-> y`` and the norm ``max(||x||, |y|)``;
OU(E) carries the unit ``(0, 1)`` and the norm ``||x|| + |y|``.

``E`` is either a finite-dimensional :class:`~basenorm.normed.SpaceDesc` or
a :class:`~basenorm.sequences.SeqSpace`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from basenorm.errors import BoundTooSmall, NotPositive, SpaceMismatch
from basenorm.exact import fmt, rat, rat_ceil, vec
from basenorm.geometry import Polytope, convex_hull
from basenorm.normed import (
    DEFAULT_PRECISION,
    Cmp,
    NormBound,
    SpaceDesc,
    direct_sum_norm,
    norm_value,
)
from basenorm.sequences import SeqRep, SeqSpace, TailLimit

Space = Union[SpaceDesc, SeqSpace]


def vadd(x, y, b: Fraction = Fraction(1)):
    """``x + b*y`` for coordinate tuples, sequence reps or tail-limit functionals."""
    if isinstance(x, tuple):
        return tuple(p + b * q for p, q in zip(x, y))
    if isinstance(x, TailLimit):
        return TailLimit(x.scale + b * y.scale)
    return x + y.scale(b)


def vscale(x, q: Fraction):
    if isinstance(x, tuple):
        return tuple(q * c for c in x)
    if isinstance(x, TailLimit):
        return TailLimit(q * x.scale)
    return x.scale(q)


def space_json(space: Space):
    return space.to_json()


def vector_json(x):
    if isinstance(x, tuple):
        return [fmt(c) for c in x]
    return x.to_json()


@dataclass(frozen=True)
class _ProductElem:
    space: Space
    x: object
    scalar: Fraction

    def __post_init__(self):
        x = self.x
        if isinstance(self.space, SpaceDesc):
            x = self.space.check(x)
        else:
            self.space.check(x)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "scalar", rat(self.scalar))

    def _same(self, other) -> None:
        if type(other) is not type(self) or other.space != self.space:
            raise SpaceMismatch(f"{self.space} and {getattr(other, 'space', other)} differ")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.space, vadd(self.x, other.x), self.scalar + other.scalar)

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.space, vadd(self.x, other.x, Fraction(-1)), self.scalar - other.scalar)

    def __neg__(self):
        return self.scale(-1)

    def equals(self, other) -> bool:
        """Value equality (sequence reps may differ structurally)."""
        if type(other) is not type(self) or other.space != self.space:
            return False
        if self.scalar != other.scalar:
            return False
        if isinstance(self.x, SeqRep):
            return self.x.same_values(other.x)
        return self.x == other.x

    def scale(self, q):
        q = rat(q)
        return type(self)(self.space, vscale(self.x, q), q * self.scalar)

    def norm_x(self, precision=DEFAULT_PRECISION):
        """``||x||_E``: a Fraction, or a NormBound for irrational L2 norms."""
        if isinstance(self.space, SpaceDesc):
            return norm_value(self.space, self.x, precision)
        return self.space.norm_of(self.x)

    def cmp_x(self, t) -> Cmp:
        return self.space.compare(self.x, t)

    def in_cone(self) -> bool:
        return self.cmp_x(self.scalar) != Cmp.GREATER

    def to_json(self) -> dict:
        return {
            "type": self._tag,
            "space": space_json(self.space),
            "x": vector_json(self.x),
            "scalar": fmt(self.scalar),
        }


@dataclass(frozen=True)
class BNElem(_ProductElem):
    _tag = "bn"

    @property
    def y(self) -> Fraction:
        return self.scalar


@dataclass(frozen=True)
class OUElem(_ProductElem):
    _tag = "ou"

    @property
    def lam(self) -> Fraction:
        return self.scalar


def leq(a: _ProductElem, b: _ProductElem) -> bool:
    """The cone order: ``b - a`` is positive."""
    return (b - a).in_cone()


def bn_cone_member(e: BNElem) -> bool:
    return e.in_cone()


def bn_trace(e: BNElem) -> Fraction:
    return e.y


def bn_base_member(e: BNElem) -> bool:
    return e.y == 1 and e.in_cone()


def _max_scalar(n, s: Fraction):
    if isinstance(n, NormBound):
        return NormBound(max(n.lower, s), max(n.upper, s))
    return direct_sum_norm("inf", n, s)


def bn_norm(e: BNElem, precision=DEFAULT_PRECISION):
    """``max(||x||, |y|)``, a NormBound only when ``||x||`` is irrational."""
    return _max_scalar(e.norm_x(precision), abs(e.y))


def bn_positive_decompose(e: BNElem, r):
    """Split ``e`` as ``(x, r) - (0, r - y)`` with both parts positive.

    ``r`` is any rational upper bound on ``||x||`` that is also at least
    ``y``; exact norms are never needed.
    """
    r = rat(r)
    if e.cmp_x(r) == Cmp.GREATER:
        raise BoundTooSmall(f"{fmt(r)} is below ||x||")
    if r < e.y:
        raise BoundTooSmall(f"{fmt(r)} is below the trace {fmt(e.y)}")
    plus = BNElem(e.space, e.x, r)
    minus = BNElem(e.space, e.space.zero(), r - e.y)
    assert plus.in_cone() and minus.in_cone() and (plus - minus).equals(e)
    return plus, minus


def ou_cone_member(e: OUElem) -> bool:
    return e.in_cone()


def ou_unit(space: Space) -> OUElem:
    return OUElem(space, space.zero(), Fraction(1))


def ou_norm(e: OUElem, precision=DEFAULT_PRECISION):
    """``||x|| + |lam|``."""
    n = e.norm_x(precision)
    if isinstance(n, NormBound):
        return NormBound(n.lower + abs(e.lam), n.upper + abs(e.lam))
    return direct_sum_norm("one", n, abs(e.lam))


def ou_order_bound(e: OUElem, r, strict: bool = False) -> int:
    """Integer n with ``e <= n u``, namely ``ceil(r + lam)``.

    ``r`` is a rational upper bound on ``||x||``. The bound holds for every
    element, positive or not; pass ``strict=True`` to insist on a positive
    ``e`` as in the order-unit argument.
    """
    r = rat(r)
    if strict and not e.in_cone():
        raise NotPositive("element is not in the positive cone")
    if e.cmp_x(r) == Cmp.GREATER:
        raise BoundTooSmall(f"{fmt(r)} is below ||x||")
    n = rat_ceil(r + e.lam)
    assert leq(e, ou_unit(e.space).scale(n))
    return n


def effect_member(e: OUElem) -> bool:
    """``0 <= e <= u``, i.e. ``||x|| <= lam`` and ``||x|| <= 1 - lam``."""
    return e.cmp_x(e.lam) != Cmp.GREATER and e.cmp_x(1 - e.lam) != Cmp.GREATER


def bn_unit_ball(space: SpaceDesc) -> Polytope:
    """Ball(E) x [-1, 1] as an explicit polytope (E with finitely many ball vertices)."""
    verts = space.ball_vertices()
    pts = [tuple(v) + (s,) for v in verts for s in (Fraction(1), Fraction(-1))]
    return convex_hull(pts)


def ou_unit_ball(space: SpaceDesc) -> Polytope:
    """co(Ball(E) x {0} u {(0, +-1)}) as an explicit polytope."""
    verts = space.ball_vertices()
    pts = [tuple(v) + (Fraction(0),) for v in verts]
    z = space.zero()
    pts += [z + (Fraction(1),), z + (Fraction(-1),)]
    return convex_hull(pts)


def element_from_json(data: dict):
    space_data = data["space"]
    if isinstance(space_data, str):
        space = SeqSpace(space_data)
        xd = data["x"]
        if isinstance(xd, dict) and "tail_limit" in xd:
            x = TailLimit(rat(xd["tail_limit"]))
        else:
            x = SeqRep.from_json(xd)
    else:
        space = SpaceDesc.from_json(space_data)
        x = vec(data["x"])
    cls = OUElem if data.get("type", "ou") == "ou" else BNElem
    return cls(space, x, rat(data["scalar"]))

"""The pairing ``<(x, lam), (phi, mu)> = phi(x) + lam*mu`` and what hangs off it.

Functionals are always concrete dual elements wrapped in :class:`Lev` or
:class:`EvOf`, never opaque callables, so that equality and norms stay
decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional

from basenorm.bnou import BNElem, OUElem, _ProductElem, ou_unit
from basenorm.errors import (
    DimensionMismatch,
    InconsistentValues,
    NotAState,
    SpaceMismatch,
    WrongSpace,
)
from basenorm.exact import OPTIMAL, LinearProgram, dot, lp_solve, rat, solve_linear_system, vec
from basenorm.geometry import convex_weights
from basenorm.normed import Cmp, SpaceDesc
from basenorm.sequences import SUP_SPACES, SeqSpace, TailLimit, pair_seq


def dual_compatible(left, right) -> bool:
    """Whether elements of ``left`` and ``right`` pair as predual / dual."""
    if isinstance(left, SpaceDesc) and isinstance(right, SpaceDesc):
        return left.dual() == right
    if isinstance(left, SeqSpace) and isinstance(right, SeqSpace):
        a, b = left.kind, right.kind
        return (a in SUP_SPACES and b == "l1") or (a == "l1" and b in SUP_SPACES) or (
            a in SUP_SPACES and b == "lim"
        )
    return False


def pair_vectors(left_space, x, right_space, phi) -> Fraction:
    if not dual_compatible(left_space, right_space):
        raise SpaceMismatch(f"{left_space} does not pair with {right_space}")
    if isinstance(left_space, SpaceDesc):
        return dot(x, phi)
    if isinstance(phi, TailLimit):
        return phi(x)
    if left_space.kind == "l1":
        return pair_seq(phi, x)
    return pair_seq(x, phi)


def pair(left: _ProductElem, right: _ProductElem) -> Fraction:
    """``phi(x) + lam * mu`` for ``left = (x, lam)`` and ``right = (phi, mu)``.

    One side is a BN element and the other an OU element, over mutually
    dual spaces.
    """
    kinds = {type(left), type(right)}
    if kinds != {BNElem, OUElem}:
        raise SpaceMismatch("the pairing is between one BN and one OU element")
    return pair_vectors(left.space, left.x, right.space, right.x) + left.scalar * right.scalar


def predual_of(space):
    """The space whose dual ``space`` is taken to be."""
    if isinstance(space, SpaceDesc):
        return space.dual()
    return SeqSpace({"l1": "c0", "linf": "l1", "lim": "linf"}[space.kind])


@dataclass(frozen=True)
class Lev:
    """``lev(phi, mu)``: the functional ``(x, lam) |-> phi(x) + lam*mu``."""

    element: _ProductElem

    def __call__(self, left: _ProductElem) -> Fraction:
        return pair(left, self.element)

    @property
    def predual(self):
        return predual_of(self.element.space)

    def _argument(self, x, lam) -> _ProductElem:
        cls = OUElem if isinstance(self.element, BNElem) else BNElem
        return cls(self.predual, x, lam)

    def negative_witness(self) -> Optional[_ProductElem]:
        """A base element ``(v, 1)`` on which the functional is negative.

        Minimizes ``phi`` over Ball(E): a vertex scan where the vertices are
        known, an LP over the facet description for polar balls. Returns
        None when no such element exists or when E has no finite ball
        description (L2, sequence spaces).
        """
        phi, mu = self.element.x, self.element.scalar
        E = self.predual
        if not isinstance(E, SpaceDesc):
            return None
        verts = E.ball_vertices()
        if verts is not None:
            best = min(verts, key=lambda v: dot(phi, v))
            value = dot(phi, best)
        elif E.norm == "polar":
            cons = [(v, "<=", 1) for v in E.ball.vertices]
            out = lp_solve(LinearProgram(phi, cons, bounds=[(None, None)] * E.dim))
            assert out.status == OPTIMAL
            best, value = out.witness, out.optimum
        else:
            return None
        if value + mu < 0:
            return self._argument(best, 1)
        return None

    def is_positive(self) -> bool:
        E = self.predual
        if isinstance(E, SpaceDesc) and E.norm != "l2":
            return self.negative_witness() is None
        # ||phi||_* <= mu, i.e. the dual element sits in its own cone
        return self.element.in_cone()

    def to_json(self) -> dict:
        out = self.element.to_json()
        out["kind"] = "lev"
        return out


def lev(element: _ProductElem) -> Lev:
    return Lev(element)


@dataclass(frozen=True)
class EvOf:
    """``ev(x, lam)``: evaluate dual elements at a fixed predual element."""

    element: _ProductElem

    def __call__(self, right: _ProductElem) -> Fraction:
        return pair(self.element, right)

    def to_json(self) -> dict:
        out = self.element.to_json()
        out["kind"] = "ev"
        return out


def ev_elem(element: _ProductElem) -> EvOf:
    return EvOf(element)


def _basis(dim: int, k: int) -> tuple:
    return tuple(Fraction(int(i == k)) for i in range(dim))


def state_to_bn(phi: Callable[[OUElem], Fraction], space: SpaceDesc) -> BNElem:
    """Recover ``(psi, 1)`` in BN(E*) from a state on OU(E).

    ``psi(x) = phi(x, 0)`` is read off by evaluating ``phi`` on the
    coordinate vectors; positivity is checked by evaluating ``phi`` on the
    generators ``(v, 1)`` of the cone.
    """
    if not isinstance(space, SpaceDesc):
        raise WrongSpace("state recovery needs a finite-dimensional space")
    if phi(ou_unit(space)) != 1:
        raise NotAState("functional is not unital")
    psi = tuple(phi(OUElem(space, _basis(space.dim, k), 0)) for k in range(space.dim))
    verts = space.ball_vertices()
    if verts is not None:
        positive = all(phi(OUElem(space, v, 1)) >= 0 for v in verts)
    else:
        positive = space.dual().compare(psi, 1) != Cmp.GREATER
    if not positive:
        raise NotAState("functional is not positive")
    result = BNElem(space.dual(), psi, 1)
    assert result.in_cone()
    return result


@dataclass(frozen=True)
class AffineOnBall:
    """Values of an affine map on the vertices of Ball(E)."""

    space: SpaceDesc
    values: Mapping

    def __post_init__(self):
        verts = self.space.ball_vertices()
        if verts is None:
            raise WrongSpace("ball extension needs a polytopal, l1 or l-infinity ball")
        vals = {vec(k): rat(v) for k, v in dict(self.values).items()}
        if set(vals) != set(verts):
            raise InconsistentValues("values must be given on exactly the ball vertices")
        object.__setattr__(self, "values", vals)

    def at(self, p) -> Fraction:
        """Value at any ball point, through a convex decomposition."""
        verts = list(self.values)
        w = convex_weights(verts, vec(p))
        if w is None:
            raise ValueError("point is outside the ball")
        return sum((wi * self.values[v] for wi, v in zip(w, verts)), Fraction(0))


def ball_extension(a: AffineOnBall) -> tuple:
    """The unique linear functional agreeing with ``a`` on the ball.

    Solved exactly from the vertex values; an inconsistent system means no
    affine map vanishing at 0 fits them.
    """
    verts = list(a.values)
    psi, consistent, r = solve_linear_system(verts, [a.values[v] for v in verts])
    if not consistent or r != a.space.dim:
        raise InconsistentValues("no linear functional matches these vertex values")
    return psi


def extension_value(a: AffineOnBall, x) -> Fraction:
    """``||x|| * a(x / ||x||)`` evaluated literally (0 at x = 0)."""
    x = a.space.check(x)
    n = a.space.norm_of(x)
    if n == 0:
        return Fraction(0)
    return n * a.at(tuple(c / n for c in x))


def effect_to_ou(a: AffineOnBall, value_at_zero) -> OUElem:
    """``(psi, a(0,1))`` in OU(E*) reproducing an affine map on the base.

    ``a`` holds the values ``a(v, 1)`` at the base points over ball
    vertices and ``value_at_zero`` is ``a(0, 1)``.
    """
    a0 = rat(value_at_zero)
    shifted = AffineOnBall(a.space, {v: val - a0 for v, val in a.values.items()})
    psi = ball_extension(shifted)
    out = OUElem(a.space.dual(), psi, a0)
    for v, val in a.values.items():
        assert pair(BNElem(a.space, v, 1), out) == val
    return out


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def bloch_matrix(e: OUElem):
    """``lam * I + x1 sx + x2 sy + x3 sz`` as a 2x2 matrix of (re, im) pairs."""
    x1, x2, x3 = e.x
    lam = e.lam
    zero = Fraction(0)
    return (
        ((lam + x3, zero), (x1, -x2)),
        ((x1, x2), (lam - x3, zero)),
    )


def bloch_psd_check(e: OUElem) -> bool:
    """Positive semidefiniteness of the 2x2 self-adjoint matrix of ``e``.

    For a 2x2 self-adjoint matrix, PSD is exactly ``trace >= 0`` and
    ``det >= 0``.
    """
    if not (isinstance(e.space, SpaceDesc) and e.space.norm == "l2" and e.space.dim == 3):
        raise WrongSpace("the Bloch correspondence is for OU of the 3-dimensional l2 space")
    (a, b), (c, d) = bloch_matrix(e)
    trace = a[0] + d[0]
    ad, bc = _cmul(a, d), _cmul(b, c)
    det_re, det_im = ad[0] - bc[0], ad[1] - bc[1]
    if det_im != 0:
        raise DimensionMismatch("matrix is not self-adjoint")
    return trace >= 0 and det_re >= 0

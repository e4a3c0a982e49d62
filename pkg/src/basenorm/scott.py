"""Directed families, truncation chains and Scott-continuity checks.

Only two kinds of directed set are representable here: finite explicit
families, and the increasing chain of truncations of an element of OU(l1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from basenorm.bnou import BNElem, OUElem, bn_norm, bn_positive_decompose, leq, ou_norm
from basenorm.duality import Lev, pair
from basenorm.errors import EmptyFamily, NotDirected, NotPositive, SpaceMismatch
from basenorm.exact import fmt, rat
from basenorm.sequences import SeqSpace, l1_tail_norm, seq_norm

# hard stop for the linear scans; a geometric tail with ratio 1/2 needs ~n
# steps to get below 2**-n
MAX_SCAN = 100_000


@dataclass(frozen=True)
class FiniteFamily:
    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        spaces = {e.space for e in elems}
        if len(spaces) > 1:
            raise SpaceMismatch("family members live in different spaces")
        object.__setattr__(self, "elements", elems)


def _upper_bound_in(elems, a, b) -> bool:
    return any(leq(a, z) and leq(b, z) for z in elems)


def is_directed(f: FiniteFamily) -> bool:
    """Every pair has an upper bound inside the family."""
    elems = f.elements
    if not elems:
        raise EmptyFamily("directedness of the empty family is not checked")
    return all(_upper_bound_in(elems, a, b) for i, a in enumerate(elems) for b in elems[i + 1 :])


def finite_directed_sup(f: FiniteFamily) -> OUElem:
    """The greatest member, which a finite directed family always has."""
    if not is_directed(f):
        raise NotDirected("family is not directed")
    for z in f.elements:
        if all(leq(a, z) for a in f.elements):
            return z
    raise AssertionError("finite directed family without a greatest element")


@dataclass(frozen=True)
class TruncationChain:
    """``(x|_{<=n}, mu - ||x|_{>n}||_1)`` for n = 1, 2, ..., increasing to ``target``."""

    target: OUElem

    def __post_init__(self):
        if self.target.space != SeqSpace("l1"):
            raise SpaceMismatch("truncation chains live in OU(l1)")

    def tail_norm(self, n: int) -> Fraction:
        """``sum_{i > n} |x_i|``."""
        return l1_tail_norm(self.target.x, n + 1)

    def element(self, n: int) -> OUElem:
        if n < 1:
            raise ValueError("chain index starts at 1")
        t = self.target
        return OUElem(t.space, t.x.truncate(n), t.lam - self.tail_norm(n))

    def sup(self) -> OUElem:
        return self.target

    def distance_parts(self, n: int) -> tuple:
        """``(||x - x_n||_1, mu - mu_n)``; the OU distance is their sum."""
        d = self.target - self.element(n)
        return seq_norm(d.x), d.lam

    def distance(self, n: int) -> Fraction:
        return ou_norm(self.target - self.element(n))


def chain_element(c: TruncationChain, n: int) -> OUElem:
    return c.element(n)


def chain_sup(c: TruncationChain) -> OUElem:
    return c.sup()


def verify_norm_convergence(c: TruncationChain, eps) -> int:
    """Smallest N with ``||target - element(N)||_OU < eps``."""
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    for n in range(1, MAX_SCAN + 1):
        if c.distance(n) < eps:
            return n
    raise RuntimeError(f"no N below {MAX_SCAN}")


@dataclass(frozen=True)
class ScottReport:
    residuals: tuple  # ((n, value), ...)
    bounds: tuple
    n_for_eps: Optional[int]
    nonnegative: bool
    monotone: bool
    within_bound: bool

    @property
    def bound(self) -> Fraction:
        return self.bounds[-1]

    @property
    def certified(self) -> bool:
        return self.within_bound and self.n_for_eps is not None

    def to_json(self) -> dict:
        return {
            "residuals": [[n, fmt(v)] for n, v in self.residuals],
            "bound": fmt(self.bound),
            "N_for_eps": self.n_for_eps,
            "nonnegative": self.nonnegative,
            "monotone": self.monotone,
            "within_bound": self.within_bound,
        }


def _first_below(c: TruncationChain, scale: Fraction, eps: Fraction) -> Optional[int]:
    if scale == 0:
        return 1
    for n in range(1, MAX_SCAN + 1):
        if scale * c.distance(n) < eps:
            return n
    return None


def residual_report(f, norm: Fraction, c: TruncationChain, depth: int, eps=Fraction(1, 100)) -> ScottReport:
    """Residuals ``f(sup) - f(element(n))`` for ``n <= depth``.

    ``norm`` bounds ``|f(z)| <= norm * ||z||_OU``, which turns the exact
    chain distance into a per-n bound and an N reaching ``eps``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    top = f(c.sup())
    res = tuple((n, top - f(c.element(n))) for n in range(1, depth + 1))
    bounds = tuple(norm * c.distance(n) for n in range(1, depth + 1))
    vals = [v for _, v in res]
    return ScottReport(
        residuals=res,
        bounds=bounds,
        n_for_eps=_first_below(c, norm, rat(eps)),
        nonnegative=all(v >= 0 for v in vals),
        monotone=all(a >= b for a, b in zip(vals, vals[1:])),
        within_bound=all(abs(v) <= b for v, b in zip(vals, bounds)),
    )


def scott_continuity_check(phi: Lev, c: TruncationChain, depth: int, eps=Fraction(1, 100)) -> ScottReport:
    """Residual report for a positive functional ``lev(phi, mu)`` on the chain."""
    if not isinstance(phi.element, BNElem):
        raise SpaceMismatch("functionals on OU(l1) come from BN(l-infinity)")
    if not phi.is_positive():
        raise NotPositive("functional is not positive")
    return residual_report(phi, bn_norm(phi.element), c, depth, eps)


@dataclass(frozen=True)
class NormalReport:
    report: ScottReport
    plus: ScottReport
    minus: ScottReport
    decomposition_consistent: bool

    def to_json(self) -> dict:
        out = self.report.to_json()
        out["decomposition_consistent"] = self.decomposition_consistent
        return out


def ev_is_normal_check(x: BNElem, c: TruncationChain, depth: int, eps=Fraction(1, 100)) -> NormalReport:
    """Residuals of ``ev(x)`` composed with ``lev`` along the chain.

    ``x`` is split as a difference of two positive elements; each part gives
    a positive functional with a monotone report, and the residuals of ``x``
    are checked to be exactly their difference.
    """
    pair(x, c.sup())  # raises SpaceMismatch early
    r = max(x.norm_x(), x.y)
    plus, minus = bn_positive_decompose(x, r)

    def ev_of(e):
        return lambda z: pair(e, z)

    rep = residual_report(ev_of(x), bn_norm(x), c, depth, eps)
    rp = residual_report(ev_of(plus), bn_norm(plus), c, depth, eps)
    rm = residual_report(ev_of(minus), bn_norm(minus), c, depth, eps)
    consistent = all(
        a[1] == b[1] - m[1] for a, b, m in zip(rep.residuals, rp.residuals, rm.residuals)
    )
    return NormalReport(rep, rp, rm, consistent)

"""Constructive harnesses for the three counterexamples built on c0.

Each run draws seeded samples and, for every sample, builds an explicit
witness whose two sides are compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from basenorm.bnou import BNElem, OUElem, effect_member, ou_unit
from basenorm.duality import lev, pair
from basenorm.exact import fmt
from basenorm.sampling import (
    into_unit_ball,
    rand_nonneg,
    rand_rational,
    rand_seqrep,
    rng_for,
)
from basenorm.scott import TruncationChain, scott_continuity_check
from basenorm.sequences import (
    CDualRep,
    Geo,
    SeqRep,
    SeqSpace,
    TailLimit,
    basis,
    c_dual_pair,
    constant,
    indicator_from,
    pair_seq,
    seq_norm,
    sign_witness,
    l1_tail_norm,
)

C0, L1, LINF, LIM = SeqSpace("c0"), SeqSpace("l1"), SeqSpace("linf"), SeqSpace("lim")
ONE = Fraction(1)
HALF = Fraction(1, 2)


def _json(x):
    return x.to_json() if hasattr(x, "to_json") else x


@dataclass(frozen=True)
class Witness:
    input: object
    witness: object
    lhs: Fraction
    rhs: Fraction
    ok: bool

    def to_json(self) -> dict:
        return {
            "input": _json(self.input),
            "witness": _json(self.witness),
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class CxReport:
    which: int
    samples: int
    seed: int
    witnesses: tuple
    verdict: bool
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "samples": self.samples,
            "seed": self.seed,
            "verdict": self.verdict,
            "checks": self.checks,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def _check_samples(samples: int) -> None:
    if samples < 1:
        raise ValueError("samples must be at least 1")


# -- counterexample 1 -------------------------------------------------------


def cx1_index(x: SeqRep) -> int:
    """An index j with ``x_j != 1``.

    For finitely supported x this is one past the support. Otherwise the
    scan starts past the explicit entries; a geometric tail of ratio below 1
    in modulus hits the value 1 at most once, so it stops within two steps.
    """
    if x.is_finitely_supported():
        return x.support_max() + 1
    j = x.explicit[-1][0] + 1 if x.explicit else 1
    while x.value(j) == 1:
        j += 1
    return j


def cx1_witness(phi_state: BNElem, e: BNElem) -> Witness:
    j = cx1_index(e.x)
    y = OUElem(L1, basis(j), 0)
    lhs = pair(e, y)  # (ev(x, lam) . lev)(y, 0) = y(x)
    rhs = pair(y, phi_state)  # lev(1, 1)(y, 0)
    return Witness(e, y, lhs, rhs, lhs != rhs)


def _geometric_chain() -> TruncationChain:
    return TruncationChain(OUElem(L1, SeqRep("l1", {}, 0, Geo(HALF, HALF, 1)), 2))


def cx1_run(samples: int, seed: int, chains: int = 10, depth: int = 12) -> CxReport:
    """lev(1, 1) on OU(l1) is a normal state that no (x, lam) in BN(c0) induces."""
    _check_samples(samples)
    rng = rng_for(seed, "cx1")
    state = BNElem(LINF, constant(1), 1)
    phi = lev(state)
    witnesses = []
    for _ in range(samples):
        x = rand_seqrep(rng, "c0")
        witnesses.append(cx1_witness(state, BNElem(C0, x, rand_rational(rng))))

    scott_ok = []
    targets = [_geometric_chain()]
    crng = rng_for(seed, "cx1-chains")
    while len(targets) < chains:
        x = rand_seqrep(crng, "l1")
        targets.append(TruncationChain(OUElem(L1, x, seq_norm(x) + rand_nonneg(crng))))
    for c in targets:
        rep = scott_continuity_check(phi, c, depth)
        scott_ok.append(rep.nonnegative and rep.monotone and rep.within_bound)

    checks = {
        "state_positive": phi.is_positive(),
        "state_unital": phi(ou_unit(L1)) == 1,
        "scott_chains": len(scott_ok),
        "scott_continuous_on_chains": all(scott_ok),
    }
    verdict = all(w.ok for w in witnesses) and all(
        v for k, v in checks.items() if isinstance(v, bool)
    )
    return CxReport(1, samples, seed, tuple(witnesses), verdict, checks)


# -- counterexample 2 -------------------------------------------------------


def cx2_index(x: SeqRep) -> int:
    """Witness index N with ``|sum_{i >= N} x_i| < 1/2``.

    One past the support for finitely supported x (the tail sum is then 0),
    otherwise the smallest such N.
    """
    if x.is_finitely_supported():
        return x.support_max() + 1
    total = pair_seq(constant(1), x)
    n, rest = 1, total
    while abs(rest) >= HALF:
        rest -= x.value(n)
        n += 1
    return n


def cx2_witness(phi: OUElem, e: OUElem) -> Witness:
    n = cx2_index(e.x)
    y = BNElem(LINF, indicator_from(n), 0)
    lhs = pair(e, y)  # y(x)
    rhs = pair(y, phi)  # lev(phi, 1/2)(y, 0) = phi(y)
    return Witness(e, y, lhs, rhs, lhs != rhs)


def cx2_run(samples: int, seed: int) -> CxReport:
    """lev(phi, 1/2) on BN(l-infinity) is not ev(x, lam) . lev for any (x, lam) in OU(l1).

    phi is half the tail-limit functional: the fixed, representable stand-in
    for an element of the bidual of l1 outside the image of ev.
    """
    _check_samples(samples)
    rng = rng_for(seed, "cx2")
    phi = OUElem(LIM, TailLimit(HALF), HALF)
    witnesses = []
    finite_gaps = []
    gaps = []
    for _ in range(samples):
        x = rand_seqrep(rng, "l1")
        w = cx2_witness(phi, OUElem(L1, x, rand_rational(rng)))
        witnesses.append(w)
        gap = abs(w.rhs - w.lhs)
        gaps.append(gap)
        if x.is_finitely_supported():
            finite_gaps.append(gap)
    checks = {
        "phi": TailLimit(HALF).to_json(),
        "phi_note": "half the tail-limit functional on representable l-infinity",
        "effect_positive": phi.in_cone(),
        "effect_below_unit": (ou_unit(LIM) - phi).in_cone(),
        "effect_member": effect_member(phi),
        "min_gap": fmt(min(gaps)),
        "finitely_supported": len(finite_gaps),
        "min_gap_finitely_supported": fmt(min(finite_gaps)) if finite_gaps else None,
    }
    verdict = (
        all(w.ok for w in witnesses)
        and checks["effect_member"]
        and min(gaps) > 0
        and all(g >= Fraction(1, 4) for g in finite_gaps)
    )
    return CxReport(2, samples, seed, tuple(witnesses), verdict, checks)


# -- counterexample 3 -------------------------------------------------------


def cx3_dual_identification(f: SeqRep, tests: list, n: int = 6) -> Witness:
    """The c0* and c* readings of ``f`` agree on c0 and have equal norms.

    Sign witnesses in the two unit balls also recover the common norm up to
    twice the l1 tail beyond ``n``.
    """
    g = CDualRep(0, f)
    agree = all(pair_seq(a, f) == c_dual_pair(g, a) for a in tests)
    lhs, rhs = seq_norm(f), g.norm()
    slack = 2 * l1_tail_norm(f, n)
    w0 = pair_seq(sign_witness(f, n), f)
    wc = c_dual_pair(g, sign_witness(f, n, 1))
    near = all(lhs - slack <= w <= lhs for w in (w0, wc))
    return Witness(f, g, lhs, rhs, agree and lhs == rhs and near)


def cx3_midpoint_index(x: SeqRep) -> int:
    if x.is_finitely_supported():
        return x.support_max() + 1
    j = x.horizon
    while abs(x.value(j)) >= 1:
        j += 1
    return j


def cx3_midpoint(x: SeqRep) -> Witness:
    """``x = (a + b) / 2`` with ``a != b`` both in Ball(c0)."""
    j = cx3_midpoint_index(x)
    t = 1 - abs(x.value(j))
    step = SeqRep("c0", {j: t})
    a, b = x + step, x - step
    mid = (a + b).scale(HALF)
    ok = seq_norm(a) <= 1 and seq_norm(b) <= 1 and not a.same_values(b) and mid.same_values(x)
    return Witness(x, {"plus": a.to_json(), "minus": b.to_json()}, seq_norm(a), seq_norm(b), ok)


def _nonzero_index(d: SeqRep) -> int:
    for i, v in d.explicit:
        if v != 0:
            return i
    i = d.horizon
    while d.value(i) == 0:
        i += 1
    return i


def cx3_extremality(d: SeqRep) -> Witness:
    """One of ``1 + d``, ``1 - d`` has sup norm ``1 + |d_i| > 1``."""
    i = _nonzero_index(d)
    sign = 1 if d.value(i) > 0 else -1
    one = constant(1, "c")
    out = one + d.scale(sign)
    lhs = max(abs(1 + d.value(i)), abs(1 - d.value(i)))
    ok = lhs == 1 + abs(d.value(i)) and seq_norm(out) >= lhs > 1
    return Witness(d, {"index": i, "sign": sign, "leaves": out.to_json()}, lhs, ONE, ok)


def cx3_run(samples: int, seed: int) -> CxReport:
    """c0 and c have the same dual order-unit space but non-isomorphic balls."""
    _check_samples(samples)
    rng = rng_for(seed, "cx3")
    parts = {"dual_identification": [], "midpoint": [], "extremality": []}
    for _ in range(samples):
        f = rand_seqrep(rng, "l1")
        tests = [rand_seqrep(rng, "c0") for _ in range(3)]
        parts["dual_identification"].append(cx3_dual_identification(f, tests))
    for _ in range(samples):
        parts["midpoint"].append(cx3_midpoint(into_unit_ball(rand_seqrep(rng, "c0"))))
    for _ in range(samples):
        d = rand_seqrep(rng, "c")
        while d.same_values(SeqRep("c")):
            d = rand_seqrep(rng, "c")
        parts["extremality"].append(cx3_extremality(d))
    checks = {k: all(w.ok for w in ws) for k, ws in parts.items()}
    witnesses = tuple(w for ws in parts.values() for w in ws)
    return CxReport(3, samples, seed, witnesses, all(checks.values()), checks)


RUNNERS = {1: cx1_run, 2: cx2_run, 3: cx3_run}

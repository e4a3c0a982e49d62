"""The nine acceptance criteria as plain functions.

Each returns a :class:`CriterionResult`; the pytest module and the suite
runner both call these, so there is one definition of "pass".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from basenorm import geometry
from basenorm.bnou import (
    BNElem,
    OUElem,
    bn_norm,
    bn_unit_ball,
    ou_cone_member,
    ou_norm,
    ou_unit,
    ou_unit_ball,
)
from basenorm.counterexamples import cx1_run, cx2_run, cx3_run
from basenorm.duality import (
    AffineOnBall,
    ball_extension,
    bloch_psd_check,
    extension_value,
    lev,
    state_to_bn,
)
from basenorm.exact import dot
from basenorm.figures import CONVENTIONS, FIGURES, emit_figure, figure_json
from basenorm.normed import Cmp, SpaceDesc, l1, l2, linf, polytopal
from basenorm.sampling import rand_nonneg, rand_rational, rand_vector, rng_for
from basenorm.scott import TruncationChain, scott_continuity_check, verify_norm_convergence
from basenorm.sequences import Geo, SeqRep, SeqSpace, constant

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number}: {self.title} ({self.detail}; {self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
        }


def _timed(number, title, fn, limit=None) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        ok = False
        detail += f"; over the {limit}s budget"
    return CriterionResult(number, title, ok, detail, dt)


def hexagon_space() -> SpaceDesc:
    return polytopal(geometry.hexagon())


# 1 -------------------------------------------------------------------------


def norm_vs_gauge(seed: int, samples: int = 500):
    cases = [
        ("BN(linf(2))", linf(2), BNElem, bn_unit_ball, bn_norm),
        ("BN(hexagon)", hexagon_space(), BNElem, bn_unit_ball, bn_norm),
        ("OU(l1(2))", l1(2), OUElem, ou_unit_ball, ou_norm),
    ]
    mismatches = []
    for name, space, cls, ball_of, norm in cases:
        rng = rng_for(seed, f"c1-{name}")
        ball = ball_of(space)
        for _ in range(samples):
            p = rand_vector(rng, space.dim + 1)
            closed = norm(cls(space, p[:-1], p[-1]))
            if closed != geometry.gauge(ball, p):
                mismatches.append((name, p))
    return not mismatches, f"{3 * samples} points, {len(mismatches)} mismatches"


def criterion_1(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(1, "closed-form BN/OU norms equal the LP gauge of the unit ball",
                  lambda: norm_vs_gauge(seed), limit=10)


# 2 -------------------------------------------------------------------------


def _random_dual_point(rng, space: SpaceDesc, on_sphere: bool):
    dual = space.dual()
    phi = rand_vector(rng, space.dim)
    while dual.norm_of(phi) == 0:
        phi = rand_vector(rng, space.dim)
    n = dual.norm_of(phi)
    if on_sphere or n > 1:
        phi = tuple(c / n for c in phi)
    return phi


def duality_round_trip(seed: int, states: int = 200, orders: int = 500):
    spaces = {"l1(3)": l1(3), "linf(3)": linf(3), "hexagon": hexagon_space()}
    bad_trip = bad_order = boundary = 0
    for name, E in spaces.items():
        rng = rng_for(seed, f"c2-{name}")
        dual = E.dual()
        for k in range(states):
            psi = _random_dual_point(rng, E, on_sphere=k % 4 == 0)
            r = BNElem(dual, psi, 1)
            state = lev(r)
            back = state_to_bn(state, E)
            spanning = [ou_unit(E)] + [
                OUElem(E, tuple(Fraction(int(i == j)) for i in range(E.dim)), 0) for j in range(E.dim)
            ]
            if not back.equals(r) or any(lev(back)(z) != state(z) for z in spanning):
                bad_trip += 1
        for k in range(orders):
            phi = rand_vector(rng, E.dim)
            if k % 3 == 0:
                mu = dual.norm_of(phi)
                boundary += 1
            else:
                mu = rand_nonneg(rng) if k % 3 == 1 else rand_rational(rng)
            positive = lev(BNElem(dual, phi, mu)).is_positive()
            if positive != (dual.compare(phi, mu) != Cmp.GREATER):
                bad_order += 1
    ok = bad_trip == 0 and bad_order == 0
    return ok, (
        f"{3 * states} states with {bad_trip} round-trip failures; "
        f"{3 * orders} order checks ({boundary} on the boundary) with {bad_order} failures"
    )


def criterion_2(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(2, "state_to_bn and lev round trip; lev is an order embedding",
                  lambda: duality_round_trip(seed))


# 3 -------------------------------------------------------------------------


def ball_extension_laws(seed: int, samples: int = 300):
    balls = [linf(2), hexagon_space(), linf(3)]
    rng = rng_for(seed, "c3")
    failures = 0
    for k in range(samples):
        space = balls[k % len(balls)]
        psi0 = rand_vector(rng, space.dim)
        a = AffineOnBall(space, {v: dot(psi0, v) for v in space.ball_vertices()})
        psi = ball_extension(a)
        x, y = rand_vector(rng, space.dim), rand_vector(rng, space.dim)
        q = rand_rational(rng)
        ext = lambda z: extension_value(a, z)  # noqa: E731
        checks = [
            all(dot(psi, v) == val for v, val in a.values.items()),
            ext(tuple(p + r for p, r in zip(x, y))) == ext(x) + ext(y),
            ext(tuple(q * p for p in x)) == q * ext(x),
            ext(x) == dot(psi, x),
        ]
        failures += not all(checks)
    return failures == 0, f"{samples} inputs, {failures} failures"


def criterion_3(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(3, "ball extension is additive, homogeneous and matches the vertices",
                  lambda: ball_extension_laws(seed))


# 4 -------------------------------------------------------------------------


def geometric_chain() -> TruncationChain:
    x = SeqRep("l1", {}, 0, Geo(Fraction(1, 2), Fraction(1, 2), 1))
    return TruncationChain(OUElem(SeqSpace("l1"), x, 2))


def geometric_chain_check(depth: int = 32):
    c = geometric_chain()
    n_eps = verify_norm_convergence(c, Fraction(1, 100))
    phi = lev(BNElem(SeqSpace("linf"), constant(1), 1))
    rep = scott_continuity_check(phi, c, depth)
    exact = all(v == Fraction(2) ** (1 - n) for n, v in rep.residuals)
    top = phi(c.sup())
    ok = n_eps == 8 and exact and top == 3 and len(rep.residuals) == depth
    return ok, f"N = {n_eps}, residuals 2^(1-n) exact for n <= {depth}: {exact}, phi(sup) = {top}"


def criterion_4() -> CriterionResult:
    return _timed(4, "geometric chain converges in norm with exact residuals",
                  geometric_chain_check)


# 5-7 -----------------------------------------------------------------------


def cx1_check(seed: int, samples: int = 1000):
    rep = cx1_run(samples, seed)
    shaped = all(w.rhs == 1 and w.lhs == w.input.x.value(w.witness.x.explicit[0][0])
                 for w in rep.witnesses)
    ok = rep.verdict and shaped and len(rep.witnesses) == samples
    return ok, f"{samples} witnesses, verdict {rep.verdict}, checks {rep.checks}"


def criterion_5(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(5, "counterexample 1 witnesses", lambda: cx1_check(seed), limit=5)


def cx2_check(seed: int, samples: int = 1000):
    rep = cx2_run(samples, seed)
    quarter = Fraction(1, 4)
    finite = [w for w in rep.witnesses if w.input.x.is_finitely_supported()]
    ok = (
        rep.verdict
        and rep.checks["effect_positive"]
        and rep.checks["effect_below_unit"]
        and all(abs(w.rhs - w.lhs) >= quarter for w in finite)
        and all(abs(w.rhs - w.lhs) > 0 for w in rep.witnesses)
    )
    return ok, (
        f"{samples} witnesses ({len(finite)} finitely supported), "
        f"min gap {rep.checks['min_gap']}, finite min gap {rep.checks['min_gap_finitely_supported']}"
    )


def criterion_6(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(6, "counterexample 2 effect and witnesses", lambda: cx2_check(seed))


def cx3_check(seed: int, samples: int = 200):
    rep = cx3_run(samples, seed)
    ok = rep.verdict and len(rep.witnesses) == 3 * samples
    return ok, f"{samples} per part, {rep.checks}"


def criterion_7(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(7, "counterexample 3 identification, midpoints, extremality",
                  lambda: cx3_check(seed))


# 8 -------------------------------------------------------------------------


def grid_values(lo: int, hi: int, max_den: int = 4) -> list:
    return sorted({Fraction(k, d) for d in range(1, max_den + 1) for k in range(lo * d, hi * d + 1)})


def bloch_check(seed: int, samples: int = 1000):
    space = l2(3)
    xs, lams = grid_values(-2, 2), grid_values(0, 2)
    count = bad = 0
    for a in xs:
        for b in xs:
            for c in xs:
                for lam in lams:
                    e = OUElem(space, (a, b, c), lam)
                    bad += ou_cone_member(e) != bloch_psd_check(e)
                    count += 1
    rng = rng_for(seed, "c8")
    for _ in range(samples):
        e = OUElem(space, rand_vector(rng, 3, bound=3), rand_nonneg(rng, bound=4))
        bad += ou_cone_member(e) != bloch_psd_check(e)
    return bad == 0, f"{count} grid points + {samples} random, {bad} disagreements"


def criterion_8(seed: int = DEFAULT_SEED) -> CriterionResult:
    return _timed(8, "OU(R^3, l2) cone equals the 2x2 PSD test", lambda: bloch_check(seed))


# 9 -------------------------------------------------------------------------

ZIGZAG = [(1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1), (1, 0, 1)]


def figures_check():
    f2 = emit_figure(2, "axes")
    e = {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    base_ok = set(f2.vertices["base"]) == e and len(f2.vertices["base"]) == 3
    ball_ok = set(f2.vertices["ball"]) == e | {tuple(-c for c in v) for v in e} and len(f2.vertices["ball"]) == 6
    f4 = emit_figure(4, "axes")
    zig_ok = [tuple(v) for v in f4.vertices["zigzag"]] == [tuple(map(Fraction, v)) for v in ZIGZAG]
    stable = all(
        figure_json(emit_figure(w, c)) == figure_json(emit_figure(w, c)) for w in FIGURES for c in CONVENTIONS
    )
    ok = base_ok and ball_ok and zig_ok and stable
    return ok, f"fig2 base {base_ok}, fig2 ball {ball_ok}, fig4 cycle {zig_ok}, byte-stable {stable}"


def criterion_9() -> CriterionResult:
    return _timed(9, "figure vertex sets and byte-stable JSON", figures_check)


def run_all(seed: int = DEFAULT_SEED) -> list:
    return [
        criterion_1(seed),
        criterion_2(seed),
        criterion_3(seed),
        criterion_4(),
        criterion_5(seed),
        criterion_6(seed),
        criterion_7(seed),
        criterion_8(seed),
        criterion_9(),
    ]

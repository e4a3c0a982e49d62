"""Property-suite runner: per-module invariants plus the acceptance criteria.

A failing case is serialized into the report instead of raising. The
``corrupt_gauge`` hook swaps in a wrong gauge so the harness can be seen to
catch it.
"""

from __future__ import annotations

import contextlib
import traceback
from fractions import Fraction

from basenorm import acceptance, geometry
from basenorm.bnou import (
    BNElem,
    OUElem,
    bn_norm,
    bn_positive_decompose,
    leq,
    ou_cone_member,
    ou_norm,
)
from basenorm.counterexamples import RUNNERS
from basenorm.duality import bloch_psd_check, pair
from basenorm.exact import OPTIMAL, LinearProgram, dot, fmt, lp_solve, solve_linear_system
from basenorm.normed import Cmp, dual_norm_witness, l1, l2, linf
from basenorm.sampling import rand_nonneg, rand_rational, rand_seqrep, rand_vector, rng_for
from basenorm.scott import TruncationChain
from basenorm.sequences import Geo, SeqRep, SeqSpace, pair_seq, seq_norm


def _vec_json(v):
    return [fmt(c) for c in v]


# each check takes an rng and returns (ok, serializable case)


def _exact_case(rng):
    n = 3
    rows = [rand_vector(rng, n) for _ in range(2)]
    x0 = tuple(rand_nonneg(rng) for _ in range(n))
    cons = [(r, "<=", dot(r, x0)) for r in rows] + [([1] * n, "<=", sum(x0) + 1)]
    obj = rand_vector(rng, n)
    out = lp_solve(LinearProgram(obj, cons, sense="max"))
    ok = out.status == OPTIMAL and all(dot(r, out.witness) <= b for r, _, b in cons)
    ok = ok and out.optimum >= dot(obj, x0)  # x0 is feasible
    A = [rand_vector(rng, n) for _ in range(n)]
    b = [dot(r, x0) for r in A]
    sol, consistent, _ = solve_linear_system(A, b)
    ok = ok and consistent and all(dot(r, sol) == bi for r, bi in zip(A, b))
    return ok, {"objective": _vec_json(obj), "feasible_point": _vec_json(x0)}


def _geometry_case(rng):
    B = geometry.hexagon()
    x = rand_vector(rng, 2)
    q = rand_rational(rng)
    g = geometry.gauge(B, x)
    ok = geometry.gauge(B, tuple(q * c for c in x)) == abs(q) * g
    ok = ok and geometry.membership(B, x, g)
    if g > 0:
        ok = ok and not geometry.membership(B, x, g * Fraction(99, 100))
    return ok, {"x": _vec_json(x), "q": fmt(q), "gauge": fmt(g)}


def _normed_case(rng):
    space = [l1(3), linf(3), acceptance.hexagon_space()][rng.randrange(3)]
    phi = rand_vector(rng, space.dim)
    value, w = dual_norm_witness(space, phi)
    ok = dot(phi, w) == value and space.compare(w, 1) != Cmp.GREATER
    ok = ok and value == space.dual().norm_of(phi)
    return ok, {"space": space.to_json(), "phi": _vec_json(phi)}


def _sequence_case(rng):
    a, b = rand_seqrep(rng, "c"), rand_seqrep(rng, "c0")
    if a.geo is not None and b.geo is not None:
        # one representable sum needs a shared ratio
        b = SeqRep("c0", b.explicit, 0, Geo(b.geo.coeff, a.geo.ratio, b.geo.start))
    phi = rand_seqrep(rng, "l1")
    q = rand_rational(rng)
    ok = pair_seq(a + b.scale(q), phi) == pair_seq(a, phi) + q * pair_seq(b, phi)
    ok = ok and abs(pair_seq(a, phi)) <= seq_norm(a) * seq_norm(phi)
    return ok, {"a": a.to_json(), "b": b.to_json(), "phi": phi.to_json(), "q": fmt(q)}


def _bnou_case(rng):
    space = acceptance.hexagon_space()
    e = BNElem(space, rand_vector(rng, 2), rand_rational(rng))
    f = BNElem(space, rand_vector(rng, 2), rand_rational(rng))
    ok = bn_norm(e + f) <= bn_norm(e) + bn_norm(f)
    r = max(e.norm_x(), e.y)
    plus, minus = bn_positive_decompose(e, r)
    ok = ok and (plus - minus).equals(e)
    u = OUElem(l1(2), rand_vector(rng, 2), rand_rational(rng))
    v = OUElem(l1(2), rand_vector(rng, 2), rand_rational(rng))
    ok = ok and ou_norm(u + v) <= ou_norm(u) + ou_norm(v)
    return ok, {"e": e.to_json(), "f": f.to_json(), "u": u.to_json(), "v": v.to_json()}


def _duality_case(rng):
    x, y = rand_vector(rng, 3), rand_vector(rng, 3)
    phi = rand_vector(rng, 3)
    q = rand_rational(rng)
    E = linf(3)
    l = lambda v, lam: OUElem(E, v, lam)  # noqa: E741, E731
    r = BNElem(E.dual(), phi, rand_rational(rng))
    lhs = pair(l(tuple(a + q * b for a, b in zip(x, y)), 1 + q), r)
    ok = lhs == pair(l(x, 1), r) + q * pair(l(y, 1), r)
    e = OUElem(l2(3), x, rand_nonneg(rng))
    ok = ok and ou_cone_member(e) == bloch_psd_check(e)
    return ok, {"x": _vec_json(x), "y": _vec_json(y), "phi": _vec_json(phi), "q": fmt(q)}


def _scott_case(rng):
    x = rand_seqrep(rng, "l1")
    c = TruncationChain(OUElem(SeqSpace("l1"), x, seq_norm(x) + rand_nonneg(rng)))
    ok = True
    for n in range(1, 8):
        en, en1 = c.element(n), c.element(n + 1)
        ok = ok and leq(en, en1) and leq(en, c.sup())
        ok = ok and sum(c.distance_parts(n)) == c.distance(n)
    return ok, {"target": c.target.to_json()}


MODULE_CHECKS = {
    "exact-core": _exact_case,
    "convex-geometry": _geometry_case,
    "normed-spaces": _normed_case,
    "sequence-spaces": _sequence_case,
    "bn-ou": _bnou_case,
    "duality": _duality_case,
    "scott-order": _scott_case,
}


@contextlib.contextmanager
def corrupted_gauge(delta: Fraction = Fraction(1, 1000)):
    """Temporarily make every nonzero gauge too large by ``delta``."""
    real = geometry.gauge

    def wrong(B, x):
        g = real(B, x)
        return g + delta if g else g

    geometry.gauge = wrong
    try:
        yield
    finally:
        geometry.gauge = real


def _run_module(name, check, seed, cases):
    rng = rng_for(seed, f"suite-{name}")
    failures = []
    for i in range(cases):
        try:
            ok, case = check(rng)
        except Exception as exc:  # reported, never raised
            ok, case = False, {"error": repr(exc), "trace": traceback.format_exc(limit=3)}
        if not ok:
            failures.append({"index": i, "case": case})
    return {"cases": cases, "passed": not failures, "failures": failures[:5]}


def run_suite(seed: int, cases: int, corrupt_gauge: bool = False) -> tuple:
    """Returns ``(exit_status, report)``; status 1 when anything failed."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    ctx = corrupted_gauge() if corrupt_gauge else contextlib.nullcontext()
    with ctx:
        modules = {n: _run_module(n, c, seed, cases) for n, c in MODULE_CHECKS.items()}
        cx = {}
        for k, fn in RUNNERS.items():
            try:
                rep = fn(cases, seed)
                cx[str(k)] = {"passed": rep.verdict, "checks": rep.checks}
            except Exception as exc:
                cx[str(k)] = {"passed": False, "error": repr(exc)}
        crit = []
        for fn in _criteria(seed):
            try:
                crit.append(fn().to_json())
            except Exception as exc:
                crit.append({"passed": False, "error": repr(exc)})
    passed = (
        all(m["passed"] for m in modules.values())
        and all(c["passed"] for c in cx.values())
        and all(c["passed"] for c in crit)
    )
    report = {
        "seed": seed,
        "cases": cases,
        "corrupt_gauge": corrupt_gauge,
        "passed": passed,
        "modules": modules,
        "counterexamples": cx,
        "criteria": crit,
    }
    return (0 if passed else 1), report


def _criteria(seed):
    a = acceptance
    return [
        lambda: a.criterion_1(seed),
        lambda: a.criterion_2(seed),
        lambda: a.criterion_3(seed),
        a.criterion_4,
        lambda: a.criterion_5(seed),
        lambda: a.criterion_6(seed),
        lambda: a.criterion_7(seed),
        lambda: a.criterion_8(seed),
        a.criterion_9,
    ]

import json
from fractions import Fraction

import pytest
from hypothesis import given

from basenorm.bnou import BNElem, OUElem
from basenorm.counterexamples import (
    RUNNERS,
    cx1_index,
    cx1_run,
    cx1_witness,
    cx2_index,
    cx2_run,
    cx2_witness,
    cx3_dual_identification,
    cx3_extremality,
    cx3_midpoint,
    cx3_run,
)
from basenorm.sequences import Geo, SeqRep, SeqSpace, TailLimit, constant, seq_norm

from conftest import rationals, seqreps

HALF = Fraction(1, 2)
C0, L1, LINF, LIM = SeqSpace("c0"), SeqSpace("l1"), SeqSpace("linf"), SeqSpace("lim")
STATE = BNElem(LINF, constant(1), 1)
PHI = OUElem(LIM, TailLimit(HALF), HALF)


def tail_sum(x: SeqRep, n: int) -> Fraction:
    """sum_{i >= n} x_i from the explicit entries and the geometric series formula."""
    s = sum((v for i, v in x.explicit if i >= n), Fraction(0))
    if x.geo is not None:
        g = x.geo
        first = max(n, g.start)
        s += g.coeff * g.ratio ** (first - g.start) / (1 - g.ratio)
    return s


# -- counterexample 1 -------------------------------------------------------


def test_cx1_examples():
    assert cx1_index(SeqRep("c0", {1: HALF})) == 2
    assert cx1_index(SeqRep("c0")) == 1
    assert cx1_index(SeqRep("c0", {1: 1, 2: 2, 3: -1})) == 4
    w = cx1_witness(STATE, BNElem(C0, SeqRep("c0", {1: HALF}), 7))
    assert (w.lhs, w.rhs, w.ok) == (0, 1, True)


def test_cx1_geometric_tail_hitting_one():
    # x_2 = 1 exactly, so the scan moves on to 3
    x = SeqRep("c0", {1: 5}, 0, Geo(1, HALF, 2))
    assert x.value(2) == 1
    assert cx1_index(x) == 3


@given(seqreps("c0"), rationals)
def test_cx1_witness_property(x, lam):
    j = cx1_index(x)
    assert x.value(j) != 1
    if x.is_finitely_supported():
        assert all(i < j for i, v in x.explicit if v != 0)
    w = cx1_witness(STATE, BNElem(C0, x, lam))
    assert w.lhs == x.value(j) and w.rhs == 1 and w.ok


def test_cx1_run():
    rep = cx1_run(50, 3)
    assert rep.verdict and len(rep.witnesses) == 50
    assert rep.checks["state_positive"] and rep.checks["state_unital"]
    assert rep.checks["scott_continuous_on_chains"]
    with pytest.raises(ValueError):
        cx1_run(0, 3)


# -- counterexample 2 -------------------------------------------------------


def test_cx2_examples():
    geo = SeqRep("l1", {}, 0, Geo(HALF, HALF, 1))
    # tail from 2 is exactly 1/2, so the strict bound first holds at 3
    assert tail_sum(geo, 2) == HALF
    assert cx2_index(geo) == 3
    w = cx2_witness(PHI, OUElem(L1, geo, 0))
    assert (w.lhs, w.rhs) == (Fraction(1, 4), HALF)
    assert cx2_index(SeqRep("l1", {2: 3, 5: -1})) == 6
    w = cx2_witness(PHI, OUElem(L1, SeqRep("l1", {2: 3, 5: -1}), 1))
    assert (w.lhs, w.rhs) == (0, HALF)
    assert cx2_index(SeqRep("l1")) == 1
    assert cx2_witness(PHI, OUElem(L1, SeqRep("l1"), 0)).lhs == 0


@given(seqreps("l1"), rationals)
def test_cx2_index_against_series_oracle(x, lam):
    n = cx2_index(x)
    assert abs(tail_sum(x, n)) < HALF
    if not x.is_finitely_supported():
        assert all(abs(tail_sum(x, m)) >= HALF for m in range(1, n))
    w = cx2_witness(PHI, OUElem(L1, x, lam))
    assert w.lhs == tail_sum(x, n) and w.rhs == HALF
    assert abs(w.rhs - w.lhs) > 0


def test_cx2_run():
    rep = cx2_run(100, 5)
    assert rep.verdict
    assert rep.checks["effect_positive"] and rep.checks["effect_below_unit"] and rep.checks["effect_member"]
    assert Fraction(rep.checks["min_gap_finitely_supported"]) >= Fraction(1, 4)
    assert "tail-limit" in rep.checks["phi_note"]


# -- counterexample 3 -------------------------------------------------------


def test_cx3_examples():
    w = cx3_midpoint(SeqRep("c0", {1: 1}))
    assert w.witness["plus"] == SeqRep("c0", {1: 1, 2: 1}).to_json()
    assert w.witness["minus"] == SeqRep("c0", {1: 1, 2: -1}).to_json()
    assert w.lhs == w.rhs == 1 and w.ok
    e = cx3_extremality(SeqRep("c", {1: Fraction(1, 4)}))
    assert e.lhs == Fraction(5, 4) and e.ok
    f = cx3_dual_identification(SeqRep("l1", {2: 1}), [SeqRep("c0", {2: 3})])
    assert f.lhs == f.rhs == 1 and f.ok


@given(seqreps("l1"), seqreps("c0"))
def test_cx3_dual_identification_property(f, a):
    w = cx3_dual_identification(f, [a])
    assert w.ok and w.lhs == w.rhs == seq_norm(f)


@given(seqreps("c"))
def test_cx3_extremality_property(d):
    if d.same_values(SeqRep("c")):
        return
    w = cx3_extremality(d)
    assert w.ok and w.lhs > 1


def test_cx3_run():
    rep = cx3_run(40, 9)
    assert rep.verdict and len(rep.witnesses) == 120
    assert rep.checks == {"dual_identification": True, "midpoint": True, "extremality": True}


# -- reports ----------------------------------------------------------------


@pytest.mark.parametrize("which", sorted(RUNNERS))
def test_reports_are_deterministic(which):
    a = json.dumps(RUNNERS[which](20, 11).to_json(), sort_keys=True)
    b = json.dumps(RUNNERS[which](20, 11).to_json(), sort_keys=True)
    c = json.dumps(RUNNERS[which](20, 12).to_json(), sort_keys=True)
    assert a == b and a != c

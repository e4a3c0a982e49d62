from fractions import Fraction

import pytest
from hypothesis import given

from basenorm.bnou import BNElem, OUElem, leq, ou_norm
from basenorm.duality import lev, pair
from basenorm.errors import EmptyFamily, NotDirected, NotPositive, SpaceMismatch
from basenorm.normed import l1
from basenorm.scott import (
    FiniteFamily,
    TruncationChain,
    chain_element,
    chain_sup,
    ev_is_normal_check,
    finite_directed_sup,
    is_directed,
    scott_continuity_check,
    verify_norm_convergence,
)
from basenorm.sequences import Geo, SeqRep, SeqSpace, basis, constant, seq_norm

from conftest import nonneg, seqreps

L1, LINF, C0 = SeqSpace("l1"), SeqSpace("linf"), SeqSpace("c0")
HALF = Fraction(1, 2)


def geo_chain():
    return TruncationChain(OUElem(L1, SeqRep("l1", {}, 0, Geo(HALF, HALF, 1)), 2))


def finite_chain():
    return TruncationChain(OUElem(L1, SeqRep("l1", {1: 1, 3: -HALF, 5: Fraction(1, 4)}), 3))


E = l1(2)
A = OUElem(E, (1, 0), 1)
B = OUElem(E, (0, 1), 1)
TOP = OUElem(E, (1, 1), 2)


def test_directed_examples():
    assert not is_directed(FiniteFamily((A, B)))
    assert is_directed(FiniteFamily((A, B, TOP)))
    assert is_directed(FiniteFamily((A,)))
    with pytest.raises(EmptyFamily):
        is_directed(FiniteFamily(()))
    with pytest.raises(SpaceMismatch):
        FiniteFamily((A, OUElem(l1(3), (0, 0, 0), 1)))


def test_directed_sup_examples():
    assert finite_directed_sup(FiniteFamily((A, B, TOP))) == TOP
    assert finite_directed_sup(FiniteFamily((A,))) == A
    assert finite_directed_sup(FiniteFamily((A, A, A))) == A
    with pytest.raises(NotDirected):
        finite_directed_sup(FiniteFamily((A, B)))


def test_chain_element_example():
    c = geo_chain()
    assert chain_element(c, 2) == OUElem(L1, SeqRep("l1", {1: HALF, 2: Fraction(1, 4)}), 2 - Fraction(1, 4))
    assert chain_sup(c) == c.target
    with pytest.raises(ValueError):
        c.element(0)
    with pytest.raises(SpaceMismatch):
        TruncationChain(OUElem(E, (0, 0), 1))


def test_chain_reaches_finite_target():
    c = finite_chain()
    assert c.element(5).equals(c.target) and c.element(9).equals(c.target)
    assert c.distance(4) > 0 and c.distance(5) == 0


def test_geometric_distance_is_two_tails():
    c = geo_chain()
    for n in range(1, 20):
        assert c.distance(n) == Fraction(2) ** (1 - n)
        assert c.distance_parts(n) == (Fraction(2) ** -n, Fraction(2) ** -n)


def test_norm_convergence_examples():
    assert verify_norm_convergence(geo_chain(), Fraction(1, 100)) == 8
    assert verify_norm_convergence(geo_chain(), 3) == 1
    assert verify_norm_convergence(finite_chain(), Fraction(1, 10 ** 6)) == 5
    with pytest.raises(ValueError):
        verify_norm_convergence(geo_chain(), 0)


@given(seqreps("l1"), nonneg)
def test_chain_monotone_and_bounded(x, slack):
    c = TruncationChain(OUElem(L1, x, seq_norm(x) + slack))
    prev = None
    for n in range(1, 10):
        en = c.element(n)
        assert leq(en, c.sup())
        # the scalar gap equals the l1 gap exactly
        gx, gl = c.distance_parts(n)
        assert gx == gl == c.tail_norm(n)
        assert ou_norm(c.sup() - en) == 2 * gl
        if prev is not None:
            assert leq(prev, en)
        prev = en


def test_scott_constant_one():
    phi = lev(BNElem(LINF, constant(1), 1))
    c = geo_chain()
    rep = scott_continuity_check(phi, c, 12)
    assert [v for _, v in rep.residuals] == [Fraction(2) ** (1 - n) for n in range(1, 13)]
    assert phi(c.sup()) == 3
    assert rep.nonnegative and rep.monotone and rep.within_bound and rep.certified
    # bound is ||phi||_BN * distance = 1 * 2^(1-n)
    assert rep.bound == Fraction(2) ** -11
    assert rep.n_for_eps == 8
    d = rep.to_json()
    assert d["residuals"][0] == [1, "1"] and d["N_for_eps"] == 8 and d["bound"] == "1/2048"


def test_scott_unit_state():
    rep = scott_continuity_check(lev(BNElem(LINF, SeqRep("linf"), 1)), geo_chain(), 10)
    assert [v for _, v in rep.residuals] == [Fraction(2) ** -n for n in range(1, 11)]


def test_scott_finite_chain_zero_residual():
    rep = scott_continuity_check(lev(BNElem(LINF, constant(1), 1)), finite_chain(), 8)
    assert all(v == 0 for n, v in rep.residuals if n >= 5)


def test_scott_rejects_non_positive():
    with pytest.raises(NotPositive):
        scott_continuity_check(lev(BNElem(LINF, constant(2), 1)), geo_chain(), 4)
    with pytest.raises(SpaceMismatch):
        scott_continuity_check(lev(OUElem(L1, basis(1), 1)), geo_chain(), 4)


@given(seqreps("l1"), nonneg, seqreps("linf", geo=False), nonneg)
def test_scott_random_positive(x, slack, y, extra):
    c = TruncationChain(OUElem(L1, x, seq_norm(x) + slack))
    phi = lev(BNElem(LINF, y, seq_norm(y) + extra))
    rep = scott_continuity_check(phi, c, 8)
    assert rep.nonnegative and rep.monotone and rep.within_bound


def test_ev_normal_examples():
    c = geo_chain()
    rep = ev_is_normal_check(BNElem(C0, basis(1, "c0"), 1), c, 10)
    # residual = (1/2 + 2) - (1/2 + 2 - 2^-n)
    assert [v for _, v in rep.report.residuals] == [Fraction(2) ** -n for n in range(1, 11)]
    zero = ev_is_normal_check(BNElem(C0, SeqRep("c0"), 0), c, 5)
    assert all(v == 0 for _, v in zero.report.residuals)


def test_ev_normal_negative_trace():
    c = geo_chain()
    x = BNElem(C0, SeqRep("c0", {1: 1, 2: -3}), -1)
    out = ev_is_normal_check(x, c, 16)
    assert out.decomposition_consistent and out.report.within_bound
    assert out.plus.monotone and out.minus.monotone
    top = pair(x, c.sup())
    assert all(v == top - pair(x, c.element(n)) for n, v in out.report.residuals)
    assert abs(out.report.residuals[-1][1]) < Fraction(1, 10 ** 3)
    assert "decomposition_consistent" in out.to_json()
    with pytest.raises(SpaceMismatch):
        ev_is_normal_check(BNElem(L1, basis(1), 1), c, 3)

from fractions import Fraction

import pytest
from hypothesis import given

from basenorm.errors import MalformedRep, NotRepresentable, SpaceMismatch
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
    l1_tail_norm,
    lim_functional,
    pair_seq,
    seq_limit,
    seq_norm,
    sign_witness,
)

from conftest import rationals, seqreps

HALF = Fraction(1, 2)
K = 80  # brute-force horizon


def _remainder(phi, k):
    """Bound on sum_{i>k} |phi_i| from the geometric decay past the horizon."""
    if phi.geo is None:
        return Fraction(0)
    return abs(phi.value(k + 1) - phi.tail) / (1 - abs(phi.ratio))


@pytest.mark.parametrize(
    "s, n",
    [
        (SeqRep("linf", {1: 3, 5: -4}, 2), 4),
        (SeqRep("l1", {1: HALF, 2: Fraction(1, 3)}), Fraction(5, 6)),
        (SeqRep("l1", {}, 0, Geo(HALF, HALF, 1)), 1),
    ],
)
def test_seq_norm_examples(s, n):
    assert seq_norm(s) == n


def test_pair_examples():
    assert pair_seq(constant(1), SeqRep("l1", {1: HALF, 3: HALF})) == 1
    assert pair_seq(SeqRep("c0", {1: 2}), SeqRep("l1", {1: Fraction(1, 3), 2: 5})) == Fraction(2, 3)
    assert pair_seq(constant(1), SeqRep("l1", {}, 0, Geo(HALF, HALF, 1))) == 1


def test_limits():
    assert seq_limit(SeqRep("c", {1: 0}, 3)) == 3
    assert seq_limit(SeqRep("c0", {2: 7})) == 0
    assert seq_limit(SeqRep("c", {}, 1, Geo(Fraction(1), HALF, 2))) == 1
    assert lim_functional(constant(1)) == 1
    assert lim_functional(indicator_from(5)) == 1
    assert TailLimit(HALF)(indicator_from(3)) == HALF


def test_c_dual_pair_examples():
    assert c_dual_pair(CDualRep(1, SeqRep("l1")), SeqRep("c", {1: 9}, 3)) == 3
    assert c_dual_pair(CDualRep(0, basis(1)), SeqRep("c0", {1: 5})) == 5
    assert c_dual_pair(CDualRep(HALF, basis(2).scale(HALF)), constant(1, "c")) == 1


@given(seqreps("l1"))
def test_l1_norm_against_partial_sums(phi):
    partial = sum((abs(phi.value(i)) for i in range(1, K + 1)), Fraction(0))
    assert partial <= seq_norm(phi) <= partial + _remainder(phi, K)


@given(seqreps("linf"))
def test_sup_norm_against_brute_force(a):
    # past the horizon the geometric part shrinks, so the first K terms and
    # the limit already contain the supremum
    assert seq_norm(a) == max([abs(a.value(i)) for i in range(1, K + 1)] + [abs(a.tail)])


@given(seqreps("linf"), seqreps("l1"))
def test_pairing_against_partial_sums(a, phi):
    partial = sum((a.value(i) * phi.value(i) for i in range(1, K + 1)), Fraction(0))
    assert abs(pair_seq(a, phi) - partial) <= seq_norm(a) * _remainder(phi, K)
    assert abs(pair_seq(a, phi)) <= seq_norm(a) * seq_norm(phi)


@given(seqreps("c", geo=False), seqreps("c0"), rationals)
def test_linear_structure_is_pointwise(a, b, q):
    s = a + b.scale(q)
    assert all(s.value(i) == a.value(i) + q * b.value(i) for i in range(1, 20))
    assert s.tail == a.tail


def test_different_ratios_do_not_combine():
    a = SeqRep("c0", {}, 0, Geo(1, HALF, 1))
    b = SeqRep("c0", {}, 0, Geo(1, Fraction(1, 3), 1))
    with pytest.raises(NotRepresentable):
        a + b
    assert not a.same_values(b)


def test_truncate_and_tail_norm():
    x = SeqRep("l1", {}, 0, Geo(HALF, HALF, 1))
    t = x.truncate(2)
    assert t.entries == {1: HALF, 2: Fraction(1, 4)}
    assert (x - t).same_values(SeqRep("l1", {}, 0, Geo(Fraction(1, 8), HALF, 3)))
    assert l1_tail_norm(x, 3) == Fraction(1, 4)


@given(seqreps("l1"))
def test_sign_witness_recovers_norm(phi):
    n = 6
    w = sign_witness(phi, n)
    assert seq_norm(w) <= 1
    assert seq_norm(phi) - 2 * l1_tail_norm(phi, n) <= pair_seq(w, phi) <= seq_norm(phi)


@given(seqreps("linf"))
def test_json_round_trip(a):
    assert SeqRep.from_json(a.to_json()) == a


def test_malformed_reps():
    with pytest.raises(MalformedRep):
        SeqRep("c0", {}, 1)
    with pytest.raises(MalformedRep):
        SeqRep("l1", {0: 1})
    with pytest.raises(MalformedRep):
        SeqRep("l1", {3: 1}, 0, Geo(1, HALF, 2))
    with pytest.raises(ValueError):
        Geo(1, Fraction(1), 1)


def test_space_containment():
    assert SeqSpace("linf").check(SeqRep("c0")) is not None
    with pytest.raises(SpaceMismatch):
        SeqSpace("c0").check(constant(1))
    with pytest.raises(SpaceMismatch):
        pair_seq(basis(1), basis(1))
    assert SeqSpace("c0").dual() == SeqSpace("l1")
    with pytest.raises(NotRepresentable):
        SeqSpace("linf").dual()

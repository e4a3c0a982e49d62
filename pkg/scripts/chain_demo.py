"""Residual table for truncation chains in OU(l1).

Prints, for the geometric target x_i = 2^-i with mu = 2 and a few random
targets, the OU distance to the sup and the residuals of lev(1, 1) and
lev(0, 1). Everything is exact; the float column is only for reading.
"""

import argparse
from fractions import Fraction

from basenorm.bnou import BNElem, OUElem
from basenorm.duality import lev
from basenorm.exact import fmt
from basenorm.sampling import rand_nonneg, rand_seqrep, rng_for
from basenorm.scott import TruncationChain, scott_continuity_check, verify_norm_convergence
from basenorm.sequences import Geo, SeqRep, SeqSpace, constant, seq_norm

L1, LINF = SeqSpace("l1"), SeqSpace("linf")


def table(c: TruncationChain, depth: int):
    ones = scott_continuity_check(lev(BNElem(LINF, constant(1), 1)), c, depth)
    unit = scott_continuity_check(lev(BNElem(LINF, SeqRep("linf"), 1)), c, depth)
    print(f"  N(1/100) = {verify_norm_convergence(c, Fraction(1, 100))}")
    print(f"  {'n':>3} {'distance':>14} {'res lev(1,1)':>14} {'res lev(0,1)':>14} {'~float':>10}")
    for (n, a), (_, b) in zip(ones.residuals, unit.residuals):
        d = c.distance(n)
        print(f"  {n:>3} {fmt(d):>14} {fmt(a):>14} {fmt(b):>14} {float(d):>10.3g}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random", type=int, default=2)
    args = ap.parse_args()

    geo = SeqRep("l1", {}, 0, Geo(Fraction(1, 2), Fraction(1, 2), 1))
    print("geometric target, mu = 2")
    table(TruncationChain(OUElem(L1, geo, 2)), args.depth)

    rng = rng_for(args.seed, "chain-demo")
    for k in range(args.random):
        x = rand_seqrep(rng, "l1")
        mu = seq_norm(x) + rand_nonneg(rng)
        print(f"\nrandom target {k}: {x.to_json()}, mu = {fmt(mu)}")
        table(TruncationChain(OUElem(L1, x, mu)), args.depth)


if __name__ == "__main__":
    main()

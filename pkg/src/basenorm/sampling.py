"""Seeded random rationals, vectors and sequence reps.

Everything draws from an explicit ``random.Random`` so reports are
reproducible from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from basenorm.sequences import Geo, SeqRep, seq_norm

RATIOS = tuple(Fraction(p, q) for p, q in [(1, 2), (-1, 2), (1, 3), (-1, 3), (2, 3), (1, 4), (3, 4)])


@dataclass(frozen=True)
class SampleConfig:
    max_den: int = 6
    bound: int = 2  # numerators range over [-bound*den, bound*den]
    max_explicit: int = 5
    max_index: int = 8
    geo_prob: float = 0.5
    tail_prob: float = 0.5


DEFAULT = SampleConfig()


def rng_for(seed: int, stream: str = "") -> random.Random:
    """Independent generator per (seed, stream) so adding a stream does not
    shift the others."""
    return random.Random(f"{seed}:{stream}")


def rand_rational(rng: random.Random, cfg: SampleConfig = DEFAULT, bound=None) -> Fraction:
    b = cfg.bound if bound is None else bound
    den = rng.randint(1, cfg.max_den)
    return Fraction(rng.randint(-b * den, b * den), den)


def rand_nonneg(rng: random.Random, cfg: SampleConfig = DEFAULT, bound=None) -> Fraction:
    return abs(rand_rational(rng, cfg, bound))


def rand_vector(rng: random.Random, dim: int, cfg: SampleConfig = DEFAULT, bound=None) -> tuple:
    return tuple(rand_rational(rng, cfg, bound) for _ in range(dim))


def rand_seqrep(rng: random.Random, space: str, cfg: SampleConfig = DEFAULT) -> SeqRep:
    """Random explicit head, optional geometric tail, optional constant tail
    (only in c and l-infinity)."""
    k = rng.randint(0, cfg.max_explicit)
    idx = sorted(rng.sample(range(1, cfg.max_index + 1), k))
    entries = {i: rand_rational(rng, cfg) for i in idx}
    top = idx[-1] if idx else 0
    geo = None
    if rng.random() < cfg.geo_prob:
        start = top + rng.randint(1, 3)
        geo = Geo(rand_rational(rng, cfg), rng.choice(RATIOS), start)
    tail = Fraction(0)
    if space in ("c", "linf") and rng.random() < cfg.tail_prob:
        tail = rand_rational(rng, cfg)
    return SeqRep(space, entries, tail, geo)


def rand_finite_seqrep(rng: random.Random, space: str, cfg: SampleConfig = DEFAULT) -> SeqRep:
    return rand_seqrep(rng, space, replace(cfg, geo_prob=0.0, tail_prob=0.0))


def into_unit_ball(s: SeqRep) -> SeqRep:
    """Rescale ``s`` onto the unit ball when its norm exceeds 1."""
    n = seq_norm(s)
    return s if n <= 1 else s.scale(1 / n)

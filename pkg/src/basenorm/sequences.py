"""Exactly computable elements of c0, c, l1 and l-infinity.

A :class:`SeqRep` is a finite set of explicit entries on top of a
background that is a constant ``tail`` plus, optionally, one geometric
tail ``coeff * ratio**(i - start)`` for ``i >= start``. Indices are
1-based. Inside this class every norm, pairing and limit has a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from basenorm.errors import MalformedRep, NotRepresentable, SpaceMismatch
from basenorm.exact import fmt, rat
from basenorm.normed import Cmp

SEQ_SPACES = ("c0", "c", "l1", "linf")
SUP_SPACES = ("c0", "c", "linf")
# which representation tags each ambient space accepts
_CONTAINS = {"c0": ("c0",), "c": ("c0", "c"), "linf": ("c0", "c", "linf"), "l1": ("l1",)}
_ORDER = {"c0": 0, "c": 1, "linf": 2}


@dataclass(frozen=True)
class Geo:
    coeff: Fraction
    ratio: Fraction
    start: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", rat(self.coeff))
        object.__setattr__(self, "ratio", rat(self.ratio))
        if not abs(self.ratio) < 1:
            raise MalformedRep("geometric ratio must satisfy |ratio| < 1")
        if int(self.start) != self.start or self.start < 1:
            raise MalformedRep("geometric start must be a positive index")

    def at(self, i: int) -> Fraction:
        return self.coeff * self.ratio ** (i - self.start)


@dataclass(frozen=True)
class SeqRep:
    space: str
    explicit: tuple = ()
    tail: Fraction = Fraction(0)
    geo: Optional[Geo] = None

    def __post_init__(self):
        if self.space not in SEQ_SPACES:
            raise MalformedRep(f"unknown sequence space {self.space!r}")
        items = self.explicit.items() if isinstance(self.explicit, Mapping) else self.explicit
        entries = {}
        for i, v in items:
            if int(i) != i or int(i) < 1:
                raise MalformedRep(f"index {i!r} is not a positive integer")
            entries[int(i)] = rat(v)
        object.__setattr__(self, "explicit", tuple(sorted(entries.items())))
        object.__setattr__(self, "tail", rat(self.tail))
        if self.space in ("c0", "l1") and self.tail != 0:
            raise MalformedRep(f"{self.space} elements need tail 0")
        if self.geo is not None and entries and self.geo.start <= max(entries):
            raise MalformedRep("geometric tail must start after the last explicit index")

    @property
    def entries(self) -> dict:
        return dict(self.explicit)

    @property
    def horizon(self) -> int:
        """First index from which the value follows the background closed form."""
        h = self.explicit[-1][0] + 1 if self.explicit else 1
        if self.geo is not None:
            h = max(h, self.geo.start)
        return h

    def value(self, i: int) -> Fraction:
        if i < 1:
            raise IndexError("sequences are indexed from 1")
        for k, v in self.explicit:
            if k == i:
                return v
        return self.background(i)

    def background(self, i: int) -> Fraction:
        return _background(self.tail, self.geo, i)

    def prefix(self, upto: int) -> list:
        """Values at indices ``1 .. upto - 1``."""
        return [self.value(i) for i in range(1, upto)]

    def geo_coeff_at(self, h: int) -> Fraction:
        """Geometric coefficient re-based at index ``h >= horizon``."""
        return self.geo.at(h) if self.geo is not None else Fraction(0)

    @property
    def ratio(self) -> Fraction:
        return self.geo.ratio if self.geo is not None else Fraction(0)

    def support_max(self) -> int:
        """Largest explicit index carrying a nonzero value (0 if none)."""
        nz = [i for i, v in self.explicit if v != 0]
        return max(nz) if nz else 0

    def is_finitely_supported(self) -> bool:
        return self.tail == 0 and (self.geo is None or self.geo.coeff == 0)

    def with_space(self, space: str) -> "SeqRep":
        return SeqRep(space, self.explicit, self.tail, self.geo)

    # -- linear structure -------------------------------------------------

    def _combine(self, other: "SeqRep", a: Fraction, b: Fraction) -> "SeqRep":
        space = _join_space(self.space, other.space)
        geos = [g for g in (self.geo, other.geo) if g is not None and g.coeff != 0]
        if len({g.ratio for g in geos}) > 1:
            raise NotRepresentable("geometric tails with different ratios do not combine")
        tail = a * self.tail + b * other.tail
        if not geos:
            keys = {i for i, _ in self.explicit} | {i for i, _ in other.explicit}
            entries = {i: a * self.value(i) + b * other.value(i) for i in keys}
            return _normalized(space, entries, tail, None)
        start = max(self.horizon, other.horizon)
        entries = {i: a * self.value(i) + b * other.value(i) for i in range(1, start)}
        coeff = a * self.geo_coeff_at(start) + b * other.geo_coeff_at(start)
        return _normalized(space, entries, tail, Geo(coeff, geos[0].ratio, start))

    def __add__(self, other: "SeqRep") -> "SeqRep":
        return self._combine(other, Fraction(1), Fraction(1))

    def __sub__(self, other: "SeqRep") -> "SeqRep":
        return self._combine(other, Fraction(1), Fraction(-1))

    def scale(self, q) -> "SeqRep":
        q = rat(q)
        geo = None if self.geo is None else Geo(q * self.geo.coeff, self.geo.ratio, self.geo.start)
        return _normalized(self.space, {i: q * v for i, v in self.explicit}, q * self.tail, geo)

    def __neg__(self) -> "SeqRep":
        return self.scale(-1)

    def same_values(self, other: "SeqRep") -> bool:
        try:
            d = self._combine(other, Fraction(1), Fraction(-1))
        except NotRepresentable:
            # distinct nonzero geometric ratios never agree on a whole tail
            return False
        return not d.explicit and d.tail == 0 and d.geo is None

    def truncate(self, n: int) -> "SeqRep":
        """Entries at indices ``<= n`` kept, zero afterwards."""
        space = "l1" if self.space == "l1" else "c0"
        return _normalized(space, {i: self.value(i) for i in range(1, n + 1)}, Fraction(0), None)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        geo = None
        if self.geo is not None:
            geo = {"coeff": fmt(self.geo.coeff), "ratio": fmt(self.geo.ratio), "start": self.geo.start}
        return {
            "space": self.space,
            "explicit": {str(i): fmt(v) for i, v in self.explicit},
            "tail": fmt(self.tail),
            "geo": geo,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SeqRep":
        geo = data.get("geo")
        return cls(
            data["space"],
            {int(k): rat(v) for k, v in data.get("explicit", {}).items()},
            rat(data.get("tail", "0")),
            None if geo is None else Geo(rat(geo["coeff"]), rat(geo["ratio"]), int(geo["start"])),
        )


def _background(tail: Fraction, geo: Optional[Geo], i: int) -> Fraction:
    if geo is not None and i >= geo.start:
        return tail + geo.at(i)
    return tail


def _join_space(s: str, t: str) -> str:
    if s == t:
        return s
    if s in _ORDER and t in _ORDER:
        return s if _ORDER[s] > _ORDER[t] else t
    raise SpaceMismatch(f"cannot combine {s} and {t} elements")


def _normalized(space, entries: dict, tail: Fraction, geo: Optional[Geo]) -> SeqRep:
    if geo is not None and geo.coeff == 0:
        geo = None
    if geo is not None and geo.ratio == 0:
        entries = dict(entries)
        entries[geo.start] = tail + geo.coeff
        geo = None
    kept = {i: v for i, v in entries.items() if v != _background(tail, geo, i)}
    return SeqRep(space, kept, tail, geo)


def constant(q, space: str = "linf") -> SeqRep:
    return SeqRep(space, {}, rat(q))


def basis(j: int, space: str = "l1") -> SeqRep:
    """The unit vector e_j."""
    return SeqRep(space, {j: Fraction(1)})


def indicator_from(n: int) -> SeqRep:
    """1 at indices ``>= n``, 0 before: an element of c (and l-infinity)."""
    return SeqRep("c", {i: Fraction(0) for i in range(1, n)}, Fraction(1))


def seq_norm(s: SeqRep) -> Fraction:
    """Exact l1 norm for ``l1`` reps, exact sup norm otherwise."""
    h = s.horizon
    head = s.prefix(h)
    c = s.geo_coeff_at(h)
    r = s.ratio
    if s.space == "l1":
        total = sum((abs(v) for v in head), Fraction(0))
        return total + abs(c) / (1 - abs(r))
    # monotone or alternating geometric tail: the sup sits at one of the first
    # two offsets or at the limit
    candidates = [abs(v) for v in head] + [abs(s.tail)]
    if s.geo is not None:
        candidates += [abs(s.tail + c), abs(s.tail + c * r)]
    return max(candidates)


def pair_seq(a: SeqRep, phi: SeqRep) -> Fraction:
    """``sum_i a_i phi_i`` for bounded ``a`` and summable ``phi``."""
    if a.space not in SUP_SPACES or phi.space != "l1":
        raise SpaceMismatch(f"pairing needs (c0|c|linf, l1), got ({a.space}, {phi.space})")
    h = max(a.horizon, phi.horizon)
    total = sum((x * y for x, y in zip(a.prefix(h), phi.prefix(h))), Fraction(0))
    cp = phi.geo_coeff_at(h)
    if cp == 0:
        return total
    rp = phi.ratio
    total += a.tail * cp / (1 - rp)
    ca = a.geo_coeff_at(h)
    if ca:
        total += ca * cp / (1 - a.ratio * rp)
    return total


def seq_limit(a: SeqRep) -> Fraction:
    """Limit of a convergent representable sequence: its constant tail."""
    if a.space not in SUP_SPACES:
        raise SpaceMismatch("limit is taken in c0, c or l-infinity")
    return a.tail


def lim_functional(a: SeqRep) -> Fraction:
    """The tail-limit functional on representable l-infinity.

    It is linear with ``|lim(a)| <= ||a||_sup``, vanishes on c0 and on every
    finitely supported sequence, and is therefore not given by pairing
    against any summable sequence.
    """
    return seq_limit(a)


@dataclass(frozen=True)
class CDualRep:
    """Element ``phi0 * lim + sum_i phi_i (.)_i`` of c*."""

    limit_coeff: Fraction
    ell1: SeqRep

    def __post_init__(self):
        object.__setattr__(self, "limit_coeff", rat(self.limit_coeff))
        if self.ell1.space != "l1":
            raise SpaceMismatch("the summable part must be an l1 rep")

    def norm(self) -> Fraction:
        return abs(self.limit_coeff) + seq_norm(self.ell1)

    def to_json(self) -> dict:
        return {"limit_coeff": fmt(self.limit_coeff), "ell1": self.ell1.to_json()}


def c_dual_pair(f: CDualRep, a: SeqRep) -> Fraction:
    if a.space not in ("c0", "c"):
        raise SpaceMismatch("c* acts on convergent sequences")
    return f.limit_coeff * seq_limit(a) + pair_seq(a, f.ell1)


def sign_witness(phi: SeqRep, n: int, limit_sign: Fraction = Fraction(0)) -> SeqRep:
    """Unit-ball element of c matching the signs of ``phi`` below index n.

    Entries from ``n`` on are ``limit_sign``. Against ``phi`` (and a limit
    coefficient of that sign) this recovers the norm up to twice the tail
    ``sum_{i>=n} |phi_i|``.
    """
    entries = {i: Fraction((v > 0) - (v < 0)) for i, v in enumerate(phi.prefix(n), start=1)}
    space = "c0" if limit_sign == 0 else "c"
    return _normalized(space, entries, rat(limit_sign), None)


def l1_tail_norm(phi: SeqRep, n: int) -> Fraction:
    """``sum_{i >= n} |phi_i|``."""
    return seq_norm(phi) - sum((abs(v) for v in phi.prefix(n)), Fraction(0))


@dataclass(frozen=True)
class TailLimit:
    """``scale * lim`` as a functional on representable l-infinity."""

    scale: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scale", rat(self.scale))

    def __call__(self, a: SeqRep) -> Fraction:
        return self.scale * lim_functional(a)

    def norm(self) -> Fraction:
        # |lim a| <= ||a||, with equality at the constant sequence 1
        return abs(self.scale)

    def to_json(self) -> dict:
        return {"tail_limit": fmt(self.scale)}


@dataclass(frozen=True)
class SeqSpace:
    """Sequence space used as the E in BN(E) / OU(E).

    ``lim`` is the one-dimensional span of the tail-limit functional inside
    the dual of l-infinity; it is all of that dual this package represents.
    """

    kind: str

    def __post_init__(self):
        if self.kind not in SEQ_SPACES + ("lim",):
            raise SpaceMismatch(f"unknown sequence space {self.kind!r}")

    def __str__(self) -> str:
        return self.kind

    def check(self, x):
        if self.kind == "lim":
            if not isinstance(x, TailLimit):
                raise SpaceMismatch("lim space holds TailLimit functionals")
            return x
        if not isinstance(x, SeqRep) or x.space not in _CONTAINS[self.kind]:
            got = getattr(x, "space", type(x).__name__)
            raise SpaceMismatch(f"{got} element in {self.kind}")
        return x

    def zero(self):
        if self.kind == "lim":
            return TailLimit(0)
        return SeqRep(self.kind)

    def norm_of(self, x) -> Fraction:
        x = self.check(x)
        if self.kind == "lim":
            return x.norm()
        return seq_norm(x)

    def compare(self, x, t) -> Cmp:
        return Cmp.of(self.norm_of(x), rat(t))

    def dual(self) -> "SeqSpace":
        duals = {"c0": "l1", "l1": "linf"}
        if self.kind not in duals:
            raise NotRepresentable(f"dual of {self.kind} is not represented")
        return SeqSpace(duals[self.kind])

    def to_json(self) -> str:
        return self.kind

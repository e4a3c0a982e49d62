"""Exact rationals and a two-phase simplex solver over them.

Scalars are plain :class:`fractions.Fraction` objects, which are already
normalized (coprime, positive denominator) on construction. The LP kernel
is a dense tableau simplex with Bland's rule, so it terminates on
degenerate programs without any tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from basenorm.errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]

OPTIMAL = "Optimal"
INFEASIBLE = "Infeasible"
UNBOUNDED = "Unbounded"

_RELATIONS = ("<=", "=", ">=")


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently smuggle binary rounding into
    code that promises exact answers.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fmt(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def vec(values: Iterable) -> Vector:
    return tuple(rat(v) for v in values)


def parse_point(text: str) -> Vector:
    """Parse ``"p/q,p/q,..."``."""
    return vec(part for part in text.split(",") if part.strip())


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rat_ceil(q) -> int:
    """Smallest integer >= q."""
    return math.ceil(rat(q))


def is_square(q: Fraction) -> Optional[Fraction]:
    """Exact rational square root of ``q`` if it has one, else None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Constraint:
    row: Vector
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}")
        object.__setattr__(self, "row", vec(self.row))
        object.__setattr__(self, "rhs", rat(self.rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = dot(self.row, x)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """``objective . x`` optimized subject to ``constraints`` and ``bounds``.

    ``bounds`` holds one ``(lower, upper)`` pair per variable with ``None``
    meaning unbounded on that side. When omitted every variable is
    nonnegative, the usual LP convention.
    """

    objective: Vector
    constraints: tuple = ()
    sense: str = "min"
    bounds: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "objective", vec(self.objective))
        cons = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        object.__setattr__(self, "constraints", cons)
        if self.sense not in ("min", "max"):
            raise ValueError("sense must be 'min' or 'max'")
        n = len(self.objective)
        for c in cons:
            if len(c.row) != n:
                raise DimensionMismatch(
                    f"constraint row has {len(c.row)} entries, objective has {n}"
                )
        if self.bounds is None:
            object.__setattr__(self, "bounds", tuple((Fraction(0), None) for _ in range(n)))
        else:
            if len(self.bounds) != n:
                raise DimensionMismatch("one bound pair per variable required")
            object.__setattr__(
                self,
                "bounds",
                tuple(
                    (None if lo is None else rat(lo), None if hi is None else rat(hi))
                    for lo, hi in self.bounds
                ),
            )

    @property
    def dimension(self) -> int:
        return len(self.objective)

    def feasible(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dimension:
            return False
        for (lo, hi), xi in zip(self.bounds, x):
            if lo is not None and xi < lo:
                return False
            if hi is not None and xi > hi:
                return False
        return all(c.holds(x) for c in self.constraints)


@dataclass(frozen=True)
class LPOutcome:
    status: str
    optimum: Optional[Fraction] = None
    witness: Optional[Vector] = None


@dataclass
class _Tableau:
    rows: list  # each row: list of Fraction, last entry is the rhs
    basis: list

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow = [v / p for v in prow]
            self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(row, prow)]
        self.basis[r] = c

    def reduced_costs(self, cost: Sequence[Fraction]) -> list:
        red = list(cost) + [Fraction(0)]
        for row, b in zip(self.rows, self.basis):
            cb = cost[b]
            if cb:
                red = [x - cb * y for x, y in zip(red, row)]
        return red

    def run(self, cost: Sequence[Fraction], allowed: int) -> bool:
        """Minimize ``cost`` over columns ``< allowed``; False if unbounded."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if red[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)


def _standardize(p: LinearProgram):
    """Rewrite in terms of nonnegative variables y with x = offset + M y."""
    columns = []  # per original variable: list of (y index, coefficient)
    offsets = []
    extra_rows = []
    ny = 0
    for lo, hi in p.bounds:
        if lo is not None:
            columns.append([(ny, Fraction(1))])
            offsets.append(lo)
            if hi is not None:
                extra_rows.append((ny, hi - lo))
            ny += 1
        elif hi is not None:
            columns.append([(ny, Fraction(-1))])
            offsets.append(hi)
            ny += 1
        else:
            columns.append([(ny, Fraction(1)), (ny + 1, Fraction(-1))])
            offsets.append(Fraction(0))
            ny += 2

    def lift(row):
        out = [Fraction(0)] * ny
        for a, col in zip(row, columns):
            if a:
                for k, coef in col:
                    out[k] += a * coef
        return out

    rows = []
    for c in p.constraints:
        shift = dot(c.row, offsets)
        rows.append((lift(c.row), c.relation, c.rhs - shift))
    for k, cap in extra_rows:
        r = [Fraction(0)] * ny
        r[k] = Fraction(1)
        rows.append((r, "<=", cap))
    cost = lift(p.objective)
    if p.sense == "max":
        cost = [-v for v in cost]
    return rows, cost, columns, offsets, ny


def lp_solve(p: LinearProgram) -> LPOutcome:
    """Solve ``p`` exactly.

    Returns the optimum together with a witness that satisfies every
    constraint with exact (in)equality, or classifies the program as
    infeasible or unbounded.
    """
    rows, cost, columns, offsets, ny = _standardize(p)

    # flip rows so every rhs is nonnegative
    normalized = []
    for row, rel, rhs in rows:
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        normalized.append((row, rel, rhs))

    n_slack = sum(1 for _, rel, _ in normalized if rel != "=")
    n_art = sum(1 for _, rel, _ in normalized if rel != "<=")
    width = ny + n_slack + n_art

    table = []
    basis = []
    s_idx, a_idx = ny, ny + n_slack
    for row, rel, rhs in normalized:
        line = list(row) + [Fraction(0)] * (n_slack + n_art) + [rhs]
        if rel == "<=":
            line[s_idx] = Fraction(1)
            basis.append(s_idx)
            s_idx += 1
        elif rel == ">=":
            line[s_idx] = Fraction(-1)
            s_idx += 1
            line[a_idx] = Fraction(1)
            basis.append(a_idx)
            a_idx += 1
        else:
            line[a_idx] = Fraction(1)
            basis.append(a_idx)
            a_idx += 1
        table.append(line)

    first_art = ny + n_slack
    tab = _Tableau(table, basis)
    if n_art:
        phase1 = [Fraction(0)] * first_art + [Fraction(1)] * n_art
        tab.run(phase1, width)
        if any(tab.rows[i][-1] > 0 for i, b in enumerate(tab.basis) if b >= first_art):
            return LPOutcome(INFEASIBLE)
        # drive zero-level artificials out of the basis; drop redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= first_art:
                col = next((j for j in range(first_art) if tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1
        tab.rows = [r[:first_art] + [r[-1]] for r in tab.rows]

    full_cost = list(cost) + [Fraction(0)] * n_slack
    if not tab.run(full_cost, first_art):
        return LPOutcome(UNBOUNDED)

    y = [Fraction(0)] * first_art
    for row, b in zip(tab.rows, tab.basis):
        y[b] = row[-1]
    x = tuple(
        off + sum((coef * y[k] for k, coef in col), Fraction(0))
        for off, col in zip(offsets, columns)
    )
    return LPOutcome(OPTIMAL, dot(p.objective, x), x)


def solve_linear_system(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Exact Gauss-Jordan elimination for ``rows . z = rhs``.

    Returns ``(solution, consistent, rank)``. Free variables are set to 0,
    so the solution is unique exactly when ``rank`` equals the number of
    unknowns.
    """
    if not rows:
        return (), True, 0
    n = len(rows[0])
    aug = [list(map(rat, r)) + [rat(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [v / p for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    consistent = all(any(v != 0 for v in row[:-1]) or row[-1] == 0 for row in aug)
    z = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        z[c] = aug[i][-1]
    return tuple(z), consistent, len(pivots)


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return solve_linear_system(vectors, [Fraction(0)] * len(vectors))[2]

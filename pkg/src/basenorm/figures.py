"""Exact geometry for the four pictures of BN/OU spaces.

Fig 1: BN over the Euclidean plane (disc base). Fig 2: l1(3) (triangle base).
Fig 3: OU over the Euclidean plane. Fig 4: the order interval of l-infinity(3).

Points are rational 3-vectors. Two conventions are offered:

* ``axes``: the natural coordinates, ``(x1, x2, trace)`` for Figs 1 and 3 and
  the coordinates of R^3 for Figs 2 and 4;
* ``trace-vertical``: the trace (resp. the direction of the unit) is the
  second coordinate, which is the vertical one when drawn.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from basenorm.errors import UnknownFigure
from basenorm.exact import fmt

CONVENTIONS = ("trace-vertical", "axes")
FIGURES = (1, 2, 3, 4)
F0, F1 = Fraction(0), Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Polyline:
    name: str
    style: str  # solid | dotted | axis
    points: tuple
    closed: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "style": self.style,
            "closed": self.closed,
            "points": [[fmt(c) for c in p] for p in self.points],
        }


@dataclass(frozen=True)
class FigureGeometry:
    figure: int
    convention: str
    title: str
    polylines: tuple
    vertices: dict
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "figure": self.figure,
            "convention": self.convention,
            "title": self.title,
            "polylines": [p.to_json() for p in self.polylines],
            "vertices": {k: [[fmt(c) for c in p] for p in v] for k, v in self.vertices.items()},
            "meta": self.meta,
        }


def circle_points(n: int = 4) -> list:
    """Rational points on the unit circle in cyclic order.

    The right half comes from ``t |-> ((1-t^2)/(1+t^2), 2t/(1+t^2))`` for
    ``t = k/n``, ``-n <= k <= n``; the left half is its mirror image.
    """
    right = []
    for k in range(-n, n + 1):
        t = Fraction(k, n)
        d = 1 + t * t
        right.append(((1 - t * t) / d, 2 * t / d))
    left = [(-c, s) for c, s in reversed(right[1:-1])]
    return right + left


def _disc_lift(points, radius, height) -> tuple:
    return tuple((radius * c, radius * s, height) for c, s in points)


def _seg(name, style, a, b) -> Polyline:
    return Polyline(name, style, (tuple(map(Fraction, a)), tuple(map(Fraction, b))))


def _axes(lo: Fraction, hi: Fraction) -> list:
    out = []
    for k in range(3):
        a = [F0, F0, F0]
        b = [F0, F0, F0]
        a[k], b[k] = lo, hi
        out.append(_seg(f"axis{k + 1}", "axis", a, b))
    return out


def _basis(k: int) -> tuple:
    return tuple(F1 if i == k else F0 for i in range(3))


def zigzag_cycle() -> list:
    """Vertices of [0, 1]^3 on both the boundary of the cone and of 1 - cone,
    ordered along cube edges.

    A vertex is on the first boundary when a coordinate is 0 and on the
    second when a coordinate is 1. The walk starts at e1 and always takes
    the lexicographically largest unvisited neighbour.
    """
    cand = [
        tuple(Fraction(c) for c in v)
        for v in product((1, 0), repeat=3)
        if 0 in v and 1 in v
    ]
    cycle = [_basis(0)]
    while len(cycle) < len(cand):
        cur = cycle[-1]
        nbrs = [v for v in cand if v not in cycle and sum(a != b for a, b in zip(v, cur)) == 1]
        cycle.append(max(nbrs))
    assert sum(a != b for a, b in zip(cycle[0], cycle[-1])) == 1
    return cycle


def _fig1() -> tuple:
    circ = circle_points()
    base = _disc_lift(circ, F1, F1)
    lines = _axes(Fraction(-2), Fraction(2))
    lines.append(Polyline("base", "solid", base, closed=True))
    for v in [(1, 0), (-1, 0), (0, 1), (0, -1)]:
        lines.append(_seg("cone", "solid", (0, 0, 0), (2 * v[0], 2 * v[1], 2)))
    lines.append(Polyline("ball", "dotted", _disc_lift(circ, F1, -F1), closed=True))
    for s in (1, -1):
        lines.append(_seg("ball", "dotted", (s, 0, -1), (s, 0, 1)))
    return "base-norm space over the Euclidean plane", lines, {"base_circle": list(base)}, {}


def _fig2() -> tuple:
    e = [_basis(k) for k in range(3)]
    neg = [tuple(-c for c in v) for v in e]
    lines = _axes(Fraction(-2), Fraction(2))
    lines.append(Polyline("base", "solid", tuple(e), closed=True))
    for v in e:
        lines.append(_seg("cone", "solid", (0, 0, 0), tuple(2 * c for c in v)))
    lines.append(Polyline("ball", "dotted", tuple(neg), closed=True))
    for i in range(3):
        for j in range(3):
            if i != j:
                lines.append(_seg("ball", "dotted", e[i], neg[j]))
    verts = {"base": e, "ball": [p for pair in zip(e, neg) for p in pair]}
    return "l1(3)", lines, verts, {}


def _fig3() -> tuple:
    lines = _axes(Fraction(-2), Fraction(2))
    h = Fraction(5, 4)
    for s in (1, -1):
        lines.append(_seg("cone", "solid", (0, 0, 0), (s * h, 0, h)))
        lines.append(_seg("unit_minus_cone", "solid", (0, 0, 1), (s * h, 0, 1 - h)))
    circle = _disc_lift(circle_points(), HALF, HALF)
    lines.append(Polyline("intersection", "dotted", circle, closed=True))
    meta = {
        "intersection_circle": {
            "height": fmt(HALF),
            "radius": fmt(HALF),
            "derived": True,
            "derivation": "||x|| = lam = 1 - lam gives lam = ||x|| = 1/2",
        }
    }
    return "order-unit space over the Euclidean plane", lines, {"intersection_circle": list(circle)}, meta


def _fig4() -> tuple:
    e = [_basis(k) for k in range(3)]
    unit = (F1, F1, F1)
    cycle = zigzag_cycle()
    lines = _axes(Fraction(-1), Fraction(2))
    for v in e:
        lines.append(_seg("cone", "solid", (0, 0, 0), v))
        lines.append(_seg("unit_minus_cone", "solid", tuple(1 - c for c in v), unit))
    lines.append(Polyline("zigzag", "dotted", tuple(cycle), closed=True))
    cube = [tuple(Fraction(c) for c in v) for v in product((0, 1), repeat=3)]
    return "l-infinity(3)", lines, {"cube": cube, "zigzag": cycle, "unit": [unit]}, {}


_BUILDERS = {1: _fig1, 2: _fig2, 3: _fig3, 4: _fig4}


def trace_vertical_map(figure: int):
    """Coordinate change into the trace-vertical convention.

    Figs 1 and 3 swap the trace into second place. Figs 2 and 4 use
    ``(x, y, z) |-> (y - x, x + y + z, (x + y - 2z)/2)``, which sends the
    trace ``x + y + z`` to the vertical coordinate and is invertible.
    """
    if figure in (1, 3):
        return lambda p: (p[0], p[2], p[1])
    return lambda p: (p[1] - p[0], p[0] + p[1] + p[2], (p[0] + p[1] - 2 * p[2]) / 2)


def emit_figure(which: int, convention: str = "trace-vertical") -> FigureGeometry:
    if which not in _BUILDERS:
        raise UnknownFigure(f"no figure {which!r}; choose from {FIGURES}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    title, lines, verts, meta = _BUILDERS[which]()
    if convention == "trace-vertical":
        m = trace_vertical_map(which)
        lines = [Polyline(p.name, p.style, tuple(m(q) for q in p.points), p.closed) for p in lines]
        verts = {k: [m(q) for q in v] for k, v in verts.items()}
    meta = dict(meta, exact=True)
    return FigureGeometry(which, convention, title, tuple(lines), verts, meta)


def figure_json(fig: FigureGeometry) -> str:
    return json.dumps(fig.to_json(), sort_keys=True, indent=2) + "\n"


# -- SVG --------------------------------------------------------------------

SCALE = 60
_DASH = {"solid": "", "dotted": ' stroke-dasharray="2,3"', "axis": ""}
_COLOR = {"solid": "black", "dotted": "black", "axis": "lightgray"}


def _project(p) -> tuple:
    # oblique projection; the third coordinate recedes down-left
    x, y, z = p
    k = Fraction(2, 5)
    return float(x - k * z), float(-(y - k * z))


def figure_svg(fig: FigureGeometry) -> str:
    pts = [_project(q) for pl in fig.polylines for q in pl.points]
    xs = [a for a, _ in pts]
    ys = [b for _, b in pts]
    pad = 0.5
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * SCALE:.1f}" height="{h * SCALE:.1f}" '
        f'viewBox="{x0 * SCALE:.2f} {y0 * SCALE:.2f} {w * SCALE:.2f} {h * SCALE:.2f}">',
        f"  <title>Figure {fig.figure}: {fig.title}</title>",
    ]
    for pl in fig.polylines:
        coords = " ".join(f"{a * SCALE:.2f},{b * SCALE:.2f}" for a, b in map(_project, pl.points))
        tag = "polygon" if pl.closed else "polyline"
        out.append(
            f'  <{tag} class="{pl.name}" points="{coords}" fill="none" '
            f'stroke="{_COLOR[pl.style]}" stroke-width="1.2"{_DASH[pl.style]}/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Command-line entry point: ``basenorm <command> ...``.

Every command writes deterministic JSON (sorted keys, rationals as
``"p/q"`` strings) given its flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from basenorm import geometry
from basenorm.bnou import BNElem, OUElem
from basenorm.counterexamples import RUNNERS
from basenorm.duality import lev
from basenorm.errors import BasenormError
from basenorm.exact import fmt, parse_point, rat, vec
from basenorm.figures import CONVENTIONS, emit_figure, figure_json, figure_svg
from basenorm.scott import TruncationChain, scott_continuity_check, verify_norm_convergence
from basenorm.sequences import SeqRep, SeqSpace, constant
from basenorm.suite import run_suite


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def load_ball(path) -> geometry.Polytope:
    """A polytope file: ``{"dim": d, "vertices": [[...], ...]}`` or a bare vertex list."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, list):
        verts = [vec(v) for v in data]
        return geometry.Polytope(len(verts[0]), tuple(verts))
    if "dim" not in data:
        data = dict(data, dim=len(data["vertices"][0]))
    return geometry.Polytope.from_json(data)


def cmd_gauge(args) -> int:
    ball = load_ball(args.ball)
    x = parse_point(args.point)
    g, w = geometry.gauge_decomposition(ball, x)
    _emit(dumps({
        "point": [fmt(c) for c in x],
        "gauge": fmt(g),
        "weights": {str(i): fmt(c) for i, c in enumerate(w) if c},
    }), args.out)
    return 0


def cmd_cx(args) -> int:
    rep = RUNNERS[args.which](args.samples, args.seed)
    _emit(dumps(rep.to_json()), args.out)
    if args.out is not None:
        print(f"counterexample {args.which}: verdict {rep.verdict}, {args.samples} samples -> {args.out}")
    return 0 if rep.verdict else 1


def _figure_list(text: str) -> list:
    return [int(t) for t in text.split(",") if t.strip()]


def cmd_figures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for w in _figure_list(args.which):
        fig = emit_figure(w, args.coords)
        text = figure_json(fig) if args.format == "json" else figure_svg(fig)
        path = out / f"figure{w}.{args.format}"
        path.write_text(text)
        print(path)
    return 0


def cmd_suite(args) -> int:
    status, report = run_suite(args.seed, args.cases, corrupt_gauge=args.corrupt_gauge)
    _emit(dumps(report), args.out)
    return status


def cmd_chain(args) -> int:
    target = SeqRep.from_json(json.loads(Path(args.target).read_text()))
    if target.space != "l1":
        raise BasenormError("chain targets are l1 sequence reps")
    chain = TruncationChain(OUElem(SeqSpace("l1"), target, rat(args.mu)))
    eps = rat(args.eps)
    n = verify_norm_convergence(chain, eps)
    phi = lev(BNElem(SeqSpace("linf"), constant(1), 1))
    report = scott_continuity_check(phi, chain, args.depth, eps)
    _emit(dumps({
        "target": target.to_json(),
        "mu": fmt(chain.target.lam),
        "eps": fmt(eps),
        "N": n,
        "distances": [[k, fmt(chain.distance(k))] for k in range(1, args.depth + 1)],
        "functional": phi.to_json(),
        "phi_sup": fmt(phi(chain.sup())),
        "scott": report.to_json(),
    }), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="basenorm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gauge", help="Minkowski gauge of a point for a polytope ball")
    g.add_argument("--ball", required=True, help="polytope JSON file")
    g.add_argument("--point", required=True, help='comma separated rationals, e.g. "1/2,3/4"')
    g.add_argument("--out")
    g.set_defaults(func=cmd_gauge)

    c = sub.add_parser("cx", help="run a counterexample harness")
    c.add_argument("--which", type=int, choices=sorted(RUNNERS), required=True)
    c.add_argument("--samples", type=int, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_cx)

    f = sub.add_parser("figures", help="emit figure geometry")
    f.add_argument("--which", default="1,2,3,4")
    f.add_argument("--coords", choices=CONVENTIONS, default="trace-vertical")
    f.add_argument("--format", choices=("json", "svg"), default="json")
    f.add_argument("--out", default="figures")
    f.set_defaults(func=cmd_figures)

    s = sub.add_parser("suite", help="run module invariants and acceptance criteria")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--corrupt-gauge", action="store_true", help="mutation test: use a wrong gauge")
    s.add_argument("--out")
    s.set_defaults(func=cmd_suite)

    ch = sub.add_parser("chain", help="truncation chain convergence for an l1 target")
    ch.add_argument("--target", required=True, help="sequence rep JSON file")
    ch.add_argument("--mu", required=True)
    ch.add_argument("--eps", required=True)
    ch.add_argument("--depth", type=int, default=16)
    ch.add_argument("--out")
    ch.set_defaults(func=cmd_chain)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BasenormError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

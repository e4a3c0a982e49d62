"""Write all four figures in both conventions and both formats.

    python scripts/emit_figures.py --out figures/
"""

import argparse
from pathlib import Path

from basenorm.figures import CONVENTIONS, FIGURES, emit_figure, figure_json, figure_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()

    for conv in CONVENTIONS:
        d = Path(args.out) / conv
        d.mkdir(parents=True, exist_ok=True)
        for w in FIGURES:
            fig = emit_figure(w, conv)
            (d / f"figure{w}.json").write_text(figure_json(fig))
            (d / f"figure{w}.svg").write_text(figure_svg(fig))
            print(d / f"figure{w}", len(fig.polylines), "polylines")


if __name__ == "__main__":
    main()

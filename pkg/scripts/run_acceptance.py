"""Run all acceptance criteria and write a JSON summary.

    python scripts/run_acceptance.py --seed 20240601 --out results/acceptance.json
"""

import argparse
import json
import sys
from pathlib import Path

from basenorm.acceptance import DEFAULT_SEED, run_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    results = run_all(args.seed)
    for r in results:
        print(r.line())
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        payload = {"seed": args.seed, "criteria": [r.to_json() for r in results]}
        out.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())

"""Run every registered check over all labelled graphs up to a given order.

    python scripts/exhaustive_sweep.py --max-n 6 --workers 4 --out sweep_n6.json
"""
import argparse
import sys

from cyclechain.families import FamilySpec
from cyclechain.report import CampaignConfig, Source, dumps, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--checks", default="all")
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = CampaignConfig(
        sources=[Source(spec=FamilySpec("all_labeled", n=n)) for n in range(args.max_n + 1)],
        checks=args.checks, workers=args.workers,
    )
    summary, doc = run_sweep(cfg)
    text = dumps(doc) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    for name, b in doc["checks"].items():
        print(f"{name:20s} holds={b['holds']:6d} fails={b['fails']:4d} n/a={b['not_applicable']:6d} "
              f"tight={b['tight']:6d}")
    return 1 if summary.failures else 0


if __name__ == "__main__":
    sys.exit(main())

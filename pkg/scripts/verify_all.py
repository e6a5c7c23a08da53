"""Run every verification suite and write a JSON report.

    python scripts/verify_all.py --order 8 --out verify_report.json
"""

import argparse
import json
import sys

from motivic_hilb.config import VerifyConfig
from motivic_hilb.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--order", type=int, default=8)
    ap.add_argument("--floor", type=int, default=-80, help="Feit-Fine floor in half-powers of L")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=VerifyConfig.seed)
    ap.add_argument("--cases", type=int, default=200, help="randomized plethysm cases")
    ap.add_argument("--suite", choices=("all", *SUITES), default="all")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    cfg = VerifyConfig(order=args.order, floor=args.floor, threads=args.threads, seed=args.seed, plethysm_cases=args.cases)
    reports = run_suite(args.suite, cfg)
    for rep in reports:
        bad = [name for name, r in rep.identities if not r.passed]
        print(f"{rep.suite:10s} {rep.status:4s} {len(rep.identities):3d} identities  {rep.wall_time_s:7.2f}s  {' '.join(bad)}")
    doc = {"config": cfg.to_json(), "reports": [r.to_json() for r in reports]}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

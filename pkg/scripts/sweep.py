"""Exhaustive theorem sweep over all labeled graphs up to a vertex count.

    python3 scripts/sweep.py --max-n 6
    python3 scripts/sweep.py --min-n 7 --max-n 7 --shallow
"""

import argparse
import sys
import time

from cleangraphs.sweep import CHECKS, sweep


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--shallow", action="store_true", help="skip the per-hole checks")
    args = p.parse_args()

    t0 = time.perf_counter()
    stats = sweep(args.max_n, args.min_n, deep=not args.shallow)
    secs = time.perf_counter() - t0
    print(f"graphs={stats.graphs} clean={stats.clean} holes={stats.holes} seconds={secs:.1f}")
    for check in CHECKS:
        print(f"{check}: {stats.violations[check]} violations")
        for line in stats.examples.get(check, []):
            print(f"  {line}")
    return 1 if sum(stats.violations.values()) else 0


if __name__ == "__main__":
    sys.exit(main())

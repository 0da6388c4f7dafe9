"""Time find_simplicial_clique across graph sizes and print a CSV with a log-log slope.

    python3 scripts/bench.py --sizes 50,100,200,400 --family cycle-blowup
"""

import argparse
import sys

import numpy as np

from cleangraphs.cli import bench_rows


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="50,100,200,400")
    p.add_argument("--family", default="unit-interval", choices=("unit-interval", "cycle-blowup"))
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rows = bench_rows([int(s) for s in args.sizes.split(",")], args.family, args.density, args.seed)
    print("n,m,seconds")
    for n, m, sec in rows:
        print(f"{n},{m},{sec:.6f}")
    if len(rows) > 1:
        n, _, sec = np.array(rows, dtype=float).T
        slope = np.polyfit(np.log(n), np.log(np.maximum(sec, 1e-9)), 1)[0]
        print(f"# log-log slope {slope:.2f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

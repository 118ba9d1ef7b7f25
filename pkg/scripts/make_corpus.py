#!/usr/bin/env python3
"""Generate a graph6 corpus of random connected graphs for the traceability
campaign at orders the enumerator does not cover.

Usage: python scripts/make_corpus.py --count 100000 --orders 9 10 --out corpus.g6
"""

import argparse
import random
import sys

from zcert import from_edge_list, to_graph6
from zcert.structure import is_connected


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100_000)
    ap.add_argument("--orders", type=int, nargs="+", default=[9, 10])
    ap.add_argument("--density-range", type=float, nargs=2, default=(0.15, 0.95))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    lo, hi = args.density_range
    written = 0
    with open(args.out, "w") as fh:
        fh.write(">>graph6<<\n")
        while written < args.count:
            n = rng.choice(args.orders)
            p = rng.uniform(lo, hi)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p]
            g = from_edge_list(n, edges)
            if not is_connected(g):
                continue
            fh.write(to_graph6(g) + "\n")
            written += 1
    print(f"wrote {written} graphs to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

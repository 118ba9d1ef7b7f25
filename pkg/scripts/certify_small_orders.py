#!/usr/bin/env python3
"""Run the full desk-scale certification: bound theorem over all labeled
graphs up to order 7, Hamiltonian conditions over the same corpus, and
print one report per campaign.

Usage: python scripts/certify_small_orders.py [--max-n 7] [--jobs J]
"""

import argparse
import sys

from zcert import EnumerationSource, emit_report, run_theorem1_campaign, run_theorem23_campaign


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", choices=("json-lines", "csv"), default="json-lines")
    args = ap.parse_args()

    certified = True
    for n in range(1, args.max_n + 1):
        result = run_theorem1_campaign(EnumerationSource(n), jobs=args.jobs)
        sys.stdout.write(emit_report(result, format=args.format))
        certified &= result.certified
    for n in range(3, args.max_n + 1):
        result = run_theorem23_campaign(EnumerationSource(n), theorem=2, jobs=args.jobs)
        sys.stdout.write(emit_report(result, format=args.format))
        certified &= result.certified
    return 0 if certified else 1


if __name__ == "__main__":
    sys.exit(main())

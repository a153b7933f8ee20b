#!/usr/bin/env python3
"""Sweep every identity checker over a default grid and print a pass/fail count per identity."""

import argparse
import sys
import time
from collections import Counter

from shufflemzv.cli import VERIFIERS, run_verification

SMALL = {
    "lemma21": {"la": range(1, 5), "lb": range(0, 5)},
    "thm22": {"la": range(0, 6), "lb": range(0, 6)},
    "e23": {n: range(1, 5) for n in "mnjk"},
    "thm11": {n: range(1, 5) for n in "mnjk"},
    "euler": {"m": range(1, 9), "n": range(1, 9)},
    "thm13": {n: range(1, 3) for n in "mnjkst"},
    "e24": {"m": range(1, 31), "k": range(0, 31), "n": range(0, 31)},
}


def default_ranges(identity: str, hi: int) -> dict:
    if identity in SMALL:
        return SMALL[identity]
    names = VERIFIERS[identity][0]
    return {n: range(1, hi + 1) for n in names}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("identities", nargs="*", default=sorted(VERIFIERS))
    parser.add_argument("--hi", type=int, default=3, help="upper bound for the block identities")
    args = parser.parse_args(argv)

    failed = False
    for identity in args.identities:
        start = time.perf_counter()
        counts = Counter(r["status"] for r in run_verification(identity, default_ranges(identity, args.hi)))
        failed |= counts["fail"] > 0
        summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
        print(f"{identity:8s} {summary:40s} {time.perf_counter() - start:6.2f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Cross-check the closed-form decision against exhaustive enumeration.

Sweeps every (c, s, t) with s <= t whose full coloring space c^(s*t) fits
the budget, comparing the decision procedure with brute force over all
matrices.  Exits nonzero on any disagreement.

Usage: python3 scripts/oracle_sweep.py [--colors 2 3] [--budget 2000000]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from idcolor.decide import has_identity_coloring  # noqa: E402
from idcolor.oracle import brute_force_exists  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--colors", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--budget", type=int, default=2_000_000)
    args = parser.parse_args()

    mismatches = 0
    start = time.time()
    for c in args.colors:
        s = 1
        while c ** (s * s) <= args.budget:
            t = s
            while c ** (s * t) <= args.budget:
                want = has_identity_coloring(c, s, t).exists
                got = brute_force_exists(c, s, t)
                mark = "ok" if got == want else "MISMATCH"
                if got != want:
                    mismatches += 1
                print(f"c={c} s={s} t={t}: decide={want} brute={got} {mark}")
                t += 1
            s += 1
    print(f"done in {time.time() - start:.1f}s, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())

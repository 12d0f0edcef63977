#!/usr/bin/env python3
"""Print the feasible row-count ranges for three-color identity colorings.

For each column count s the script reports the maximal intervals of t for
which K_{s,t} admits a 3-edge coloring with trivial automorphism group, plus
the recursion chain whenever the critical-width delegation was needed.

Usage: python3 scripts/c3_ranges.py [--c 3] [--s-min 2] [--s-max 30]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from idcolor.decide import feasible_intervals  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--c", type=int, default=3)
    parser.add_argument("--s-min", dest="s_min", type=int, default=2)
    parser.add_argument("--s-max", dest="s_max", type=int, default=30)
    args = parser.parse_args()

    for s in range(args.s_min, args.s_max + 1):
        summary = feasible_intervals(args.c, s)
        spans = ", ".join(
            f"[{lo}, {hi}]" if lo != hi else f"{{{lo}}}" for lo, hi in summary.intervals
        )
        line = f"s={s:>4}  {summary.case_label:<13} t in {spans}"
        print(line)
        for note in summary.boundary:
            chain = " -> ".join(f"({c},{ss},{tt})" for c, ss, tt in note.recursion_chain)
            print(f"        boundary t={note.t}: {'feasible' if note.exists else 'infeasible'} via {chain}")


if __name__ == "__main__":
    main()

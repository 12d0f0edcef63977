#!/usr/bin/env python3
"""Construct and display identity-coloring witnesses for chosen parameters.

Usage: python3 scripts/witness_gallery.py --c 3 --s 4 --t 10 [--t 11 ...]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from idcolor.automorphisms import is_identity_coloring  # noqa: E402
from idcolor.construct import InfeasibleError, identity_coloring  # noqa: E402
from idcolor.matrices import column_degrees, format_matrix  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--c", type=int, required=True)
    parser.add_argument("--s", type=int, required=True)
    parser.add_argument("--t", type=int, nargs="+", required=True)
    args = parser.parse_args()

    for t in args.t:
        print(f"=== c={args.c} s={args.s} t={t} ===")
        try:
            matrix, trace = identity_coloring(args.c, args.s, t)
        except InfeasibleError as exc:
            print(f"infeasible: {exc}")
            continue
        print(format_matrix(matrix), end="")
        print(f"trace: {' -> '.join(trace.steps)}")
        print(f"column degrees: {column_degrees(matrix)}")
        print(f"verified identity coloring: {is_identity_coloring(matrix)}")


if __name__ == "__main__":
    main()

"""Command-line surface: decide / construct / verify / distnum / table.

Every invocation prints one JSON document (``table`` prints one per line).
Potentially huge integers are serialized as decimal strings so values like
3^79-scale bounds survive the trip.  Exit codes are stable for scripting:

* ``decide``     0 = exists, 1 = does not exist, 2 = usage error
* ``construct``  0 = written, 1 = infeasible, 2 = usage, 3 = size guard
* ``verify``     0 = identity coloring, 1 = witness found, 2 = parse error,
                 3 = search guard
* ``distnum``    0 = ok, 2 = usage error
* ``table``      0 = ok, 2 = usage error
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decide
from .automorphisms import (
    SearchSpaceError,
    find_nontrivial_automorphism,
    is_identity_coloring,
)
from .construct import InfeasibleError, identity_coloring
from .matrices import MatrixFormatError, SizeGuardError, format_matrix, parse_matrix
from .oracle import ENUMERATION_GUARD, VERTEX_GUARD, product_distinguishing_number


def _emit(doc):
    print(json.dumps(doc, indent=2))


def _chain_doc(chain):
    return [[str(c), str(s), str(t)] for (c, s, t) in chain]


def cmd_decide(args):
    verdict = decide.has_identity_coloring(args.c, args.s, args.t)
    _emit(
        {
            "command": "decide",
            "inputs": {"c": str(args.c), "s": str(args.s), "t": str(args.t)},
            "exists": verdict.exists,
            "case_label": verdict.case_label,
            "recursion_chain": _chain_doc(verdict.recursion_chain),
        }
    )
    return 0 if verdict.exists else 1


def cmd_construct(args):
    doc = {
        "command": "construct",
        "inputs": {"c": str(args.c), "s": str(args.s), "t": str(args.t)},
    }
    try:
        matrix, trace = identity_coloring(args.c, args.s, args.t)
    except InfeasibleError as exc:
        doc.update({"feasible": False, "reason": str(exc)})
        _emit(doc)
        return 1
    except SizeGuardError as exc:
        doc.update({"feasible": None, "reason": str(exc)})
        _emit(doc)
        return 3
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(matrix))
    doc.update({"feasible": True, "trace": list(trace.steps), "matrix_file": args.out})
    _emit(doc)
    return 0


def cmd_verify(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            matrix = parse_matrix(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": "verify",
        "file": args.file,
        "inputs": {
            "c": str(matrix.colors),
            "t": str(matrix.rows),
            "s": str(matrix.cols),
        },
    }
    try:
        if is_identity_coloring(matrix):
            doc["identity"] = True
            _emit(doc)
            return 0
        report = find_nontrivial_automorphism(
            matrix, allow_part_swap=(matrix.rows == matrix.cols)
        )
    except SearchSpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    doc["identity"] = False
    doc["witness"] = {
        "row_perm": list(report.witness_row_perm),
        "col_perm": list(report.witness_col_perm),
        "part_swap": report.part_swap,
    }
    _emit(doc)
    return 1


def cmd_distnum(args):
    result = decide.distinguishing_number(args.s, args.t)
    doc = {
        "command": "distnum",
        "inputs": {"s": str(args.s), "t": str(args.t)},
        "value": str(result.value),
        "base_c": str(result.base_c),
        "closed_form_case": result.closed_form_case,
        "closed_form_value": (
            None if result.closed_form_value is None else str(result.closed_form_value)
        ),
    }
    if args.cross_check:
        n = args.s * args.t
        if n <= VERTEX_GUARD and result.value**n <= ENUMERATION_GUARD:
            oracle_value = product_distinguishing_number(args.s, args.t, result.value)
            doc["oracle_value"] = None if oracle_value is None else str(oracle_value)
            doc["oracle_agrees"] = oracle_value == result.value
        else:
            doc["oracle_value"] = None
            doc["oracle_agrees"] = None
            doc["oracle_skipped"] = "beyond exhaustive-search guards"
    _emit(doc)
    return 0


def cmd_table(args):
    for s in range(args.s_min, args.s_max + 1):
        summary = decide.feasible_intervals(args.c, s)
        doc = {
            "command": "table",
            "c": str(args.c),
            "s": str(s),
            "case_label": summary.case_label,
            "intervals": [[str(lo), str(hi)] for lo, hi in summary.intervals],
        }
        if summary.boundary:
            doc["boundary"] = [
                {
                    "t": str(note.t),
                    "exists": note.exists,
                    "recursion_chain": _chain_doc(note.recursion_chain),
                }
                for note in summary.boundary
            ]
        print(json.dumps(doc, separators=(",", ":")))
    return 0


def _positive_int(minimum, name):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}")
        return value

    return convert


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idcolor",
        description=(
            "Identity edge colorings of complete bipartite graphs and "
            "distinguishing numbers of products of complete graphs."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("decide", help="does K_{s,t} have an identity c-coloring?")
    p.add_argument("--c", required=True, type=_positive_int(2, "--c"))
    p.add_argument("--s", required=True, type=_positive_int(1, "--s"))
    p.add_argument("--t", required=True, type=_positive_int(1, "--t"))
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="write an identity-coloring witness matrix")
    p.add_argument("--c", required=True, type=_positive_int(2, "--c"))
    p.add_argument("--s", required=True, type=_positive_int(1, "--s"))
    p.add_argument("--t", required=True, type=_positive_int(1, "--t"))
    p.add_argument("--out", required=True, help="output path for the matrix text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a matrix file for symmetries")
    p.add_argument("file", help="matrix in the 'c t s' text format")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distnum", help="distinguishing number of K_s box K_t")
    p.add_argument("--s", required=True, type=_positive_int(1, "--s"))
    p.add_argument("--t", required=True, type=_positive_int(1, "--t"))
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    p.set_defaults(func=cmd_distnum)

    p = sub.add_parser("table", help="feasible row-count intervals per s")
    p.add_argument("--c", required=True, type=_positive_int(2, "--c"))
    p.add_argument("--s-min", required=True, dest="s_min", type=_positive_int(1, "--s-min"))
    p.add_argument("--s-max", required=True, dest="s_max", type=_positive_int(1, "--s-max"))
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "table" and args.s_min > args.s_max:
        parser.error("--s-min must not exceed --s-max")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

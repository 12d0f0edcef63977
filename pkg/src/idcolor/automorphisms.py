"""Deciding whether a colored complete bipartite graph has any symmetry.

A color-preserving automorphism of the colored K_{s,t} encoded by a matrix
``A`` is either *part-preserving*, a pair of permutations ``(rho, sigma)``
with ``A[i][j] == A[rho[i]][sigma[j]]`` for all entries, or (only when the
matrix is square) *part-swapping*, with ``A[i][j] == A[sigma[j]][rho[i]]``.
A coloring is an *identity coloring* when the only automorphism is the
trivial part-preserving one.

The search below is complete but heavily pruned: any automorphism maps each
column to a column with the same color-count tuple, so only permutations
within equal-degree column classes are ever tried, and once a column
permutation is fixed the distinct rows force a unique row matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .matrices import (
    CELL_GUARD,
    ColorMatrix,
    _encodable,
    _row_codes,
    column_degrees,
    complement,
    row_degrees,
    transpose,
)

# Candidate column permutations tolerated before the search refuses.
SEARCH_LIMIT = 10**9

# Minimum row count before is_identity_coloring tries to answer via the
# (smaller) complement instead of the direct permutation search.
_REDUCTION_MIN_ROWS = 4096

_SMALL_SIZE = 4096


class SearchSpaceError(RuntimeError):
    """The pruned search would still enumerate too many candidates.

    Deliberately distinct from a True/False answer: the caller asked a
    question this module refuses to settle at that size.
    """


@dataclass(frozen=True)
class AutoReport:
    """Outcome of an automorphism search.

    When ``trivial_only`` is false the witness permutations reproduce the
    matrix: ``A[i][j] == A[rho[i]][sigma[j]]`` for a part-preserving witness
    and ``A[i][j] == A[sigma[j]][rho[i]]`` when ``part_swap`` is set.  A
    part-swap witness is non-trivial even with identity permutations, since
    it exchanges the two vertex parts.
    """

    trivial_only: bool
    witness_row_perm: tuple | None = None
    witness_col_perm: tuple | None = None
    part_swap: bool = False


def has_duplicate_rows(matrix):
    """True when two row indices hold equal rows."""
    t = matrix.rows
    if t <= 1:
        return False
    if matrix.entries.size <= _SMALL_SIZE:
        return len(set(matrix.row_tuples())) < t
    if _encodable(matrix):
        return int(np.unique(_row_codes(matrix)).size) < t
    return int(np.unique(matrix.entries, axis=0).shape[0]) < t


def _first_duplicate_pair(matrix):
    """The lexicographically smallest (i, j) with equal rows, or None."""
    groups = {}
    for i, row in enumerate(matrix.row_tuples()):
        groups.setdefault(row, []).append(i)
    pairs = [(idx[0], idx[1]) for idx in groups.values() if len(idx) > 1]
    return min(pairs) if pairs else None


def distinct_degree_certificate(matrix):
    """Sufficient check that a coloring has no non-trivial automorphism.

    True requires distinct rows and pairwise distinct column degrees; for a
    square matrix the multiset of column degrees must additionally differ
    from the multiset of row degrees (otherwise a part swap could remain).
    A False answer is inconclusive.
    """
    t, s = matrix.rows, matrix.cols
    if has_duplicate_rows(matrix):
        return False
    cdegs = column_degrees(matrix)
    if len(set(cdegs)) != s:
        return False
    if t == s and sorted(cdegs) == sorted(row_degrees(matrix)):
        return False
    return True


class _RowMatcher:
    """Answers, for candidate matrices B, whether B's rows are a permutation
    of A's rows, and if so with which row matching."""

    def __init__(self, matrix):
        self.rows = matrix.rows
        self.small = matrix.entries.size <= _SMALL_SIZE or not _encodable(matrix)
        if self.small:
            self.ordered_rows = matrix.row_tuples()
        else:
            c, s = matrix.colors, matrix.cols
            self.weights = np.array(
                [c ** (s - 1 - j) for j in range(s)], dtype=np.int64
            )
            self.codes = matrix.entries.astype(np.int64) @ self.weights
            self.sorted_codes = np.sort(self.codes)
            self.code_set = set(self.codes.tolist())
            # spread probe positions; cheap rejection before the full sort
            self.probes = list(range(0, self.rows, max(1, self.rows // 16)))[:16]

    def match(self, candidate_entries):
        """Row permutation ``rho`` with ``A[i] == B[rho[i]]``, or None."""
        if self.small:
            index_b = {}
            for r, row in enumerate(map(tuple, candidate_entries.tolist())):
                if row in index_b:
                    return None
                index_b[row] = r
            rho = []
            for row in self.ordered_rows:
                r = index_b.get(row)
                if r is None:
                    return None
                rho.append(r)
            return tuple(rho)
        codes_b = candidate_entries.astype(np.int64) @ self.weights
        for p in self.probes:
            if int(codes_b[p]) not in self.code_set:
                return None
        if not np.array_equal(np.sort(codes_b), self.sorted_codes):
            return None
        order = np.argsort(codes_b, kind="stable")
        pos = np.searchsorted(codes_b[order], self.codes)
        rho = order[pos]
        return tuple(int(v) for v in rho)


def _column_classes(matrix):
    """Column indices grouped by degree tuple, classes in degree-lex order."""
    groups = {}
    for j, deg in enumerate(column_degrees(matrix)):
        groups.setdefault(deg, []).append(j)
    return [(deg, groups[deg]) for deg in sorted(groups)]


def _class_candidate_count(classes):
    return math.prod(math.factorial(len(cols)) for _, cols in classes)


def _column_permutations(classes, width, skip_identity):
    """Yield candidate column permutations class by class, in lex order."""
    identity = list(range(width))
    per_class = [permutations(cols) for _, cols in classes]
    for combo in product(*per_class):
        sigma = identity.copy()
        for (_, cols), images in zip(classes, combo):
            for pos, img in zip(cols, images):
                sigma[pos] = img
        if skip_identity and sigma == identity:
            continue
        yield sigma


def _part_swap_permutations(matrix):
    """Yield column-position -> row-index maps compatible with degrees.

    A part-swapping automorphism must send each column to a row of equal
    degree tuple, so enumeration runs class by class; the identity map is a
    legitimate candidate here.
    """
    col_groups = {}
    for j, deg in enumerate(column_degrees(matrix)):
        col_groups.setdefault(deg, []).append(j)
    row_groups = {}
    for i, deg in enumerate(row_degrees(matrix)):
        row_groups.setdefault(deg, []).append(i)
    classes = []
    for deg in sorted(col_groups):
        rows = row_groups.get(deg)
        if rows is None or len(rows) != len(col_groups[deg]):
            return
        classes.append((col_groups[deg], rows))
    width = matrix.cols
    per_class = [permutations(rows) for _, rows in classes]
    for combo in product(*per_class):
        sigma = [0] * width
        for (cols, _), images in zip(classes, combo):
            for pos, img in zip(cols, images):
                sigma[pos] = img
        yield sigma


def _part_swap_candidate_count(matrix):
    row_counter = {}
    for deg in row_degrees(matrix):
        row_counter[deg] = row_counter.get(deg, 0) + 1
    col_counter = {}
    for deg in column_degrees(matrix):
        col_counter[deg] = col_counter.get(deg, 0) + 1
    if row_counter != col_counter:
        return 0
    return math.prod(math.factorial(n) for n in col_counter.values())


def find_nontrivial_automorphism(matrix, allow_part_swap):
    """Complete search for any non-trivial automorphism.

    Duplicate rows short-circuit to a row-swap witness.  Otherwise column
    permutations are enumerated within equal-degree classes (and, for square
    matrices with ``allow_part_swap``, part-swapping maps likewise); the
    earliest witness in the deterministic enumeration order is returned.

    Raises :class:`SearchSpaceError` when the pruned candidate count would
    exceed ``SEARCH_LIMIT``.
    """
    t, s = matrix.rows, matrix.cols
    dup = _first_duplicate_pair(matrix) if t > 1 else None
    if dup is not None:
        i, j = dup
        rho = list(range(t))
        rho[i], rho[j] = j, i
        return AutoReport(False, tuple(rho), tuple(range(s)), False)

    classes = _column_classes(matrix)
    count = _class_candidate_count(classes)
    swap_applies = allow_part_swap and t == s
    if swap_applies:
        count += _part_swap_candidate_count(matrix)
    if count > SEARCH_LIMIT:
        raise SearchSpaceError(
            f"degree-class pruning still leaves {count} candidates (> {SEARCH_LIMIT})"
        )

    matcher = _RowMatcher(matrix)
    entries = matrix.entries
    for sigma in _column_permutations(classes, s, skip_identity=True):
        rho = matcher.match(entries[:, sigma])
        if rho is not None:
            return AutoReport(False, rho, tuple(sigma), False)
    if swap_applies:
        for sigma in _part_swap_permutations(matrix):
            # C[p][j] = A[sigma[j]][p]; a valid sigma makes C's rows a
            # permutation of A's rows.
            candidate = entries[sigma, :].T
            rho = matcher.match(candidate)
            if rho is not None:
                return AutoReport(False, rho, tuple(sigma), True)
    return AutoReport(True)


def is_identity_coloring(matrix):
    """True when the only color-preserving automorphism is the identity.

    Fast paths first: duplicate rows always give a symmetry; distinct rows
    plus pairwise-distinct column degrees (plus the square-case degree
    comparison) guarantee there is none.  A matrix wider than it is tall is
    answered through its transpose (same answer, and the degree-class
    pruning then works on the side with more rows).  Large non-square
    matrices with distinct rows are answered through their complement,
    which has the same answer whenever neither side is square; this keeps
    verification of nearly-full matrices cheap.  Everything else falls back
    to the complete pruned search, allowing part swaps exactly when the
    matrix is square.
    """
    if has_duplicate_rows(matrix):
        return False
    if distinct_degree_certificate(matrix):
        return True
    t, s = matrix.rows, matrix.cols
    if s > t >= 1:
        return is_identity_coloring(transpose(matrix))
    if t != s and t >= _REDUCTION_MIN_ROWS:
        total = matrix.colors**s
        comp_rows = total - t
        if comp_rows < t and comp_rows != s and total * s <= CELL_GUARD:
            return is_identity_coloring(complement(matrix))
    return find_nontrivial_automorphism(matrix, allow_part_swap=(t == s)).trivial_only


def apply_witness(matrix, report):
    """Apply a witness to the matrix; a valid witness reproduces it."""
    if report.trivial_only:
        raise ValueError("report carries no witness")
    rho = np.asarray(report.witness_row_perm, dtype=np.intp)
    sigma = np.asarray(report.witness_col_perm, dtype=np.intp)
    if not report.part_swap:
        return ColorMatrix(matrix.colors, matrix.entries[np.ix_(rho, sigma)])
    return ColorMatrix(matrix.colors, matrix.entries[np.ix_(sigma, rho)].T)


def witness_is_valid(matrix, report):
    """Machine check: the witness reproduces the matrix and is non-trivial."""
    if report.trivial_only:
        return False
    if report.part_swap:
        if matrix.rows != matrix.cols:
            return False
    else:
        t, s = matrix.rows, matrix.cols
        if report.witness_row_perm == tuple(range(t)) and report.witness_col_perm == tuple(range(s)):
            return False
    return apply_witness(matrix, report) == matrix

"""Explicit witness matrices: identity colorings for every feasible triple.

Two families are built here.  ``distinct_degree_matrix`` produces, for any
row count t in the feasible band [r, c^s - r] (r being the least row count
allowing s distinct column degree tuples), a t-by-s matrix with pairwise
distinct rows *and* pairwise distinct column degrees — a certificate-strength
property.  ``identity_coloring`` composes that with the square constructions
and with two reductions (complementing a nearly-full matrix, transposing a
wide-and-short one) to cover every feasible (c, s, t).

The distinct-degree construction works by induction on the column count.
It is enough to build row counts up to c^s / 2 and complement for the rest.
One-column and two-column matrices are written down directly.  For s >= 3
the row count t falls in one of four bands relative to multiples of
c^(s-1), and each band has its own assembly; every assembly stacks blocks
whose final-column entries are distinct constants, so that distinct rows
come for free, and mixes constant-degree blocks with one inductively built
distinct-degree block so the first s-1 column degrees stay pairwise
distinct while the final column's degree differs from all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decide import has_identity_coloring, min_distinct_degree_rows
from .matrices import (
    CELL_GUARD,
    ColorMatrix,
    SizeGuardError,
    _decode_codes,
    complement,
    transpose,
    unit_block_matrix,
)

STEP_SINGLE_COLUMN = "single-column"
STEP_SQUARE = "square-base"
STEP_DISTINCT_DEGREES = "distinct-degrees"
STEP_COMPLEMENT = "complement-reduction"
STEP_TRANSPOSE = "transpose-recursion"


class InfeasibleError(ValueError):
    """The requested parameters admit no such matrix."""


@dataclass(frozen=True)
class ConstructionTrace:
    """Ordered labels of the construction branches that produced a witness."""

    steps: tuple


# The two square seeds used when there are at least three colors.
_SQUARE2 = [[0, 1], [0, 2]]
_SQUARE3 = [[0, 1, 2], [0, 1, 0], [0, 0, 1]]

# Leading block replacing the top-left corner of the staircase for s >= 4;
# its column degrees are distinct and differ from its row degrees, which the
# plain staircase alone would not achieve.
_SQUARE4_BLOCK = [[0, 1, 0, 1], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]

# Two-color three-column distinct-degree matrices for the band just below
# 2^(s-1); small enough to check by hand, awkward to make the general
# two-color assembly cover.
_TWO_COLOR_S3 = {
    1: [[0, 0, 0], [0, 0, 1], [0, 1, 1]],
    2: [[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]],
}


def square_identity_coloring(c, s):
    """An s-by-s identity c-coloring.

    Exists except for a single column pair (swapping the two endpoints of
    one edge is always a symmetry) and except for two colors at s = 2 or 3.
    """
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    if c < 2:
        raise ValueError(f"need c >= 2, got {c}")
    if s == 1:
        raise InfeasibleError("K_{1,1} always has the edge-endpoint swap")
    if c == 2 and s in (2, 3):
        raise InfeasibleError(f"every 2-coloring of K_{{{s},{s}}} has a symmetry")
    if s == 2:
        return ColorMatrix.from_rows(c, _SQUARE2)
    if s == 3:
        return ColorMatrix.from_rows(c, _SQUARE3)
    arr = np.triu(np.ones((s, s), dtype=np.int32), k=1)
    arr[:4, :4] = _SQUARE4_BLOCK
    return ColorMatrix(c, arr)


def _with_last(entries, value, width):
    col = np.full((entries.shape[0], 1), value, dtype=np.int32)
    out = np.hstack([entries.astype(np.int32), col])
    assert out.shape[1] == width
    return out


def _tuples_with_last(c, s, lo, hi):
    """All c-ary s-tuples whose last entry lies in [lo, hi], in lex order.

    Constant degree on the first s-1 columns: each value occurs exactly
    (hi - lo + 1) * c^(s-2) times there.
    """
    if lo > hi:
        return np.zeros((0, s), dtype=np.int64)
    prefixes = np.arange(c ** (s - 1), dtype=np.int64)
    values = np.arange(lo, hi + 1, dtype=np.int64)
    codes = (prefixes[:, None] * c + values[None, :]).ravel()
    return _decode_codes(np.sort(codes), c, s)


def _compositions(total, parts):
    """All length-``parts`` tuples of nonnegative ints summing to ``total``,
    in ascending lexicographic order."""
    comp = [0] * (parts - 1) + [total]
    while True:
        yield tuple(comp)
        j = None
        for k in range(parts - 2, -1, -1):
            if sum(comp[k + 1 :]) > 0:
                j = k
                break
        if j is None:
            return
        tail = sum(comp[j + 1 :]) - 1
        comp[j] += 1
        for k in range(j + 1, parts - 1):
            comp[k] = 0
        comp[parts - 1] = tail


def _first_unused_composition(total, parts, used):
    for comp in _compositions(total, parts):
        if comp not in used:
            return comp
    raise AssertionError("no unused degree tuple; row count below threshold?")


def _column_degree_tuples(entries, c):
    return [tuple(int(v) for v in np.bincount(entries[:, j], minlength=c)) for j in range(entries.shape[1])]


def _extend_columns(c, s, t, memo):
    """Narrow band: the same row count works with fewer columns, so build
    there and append one column per missing width, each filled by the
    lexicographically smallest degree tuple not yet used.  Appending keeps
    rows distinct (their prefixes already differ) and the fresh degree keeps
    the columns pairwise distinct."""
    s0 = s
    while s0 >= 3 and t <= c ** (s0 - 1) - min_distinct_degree_rows(c, s0):
        s0 -= 1
    base = _ddm(c, s0, t, memo)
    arr = np.empty((t, s), dtype=np.int32)
    arr[:, :s0] = base.entries
    used = set(_column_degree_tuples(base.entries, c))
    for col in range(s0, s):
        comp = _first_unused_composition(t, c, used)
        arr[:, col] = np.repeat(np.arange(c, dtype=np.int32), comp)
        used.add(comp)
    return ColorMatrix(c, arr)


def _band_below_multiple(c, s, t, a, u, memo):
    """Band (a+1)c^(s-1) - r < t <= (a+1)c^(s-1), with u = t - ((a+1)c^(s-1) - r).

    With two colors only a = 0 occurs.  There the complement of the
    staircase provides the distinct degrees; three columns are handled by
    two fixed matrices.  With more colors, an inductive block of
    c^(s-1) - r rows supplies the distinct degrees, a unit block supplies
    the final column's small zero count, and (for a >= 1) a constant block
    of full value-restricted tuples fills the bulk.
    """
    r = min_distinct_degree_rows(c, s)
    csm1 = c ** (s - 1)
    assert 1 <= u <= r and a >= 0
    if c == 2:
        assert a == 0, "two-color row counts above 2^(s-1) are complemented away"
        if s == 3:
            return ColorMatrix.from_rows(2, _TWO_COLOR_S3[u])
        stair = np.tril(np.ones((s - 1, s - 1), dtype=np.int32))
        dstar = complement(ColorMatrix(2, stair))
        block_b = unit_block_matrix(2, u, s - 1)
        parts = [_with_last(block_b.entries, 0, s), _with_last(dstar.entries, 1, s)]
    else:
        assert a <= c - 2
        inductive = _ddm(c, s - 1, csm1 - r, memo)
        block_b = unit_block_matrix(c, u, s - 1)
        if a == 0:
            parts = [_with_last(inductive.entries, 0, s), _with_last(block_b.entries, 2, s)]
        else:
            bulk = _tuples_with_last(c, s, 2, a + 1)
            parts = [
                bulk,
                _with_last(block_b.entries, 0, s),
                _with_last(inductive.entries, 1, s),
            ]
    arr = np.vstack([p.astype(np.int32) for p in parts])
    assert arr.shape == (t, s)
    return ColorMatrix(c, arr)


def _band_above_multiple(c, s, t, a, u, memo):
    """Band (a+1)c^(s-1) < t <= (a+1)c^(s-1) + r, with u = t - (a+1)c^(s-1).

    Only reached with at least three colors.  Four blocks with distinct
    final-column constants: the value-restricted bulk (empty for a = 0), a
    u-row unit block under 0, an inductive r-row block under c-1, and the
    complement of an r-row unit block under 1.  The last column is the only
    one without 1s, and its zero count u stays strictly below every other
    column's, so its degree is distinct; on the first s-1 columns only the
    inductive block varies, keeping those degrees pairwise distinct.
    """
    r = min_distinct_degree_rows(c, s)
    assert c >= 3 and 0 <= a <= c - 3 and 1 <= u <= r and r <= s - 1
    bulk = _tuples_with_last(c, s, 2, a + 1)
    block_u = unit_block_matrix(c, u, s - 1)
    inductive = _ddm(c, s - 1, r, memo)
    filler = complement(unit_block_matrix(c, r, s - 1))
    parts = [
        bulk,
        _with_last(block_u.entries, 0, s),
        _with_last(inductive.entries, c - 1, s),
        _with_last(filler.entries, 1, s),
    ]
    arr = np.vstack([p.astype(np.int32) for p in parts])
    assert arr.shape == (t, s)
    return ColorMatrix(c, arr)


def _band_between(c, s, t, a, u, memo):
    """Band (a+1)c^(s-1) + r < t <= (a+2)c^(s-1) - r, with u = t - (a+1)c^(s-1).

    Only reached with at least three colors.  The value-restricted bulk is
    constant on the first s-1 columns and free of 0s and 1s; an inductive
    u-row block under a final 0-column provides the distinct degrees, and
    the final column (the only one without 1s) differs from the rest.
    """
    r = min_distinct_degree_rows(c, s)
    csm1 = c ** (s - 1)
    assert c >= 3 and 0 <= a <= c - 3 and r < u <= csm1 - r
    bulk = _tuples_with_last(c, s, 2, a + 2)
    inductive = _ddm(c, s - 1, u, memo)
    parts = [bulk, _with_last(inductive.entries, 0, s)]
    arr = np.vstack([p.astype(np.int32) for p in parts])
    assert arr.shape == (t, s)
    return ColorMatrix(c, arr)


def _ddm(c, s, t, memo):
    key = (s, t)
    hit = memo.get(key)
    if hit is not None:
        return hit
    cs = c**s
    if s == 1:
        res = ColorMatrix(c, np.arange(t, dtype=np.int32).reshape(t, 1))
    elif s == 2:
        # row i (1-based) is (j, c - k) where i = j*c + k with 1 <= k <= c;
        # prefixes of this enumeration keep both columns' degrees distinct
        # over the whole range 1 <= t <= c^2 - 1
        i = np.arange(1, t + 1, dtype=np.int64)
        j = (i - 1) // c
        k = i - j * c
        res = ColorMatrix(c, np.stack([j, c - k], axis=1))
    elif 2 * t > cs:
        res = complement(_ddm(c, s, cs - t, memo))
    else:
        r = min_distinct_degree_rows(c, s)
        csm1 = c ** (s - 1)
        if t <= csm1 - r:
            res = _extend_columns(c, s, t, memo)
        else:
            q, rem = divmod(t, csm1)
            if rem == 0:
                res = _band_below_multiple(c, s, t, q - 1, r, memo)
            elif rem > csm1 - r:
                res = _band_below_multiple(c, s, t, q, rem - (csm1 - r), memo)
            elif rem <= r:
                res = _band_above_multiple(c, s, t, q - 1, rem, memo)
            else:
                res = _band_between(c, s, t, q - 1, rem, memo)
    memo[key] = res
    return res


def distinct_degree_matrix(c, s, t):
    """A t-by-s matrix over c colors with distinct rows and pairwise
    distinct column degrees.

    Exists exactly for r <= t <= c^s - r where r is
    :func:`idcolor.decide.min_distinct_degree_rows`; outside that band the
    call raises :class:`InfeasibleError`.  Deterministic: equal inputs give
    identical matrices.
    """
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (c, s, t)):
        raise ValueError("c, s, t must be ints")
    if c < 2 or s < 1 or t < 0:
        raise ValueError(f"need c >= 2, s >= 1, t >= 0, got ({c}, {s}, {t})")
    r = min_distinct_degree_rows(c, s)
    cs = c**s
    if t < r or t > cs - r:
        raise InfeasibleError(
            f"distinct column degrees need {r} <= t <= c^{s} - {r}, got t={t}"
        )
    if t * s > CELL_GUARD:
        raise SizeGuardError(f"{t}x{s} exceeds the {CELL_GUARD}-cell guard")
    return _ddm(c, s, t, {})


def identity_coloring(c, s, t):
    """An identity c-edge coloring of K_{s,t}, with its construction trace.

    Requires feasibility per :func:`idcolor.decide.has_identity_coloring`;
    infeasible parameters raise :class:`InfeasibleError` and oversized
    results raise :class:`SizeGuardError`.  The returned matrix always
    passes :func:`idcolor.automorphisms.is_identity_coloring`.
    """
    verdict = has_identity_coloring(c, s, t)
    if not verdict.exists:
        raise InfeasibleError(
            f"K_{{{s},{t}}} has no identity {c}-edge coloring ({verdict.case_label})"
        )
    if t * s > CELL_GUARD:
        raise SizeGuardError(f"{t}x{s} exceeds the {CELL_GUARD}-cell guard")
    steps = []
    matrix = _identity(c, s, t, steps, {})
    return matrix, ConstructionTrace(tuple(steps))


def _identity(c, s, t, steps, ddm_memo):
    if s == 1:
        steps.append(STEP_SINGLE_COLUMN)
        return ColorMatrix(c, np.arange(t, dtype=np.int32).reshape(t, 1))
    if s == t:
        steps.append(STEP_SQUARE)
        return square_identity_coloring(c, s)
    cs = c**s
    if s <= t <= cs - s:
        steps.append(STEP_DISTINCT_DEGREES)
        return _ddm(c, s, t, ddm_memo)
    if t > cs - s:
        # nearly full: build the small missing-row matrix and complement it
        steps.append(STEP_COMPLEMENT)
        return complement(_identity(c, s, cs - t, steps, ddm_memo))
    # short and wide: build the transposed instance, which has more rows
    # than columns, then swap the parts back
    steps.append(STEP_TRANSPOSE)
    return transpose(_identity(c, t, s, steps, ddm_memo))

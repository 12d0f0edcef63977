"""Exact feasibility of identity edge colorings and distinguishing numbers.

Whether K_{s,t} admits a ``c``-edge coloring with trivial automorphism group
is decided from (c, s, t) alone.  Writing ``x`` for the margin width
``floor(log_c(s - 1))``, the answer splits on how many columns there are:

* one column: feasible exactly for 2 <= t <= c;
* at most ``c`` columns: feasible for 1 <= t <= c^s - 1, except the single
  2-coloring exception at s = t = 2;
* more than ``c`` columns: always infeasible for t <= x or t >= c^s - x,
  and the remaining boundary rows t = x + 1 and t = c^s - x - 1 depend on
  where ``s`` sits relative to the critical width
  ``c^(1 + x) - floor(log_c(x))``: strictly below it the boundary is
  feasible, at or above it is not, and exactly one below ("critical") the
  question delegates to the transposed, much smaller instance K_{x+1,s} —
  a recursion that shrinks iterated-logarithmically.  The 2-coloring of
  K_{3,3} is the one remaining exception.

All threshold comparisons run on exact integers; powers like c^s are
computed in full even when they have thousands of digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

CASE_SINGLE_COLUMN = "single-column"
CASE_FEW_COLUMNS = "few-columns"
CASE_SUBCRITICAL = "subcritical"
CASE_SUPERCRITICAL = "supercritical"
CASE_CRITICAL = "critical"
CASE_EXCEPTION = "exception"
BOUND_ROW_COUNT = "too-many-rows"
BOUND_MARGIN = "margin"

_EXCEPTIONS = {(2, 2, 2), (2, 3, 3)}

FORM_INTERIOR = "interior"
FORM_TOP_MARGIN = "top-margin"
FORM_EDGE_SUBCRITICAL = "edge-subcritical"
FORM_EDGE_SUPERCRITICAL = "edge-supercritical"
FORM_EDGE_CRITICAL = "edge-critical"


@dataclass(frozen=True)
class Verdict:
    """Existence answer, the rule that settled it, and the chain of (c, s, t)
    triples visited when the critical-width recursion fired."""

    exists: bool
    case_label: str
    recursion_chain: tuple


@dataclass(frozen=True)
class DistinguishingResult:
    """Distinguishing number of K_s box K_t.

    ``value`` is authoritative (minimal color count admitting an identity
    coloring).  ``base_c`` is the integer ceiling of (t+1)^(1/s); the value
    is always ``base_c`` or ``base_c + 1`` once 2 <= s <= t.  The closed-form
    fields report what the direct case formulas would answer, for
    cross-checking; they are None where no formula applies.
    """

    value: int
    base_c: int
    closed_form_case: str | None = None
    closed_form_value: int | None = None


def floor_log(base, n):
    """Largest e >= 0 with base**e <= n, by exact integer powering."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e, p = 0, base
    while p <= n:
        p *= base
        e += 1
    return e


def margin_width(c, s):
    """Row counts 1..margin_width (and their mirror images near c^s) never
    admit an identity coloring once s >= 2.  Equals floor(log_c(s - 1))."""
    if s < 2:
        raise ValueError(f"margin width needs s >= 2, got s={s}")
    return floor_log(c, s - 1)


def min_distinct_degree_rows(c, s):
    """Smallest row count r for which s pairwise-distinct column degree
    tuples can exist: the least r with C(r + c - 1, r) >= s."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    if c < 2:
        raise ValueError(f"need c >= 2, got {c}")
    r = 0
    while math.comb(r + c - 1, r) < s:
        r += 1
    return r


def iterated_log(c, n):
    """How many times floor_log must be applied to n before it drops to 1
    or below."""
    k = 0
    while n > 1:
        n = floor_log(c, n)
        k += 1
    return k


def ceil_nth_root(n, k):
    """Smallest integer c >= 1 with c**k >= n, via integer bisection."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    lo, hi = 1, 1
    while hi**k < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _validate(c, s, t):
    for name, v in (("c", c), ("s", s), ("t", t)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{name} must be an int")
    if c < 2:
        raise ValueError(f"need c >= 2, got c={c}")
    if s < 1 or t < 1:
        raise ValueError(f"need s >= 1 and t >= 1, got s={s}, t={t}")


def has_identity_coloring(c, s, t):
    """Decide whether K_{s,t} has an identity c-edge coloring.

    The verdict is symmetric in (s, t); either argument order returns the
    same existence answer.
    """
    _validate(c, s, t)
    return _verdict(c, s, t, {})


def _verdict(c, s, t, memo):
    key = (s, t)
    hit = memo.get(key)
    if hit is not None:
        return hit
    here = ((c, s, t),)
    if s == 1:
        v = Verdict(2 <= t <= c, CASE_SINGLE_COLUMN, here)
    else:
        cs = c**s
        if t >= cs:
            v = Verdict(False, BOUND_ROW_COUNT, here)
        elif (c, s, t) in _EXCEPTIONS:
            v = Verdict(False, CASE_EXCEPTION, here)
        elif s <= c:
            v = Verdict(True, CASE_FEW_COLUMNS, here)
        else:
            x = margin_width(c, s)
            if t <= x or t >= cs - x:
                v = Verdict(False, BOUND_MARGIN, here)
            else:
                # s > c forces x >= 1, so floor_log(c, x) is defined
                critical = c ** (1 + x) - floor_log(c, x)
                if s <= critical - 2:
                    v = Verdict(True, CASE_SUBCRITICAL, here)
                elif s >= critical:
                    v = Verdict(x + 2 <= t <= cs - x - 2, CASE_SUPERCRITICAL, here)
                elif x + 2 <= t <= cs - x - 2:
                    v = Verdict(True, CASE_CRITICAL, here)
                else:
                    # boundary row count: same answer as the transposed,
                    # exponentially smaller instance
                    sub = _verdict(c, x + 1, s, memo)
                    v = Verdict(sub.exists, CASE_CRITICAL, here + sub.recursion_chain)
    memo[key] = v
    return v


@dataclass(frozen=True)
class BoundaryNote:
    """One critical-width boundary row count and how its recursion ended."""

    t: int
    exists: bool
    recursion_chain: tuple


@dataclass(frozen=True)
class FeasibilitySummary:
    """All feasible row counts for a fixed (c, s), as maximal intervals."""

    c: int
    s: int
    case_label: str
    intervals: tuple
    boundary: tuple = ()


def _carve(intervals, point):
    out = []
    for lo, hi in intervals:
        if lo <= point <= hi:
            if lo <= point - 1:
                out.append((lo, point - 1))
            if point + 1 <= hi:
                out.append((point + 1, hi))
        else:
            out.append((lo, hi))
    return out


def feasible_intervals(c, s):
    """Maximal intervals of t for which K_{s,t} has an identity c-coloring."""
    _validate(c, s, 1)
    if s == 1:
        return FeasibilitySummary(c, s, CASE_SINGLE_COLUMN, ((2, c),))
    cs = c**s
    if s <= c:
        intervals = [(1, cs - 1)]
        if c == 2 and s == 2:
            intervals = _carve(intervals, 2)
        return FeasibilitySummary(c, s, CASE_FEW_COLUMNS, tuple(intervals))
    x = margin_width(c, s)
    critical = c ** (1 + x) - floor_log(c, x)
    if s <= critical - 2:
        return FeasibilitySummary(c, s, CASE_SUBCRITICAL, ((x + 1, cs - x - 1),))
    if s >= critical:
        return FeasibilitySummary(c, s, CASE_SUPERCRITICAL, ((x + 2, cs - x - 2),))
    low = has_identity_coloring(c, s, x + 1)
    high = has_identity_coloring(c, s, cs - x - 1)
    notes = (
        BoundaryNote(x + 1, low.exists, low.recursion_chain),
        BoundaryNote(cs - x - 1, high.exists, high.recursion_chain),
    )
    if low.exists:
        intervals = [(x + 1, cs - x - 1)]
    else:
        intervals = [(x + 2, cs - x - 2)]
    if c == 2 and s == 3:
        intervals = _carve(intervals, 3)
    return FeasibilitySummary(c, s, CASE_CRITICAL, tuple(intervals), notes)


def _closed_form(s, t, c):
    """Direct case formulas for D(K_s box K_t) with 2 <= s <= t and the
    candidate c.  Returns (label, value) or (None, None) when no formula
    applies (notably t = c^s - 1 with margin width 0, where the formulas
    would need log of zero)."""
    x = margin_width(c, s)
    cs = c**s
    if s <= t <= cs - x - 2:
        if (s, t) == (2, 2):
            return FORM_INTERIOR, 3
        return FORM_INTERIOR, c
    if cs - x <= t <= cs - 1:
        return FORM_TOP_MARGIN, c + 1
    if t == cs - x - 1 and x >= 1:
        critical = c ** (1 + x) - floor_log(c, x)
        if s <= critical - 2:
            return FORM_EDGE_SUBCRITICAL, c
        if s >= critical:
            return FORM_EDGE_SUPERCRITICAL, c + 1
        inner = distinguishing_number(x + 1, s).value
        return FORM_EDGE_CRITICAL, (c if inner <= c else c + 1)
    return None, None


def distinguishing_number(s, t):
    """Minimum colors to label the vertices of K_s box K_t so that only the
    identity automorphism preserves the labels.

    The authoritative value is the minimal c for which K_{s,t} has an
    identity c-edge coloring (a single vertex needs 1 color; K_1 box K_t is
    K_t and needs t).  The closed-form fields are evaluated alongside as a
    cross-check and can disagree with the authoritative value at
    (s, t) = (3, 3), where the interior formula overlooks the square
    2-coloring exception.
    """
    for name, v in (("s", s), ("t", t)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be an int >= 1")
    s, t = sorted((s, t))
    base_c = ceil_nth_root(t + 1, s)
    if s == 1 and t == 1:
        return DistinguishingResult(1, base_c)
    if s == 1:
        return DistinguishingResult(t, base_c)
    c = max(2, base_c)
    while not has_identity_coloring(c, s, t).exists:
        c += 1
        if c > base_c + 3:
            raise AssertionError(f"minimal-c search ran away for (s={s}, t={t})")
    label, value = _closed_form(s, t, base_c)
    return DistinguishingResult(c, base_c, label, value)

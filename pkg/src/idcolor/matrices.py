"""Matrices over a small color alphabet and their elementary transformations.

A :class:`ColorMatrix` records an edge coloring of the complete bipartite
graph K_{s,t}: rows index the size-``t`` part, columns the size-``s`` part,
and the entry at ``(i, j)`` is the color of the edge joining row-vertex ``i``
to column-vertex ``j``.  Everything in this module is a pure function on
immutable values; results never alias their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_COLORS = 2**16

# Hard ceiling on materialized cells (rows * cols) for operations that must
# enumerate every possible row, e.g. complements of nearly-full matrices.
CELL_GUARD = 10**8

# Below this entry count plain-tuple code paths beat numpy call overhead.
_SMALL_SIZE = 2048


class MatrixFormatError(ValueError):
    """Matrix text does not follow the ``c t s`` header + entry-row format."""


class SizeGuardError(RuntimeError):
    """An operation refused to materialize more than ``CELL_GUARD`` cells."""


@dataclass(frozen=True, eq=False)
class ColorMatrix:
    """Immutable t-by-s matrix with entries in ``{0, ..., colors - 1}``.

    ``rows`` may be zero (the complement of a full matrix is a legal value)
    but there is always at least one column.
    """

    colors: int
    entries: np.ndarray

    def __post_init__(self):
        if not isinstance(self.colors, int) or isinstance(self.colors, bool):
            raise TypeError("colors must be an int")
        if not 2 <= self.colors <= MAX_COLORS:
            raise ValueError(f"colors must be in [2, {MAX_COLORS}], got {self.colors}")
        arr = np.asarray(self.entries)
        if arr.ndim != 2:
            raise ValueError("entries must be a two-dimensional array")
        if arr.shape[1] < 1:
            raise ValueError("a ColorMatrix needs at least one column")
        if arr.size and not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("entries must be integers")
        arr = arr.astype(np.int32, copy=True)
        if arr.size:
            lo, hi = int(arr.min()), int(arr.max())
            if lo < 0 or hi >= self.colors:
                raise ValueError(f"entries must lie in [0, {self.colors}), saw [{lo}, {hi}]")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, colors, rows, cols=None):
        """Build a matrix from an iterable of entry rows.

        ``cols`` is only required when ``rows`` is empty, where the column
        count cannot be inferred.
        """
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} disagrees with row width {width}")
            arr = np.array(rows, dtype=np.int64)
        else:
            if cols is None:
                raise ValueError("cols is required for a matrix with no rows")
            arr = np.zeros((0, cols), dtype=np.int64)
        return cls(colors, arr)

    @classmethod
    def empty(cls, colors, cols):
        """The zero-row matrix with the given column count."""
        return cls.from_rows(colors, [], cols=cols)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    def row(self, i):
        if not 0 <= i < self.rows:
            raise IndexError(f"row index {i} out of range for {self.rows} rows")
        return tuple(int(v) for v in self.entries[i])

    def row_tuples(self):
        return [tuple(r) for r in self.entries.tolist()]

    def __eq__(self, other):
        if not isinstance(other, ColorMatrix):
            return NotImplemented
        return (
            self.colors == other.colors
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __repr__(self):
        return f"ColorMatrix(colors={self.colors}, rows={self.rows}, cols={self.cols})"


def _encodable(matrix):
    """True when rows fit injectively into int64 radix codes."""
    return matrix.colors ** matrix.cols <= 2**62


def _row_codes(matrix):
    """Radix-encode each row to one int64; first column most significant."""
    c, s = matrix.colors, matrix.cols
    weights = np.array([c ** (s - 1 - j) for j in range(s)], dtype=np.int64)
    return matrix.entries.astype(np.int64) @ weights


def _decode_codes(codes, colors, cols):
    out = np.empty((len(codes), cols), dtype=np.int64)
    rest = codes.astype(np.int64, copy=True)
    for j in range(cols - 1, -1, -1):
        out[:, j] = rest % colors
        rest //= colors
    return out


def column_degree(matrix, col):
    """Count how often each color occurs in one column.

    Returns a ``colors``-tuple whose entries sum to the row count.
    """
    if not 0 <= col < matrix.cols:
        raise IndexError(f"column index {col} out of range for {matrix.cols} columns")
    counts = np.bincount(matrix.entries[:, col], minlength=matrix.colors)
    return tuple(int(v) for v in counts)


def column_degrees(matrix):
    """Degree tuples of every column, in column order."""
    return [column_degree(matrix, j) for j in range(matrix.cols)]


def row_degrees(matrix):
    """Degree tuples of every row, in row order."""
    c = matrix.colors
    return [
        tuple(int(v) for v in np.bincount(matrix.entries[i], minlength=c))
        for i in range(matrix.rows)
    ]


def has_distinct_rows(matrix):
    t = matrix.rows
    if t <= 1:
        return True
    if matrix.entries.size <= _SMALL_SIZE:
        return len(set(matrix.row_tuples())) == t
    if _encodable(matrix):
        return int(np.unique(_row_codes(matrix)).size) == t
    return int(np.unique(matrix.entries, axis=0).shape[0]) == t


def transpose(matrix):
    """Swap the two parts.  Requires at least one row so the result still
    has a column."""
    if matrix.rows == 0:
        raise ValueError("cannot transpose a matrix with no rows")
    return ColorMatrix(matrix.colors, matrix.entries.T)


def is_full(matrix):
    """True when the rows are exactly all distinct ``colors``-ary tuples."""
    total = matrix.colors ** matrix.cols
    if matrix.rows != total:
        return False
    return has_distinct_rows(matrix)


def complement(matrix):
    """The matrix whose rows are the tuples *not* occurring in ``matrix``.

    Requires distinct rows.  Rows of the result are emitted in lexicographic
    order, which makes the operation deterministic.
    """
    c, s = matrix.colors, matrix.cols
    total = c**s
    if total * s > CELL_GUARD:
        raise SizeGuardError(
            f"complement would enumerate {total} rows of width {s}, over the {CELL_GUARD}-cell guard"
        )
    if not has_distinct_rows(matrix):
        raise ValueError("complement is undefined for a matrix with duplicate rows")
    codes = _row_codes(matrix)
    missing = np.setdiff1d(np.arange(total, dtype=np.int64), codes, assume_unique=True)
    return ColorMatrix(c, _decode_codes(missing, c, s))


def row_multiset_equal(a, b):
    """True when the two matrices hold the same rows up to reordering."""
    if a.colors != b.colors:
        raise ValueError(f"color count mismatch: {a.colors} vs {b.colors}")
    if a.cols != b.cols:
        raise ValueError(f"column count mismatch: {a.cols} vs {b.cols}")
    if a.rows != b.rows:
        return False
    if _encodable(a):
        return bool(np.array_equal(np.sort(_row_codes(a)), np.sort(_row_codes(b))))
    return sorted(a.row_tuples()) == sorted(b.row_tuples())


def stack_rows(a, b):
    """Stack two matrices with equal color count and width."""
    if a.colors != b.colors:
        raise ValueError(f"color count mismatch: {a.colors} vs {b.colors}")
    if a.cols != b.cols:
        raise ValueError(f"column count mismatch: {a.cols} vs {b.cols}")
    return ColorMatrix(a.colors, np.vstack([a.entries, b.entries]))


def unit_block_matrix(colors, rows, cols):
    """The 0/1 block with unit rows and a filled final row.

    Row ``i`` (for ``i < rows - 1``) is all zeros except a 1 in column ``i``;
    the last row has zeros in the first ``rows - 1`` columns and ones after.
    Every column then holds exactly one 1, so all column degrees are equal,
    the rows are distinct, and each column contains a 1.  Entries stay in
    ``{0, 1}`` regardless of ``colors`` so the block embeds into any wider
    alphabet.
    """
    if rows < 1 or rows > cols:
        raise ValueError(f"need 1 <= rows <= cols, got rows={rows}, cols={cols}")
    arr = np.zeros((rows, cols), dtype=np.int32)
    for i in range(rows - 1):
        arr[i, i] = 1
    arr[rows - 1, rows - 1 :] = 1
    return ColorMatrix(colors, arr)


def format_matrix(matrix):
    """Serialize to the text format: ``c t s`` header then one line per row."""
    lines = [f"{matrix.colors} {matrix.rows} {matrix.cols}"]
    for row in matrix.entries.tolist():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Parse the text format produced by :func:`format_matrix`.

    Rejects malformed headers, wrong row/column counts, and out-of-range
    entries.
    """
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise MatrixFormatError("empty input")
    header = lines[idx].split()
    if len(header) != 3:
        raise MatrixFormatError(f"header must be 'c t s', got {lines[idx]!r}")
    try:
        c, t, s = (int(tok) for tok in header)
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer header field in {lines[idx]!r}") from exc
    if not 2 <= c <= MAX_COLORS:
        raise MatrixFormatError(f"color count {c} outside [2, {MAX_COLORS}]")
    if t < 0 or s < 1:
        raise MatrixFormatError(f"bad dimensions t={t}, s={s}")
    idx += 1
    rows = []
    for _ in range(t):
        if idx >= len(lines):
            raise MatrixFormatError(f"expected {t} entry rows, got {len(rows)}")
        toks = lines[idx].split()
        idx += 1
        if len(toks) != s:
            raise MatrixFormatError(f"expected {s} entries per row, got {len(toks)}")
        try:
            row = [int(tok) for tok in toks]
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer entry in row {len(rows)}") from exc
        if any(v < 0 or v >= c for v in row):
            raise MatrixFormatError(f"entry out of range [0, {c}) in row {len(rows)}")
        rows.append(row)
    for line in lines[idx:]:
        if line.strip():
            raise MatrixFormatError(f"trailing content after {t} rows: {line!r}")
    return ColorMatrix.from_rows(c, rows, cols=s)

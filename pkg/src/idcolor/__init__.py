"""Identity edge colorings of complete bipartite graphs.

Decides for which (c, s, t) the complete bipartite graph K_{s,t} has a
c-edge coloring whose only color-preserving automorphism is the identity,
constructs explicit witness matrices, verifies colorings by complete
automorphism search, and computes distinguishing numbers of Cartesian
products of complete graphs.
"""

from .automorphisms import (
    AutoReport,
    SearchSpaceError,
    distinct_degree_certificate,
    find_nontrivial_automorphism,
    has_duplicate_rows,
    is_identity_coloring,
)
from .construct import (
    ConstructionTrace,
    InfeasibleError,
    distinct_degree_matrix,
    identity_coloring,
    square_identity_coloring,
)
from .decide import (
    DistinguishingResult,
    Verdict,
    distinguishing_number,
    feasible_intervals,
    has_identity_coloring,
    margin_width,
    min_distinct_degree_rows,
)
from .matrices import (
    ColorMatrix,
    MatrixFormatError,
    SizeGuardError,
    column_degree,
    column_degrees,
    complement,
    format_matrix,
    is_full,
    parse_matrix,
    row_multiset_equal,
    stack_rows,
    transpose,
    unit_block_matrix,
)
from .oracle import (
    GuardError,
    ProductGraph,
    brute_force_exists,
    product_automorphism_group_order,
    product_distinguishing_number,
)

__all__ = [
    "AutoReport",
    "ColorMatrix",
    "ConstructionTrace",
    "DistinguishingResult",
    "GuardError",
    "InfeasibleError",
    "MatrixFormatError",
    "ProductGraph",
    "SearchSpaceError",
    "SizeGuardError",
    "Verdict",
    "brute_force_exists",
    "column_degree",
    "column_degrees",
    "complement",
    "distinct_degree_certificate",
    "distinct_degree_matrix",
    "distinguishing_number",
    "feasible_intervals",
    "find_nontrivial_automorphism",
    "format_matrix",
    "has_duplicate_rows",
    "has_identity_coloring",
    "identity_coloring",
    "is_full",
    "is_identity_coloring",
    "margin_width",
    "min_distinct_degree_rows",
    "parse_matrix",
    "product_automorphism_group_order",
    "product_distinguishing_number",
    "row_multiset_equal",
    "square_identity_coloring",
    "stack_rows",
    "transpose",
    "unit_block_matrix",
]

__version__ = "0.1.0"

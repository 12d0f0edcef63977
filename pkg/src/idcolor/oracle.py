"""Ground truth by exhaustion, for desk-scale parameters only.

Nothing here trusts the closed-form decision procedure: existence of
identity colorings is settled by enumerating every coloring matrix, and
distinguishing numbers are computed on the actual product graph by searching
for color-preserving bijections.  Guards are hard errors, never silent
truncation.
"""

from __future__ import annotations

from itertools import product

from .automorphisms import is_identity_coloring
from .matrices import ColorMatrix

ENUMERATION_GUARD = 2 * 10**6
VERTEX_GUARD = 16


class GuardError(ValueError):
    """The requested instance is beyond the exhaustive-search guards."""


class ProductGraph:
    """Cartesian product of two complete graphs.

    Vertices are the pairs (i, j) with i < s and j < t; two pairs are
    adjacent when they agree in exactly one coordinate.  This is the line
    graph of K_{s,t}: each vertex stands for one edge of the bipartite
    graph, and adjacency means sharing an endpoint.
    """

    def __init__(self, s, t):
        if s < 1 or t < 1:
            raise ValueError(f"need s >= 1 and t >= 1, got ({s}, {t})")
        self.s = s
        self.t = t
        self.vertices = tuple((i, j) for i in range(s) for j in range(t))
        index = {v: k for k, v in enumerate(self.vertices)}
        adjacency = [set() for _ in self.vertices]
        for a in self.vertices:
            for b in self.vertices:
                if (a[0] == b[0]) != (a[1] == b[1]):
                    adjacency[index[a]].add(index[b])
        self.adjacency = tuple(frozenset(nbrs) for nbrs in adjacency)

    @property
    def n(self):
        return self.s * self.t

    def degree(self):
        return (self.s - 1) + (self.t - 1)


def brute_force_exists(c, s, t):
    """Whether some t-by-s c-ary matrix is an identity coloring, by trying
    all c^(s*t) of them in odometer order (first success short-circuits)."""
    if c < 2 or s < 1 or t < 1:
        raise ValueError(f"need c >= 2, s >= 1, t >= 1, got ({c}, {s}, {t})")
    if c ** (s * t) > ENUMERATION_GUARD:
        raise GuardError(f"c^(s*t) = {c}^{s * t} exceeds {ENUMERATION_GUARD}")
    for flat in product(range(c), repeat=s * t):
        rows = [flat[i * s : (i + 1) * s] for i in range(t)]
        if len(set(rows)) < t:
            continue  # equal rows swap; cannot be an identity coloring
        if is_identity_coloring(ColorMatrix.from_rows(c, rows, cols=s)):
            return True
    return False


def _extends(adjacency, n, images, used):
    """Complete a partial adjacency-preserving injection, depth-first.

    ``images[v]`` is -1 for unassigned vertices.  Returns True when some
    full automorphism extends the partial map.
    """
    v = -1
    for k in range(n):
        if images[k] < 0:
            v = k
            break
    if v < 0:
        return True
    for w in range(n):
        if used[w]:
            continue
        ok = True
        for u in range(n):
            pu = images[u]
            if pu >= 0 and (u in adjacency[v]) != (w in adjacency[pu]):
                ok = False
                break
        if not ok:
            continue
        images[v] = w
        used[w] = True
        if _extends(adjacency, n, images, used):
            images[v] = -1
            used[w] = False
            return True
        images[v] = -1
        used[w] = False
    return False


def product_automorphism_group_order(s, t):
    """Order of the automorphism group of K_s box K_t, from the graph alone.

    Counts along a stabilizer chain: the group order is the product over
    vertices v_k of how many images w admit an automorphism fixing
    v_0..v_{k-1} pointwise and sending v_k to w; each candidate image is
    settled by one adjacency-preserving backtracking search.  This counts
    groups as large as 16! without enumerating their elements.
    """
    graph = ProductGraph(s, t)
    n = graph.n
    if n > VERTEX_GUARD:
        raise GuardError(f"s*t = {n} exceeds the {VERTEX_GUARD}-vertex guard")
    adjacency = graph.adjacency
    order = 1
    for k in range(n):
        count = 0
        for w in range(k, n):  # images of 0..k-1 are fixed, so w >= k
            images = [-1] * n
            used = [False] * n
            for u in range(k):
                images[u] = u
                used[u] = True
            consistent = all(
                (u in adjacency[k]) == (w in adjacency[u]) for u in range(k)
            )
            if not consistent:
                continue
            images[k] = w
            used[w] = True
            if _extends(adjacency, n, images, used):
                count += 1
        order *= count
    return order


def _color_preserving_nonidentity(adjacency, n, coloring):
    """Find any non-identity automorphism preserving a vertex coloring."""

    images = [-1] * n
    used = [False] * n

    def rec(v):
        if v == n:
            return any(images[k] != k for k in range(n))
        for w in range(n):
            if used[w] or coloring[w] != coloring[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adjacency[v]) != (images[u] in adjacency[w]):
                    ok = False
                    break
            if not ok:
                continue
            images[v] = w
            used[w] = True
            if rec(v + 1):
                return True
            images[v] = -1
            used[w] = False
        return False

    return list(images) if rec(0) else None


def product_distinguishing_number(s, t, c_max):
    """Smallest c <= c_max such that some c-coloring of the vertices of
    K_s box K_t is preserved only by the identity, or None when every
    coloring up to c_max colors leaves a symmetry.

    Each coloring is checked by a direct backtracking search for a
    non-identity color-preserving automorphism, so even factor graphs with
    enormous symmetry groups stay within reach.
    """
    graph = ProductGraph(s, t)
    n = graph.n
    if n > VERTEX_GUARD:
        raise GuardError(f"s*t = {n} exceeds the {VERTEX_GUARD}-vertex guard")
    if c_max < 1:
        raise ValueError(f"need c_max >= 1, got {c_max}")
    if c_max**n > ENUMERATION_GUARD:
        raise GuardError(f"c_max^(s*t) = {c_max}^{n} exceeds {ENUMERATION_GUARD}")
    adjacency = graph.adjacency
    for c in range(1, c_max + 1):
        for coloring in product(range(c), repeat=n):
            if _color_preserving_nonidentity(adjacency, n, coloring) is None:
                return c
    return None

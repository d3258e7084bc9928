"""Decision procedures for graphs with good-neighbor connectivity 1 or 2,
and for the structured trees attaining value n-t.

Each checker searches candidate witnesses exhaustively (cheap at this
scale) and is tested against the solver as an if-and-only-if statement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    _component_masks,
    _gosper,
    _is_connected_mask,
    _min_degree_in,
    bits_of,
    is_connected,
    kappa_classical,
)
from .solver import kappa_gnc


def has_kappa1(G: Graph, g: int) -> int | None:
    """A cut vertex whose removal leaves every component with min degree >= g,
    or None. Non-None iff the good-neighbor connectivity equals 1."""
    if g < 0:
        raise GraphError(f"g must be non-negative, got {g}")
    rows = G.rows
    for v in range(G.n):
        remaining = G.full_mask & ~(1 << v)
        if not remaining or _is_connected_mask(rows, remaining):
            continue
        comps = _component_masks(rows, remaining)
        if all(_min_degree_in(rows, c) >= g for c in comps):
            return v
    return None


@dataclass(frozen=True)
class Kappa2Witness:
    """Which branch of the value-2 characterization holds, with its vertices."""

    branch: str  # "1", "2.2a", "2.2b", or "2.2c"
    vertices: tuple[int, ...]


def _cut_vertices(G: Graph) -> list[int]:
    rows = G.rows
    out = []
    for v in range(G.n):
        remaining = G.full_mask & ~(1 << v)
        if remaining and not _is_connected_mask(rows, remaining):
            out.append(v)
    return out


def has_kappa2(G: Graph, g: int) -> Kappa2Witness | None:
    """Classify G as having good-neighbor connectivity 2, or return None.

    Branch 1 applies when the classical connectivity is 2 and some cut pair
    leaves all components with min degree >= g. With classical connectivity
    1, every cut vertex must leave a deficient component (otherwise the
    value would be 1), and then one of three witness shapes must exist:
    (2.2b) a cut vertex with >= 3 components, one isolated, the others of
    min degree >= g; (2.2c) two non-cut vertices that disconnect with all
    components of min degree >= g; (2.2a) a cut vertex v leaving exactly one
    deficient component whose single deficient vertex u has all neighbors of
    degree >= g+1, where additionally removing both v and u disconnects.
    Branches are tried in the order 1, 2.2b, 2.2c, 2.2a.
    """
    if g < 0:
        raise GraphError(f"g must be non-negative, got {g}")
    if not is_connected(G):
        return None
    rows = G.rows
    full = G.full_mask
    kappa = kappa_classical(G)
    if kappa == 2:
        for pair in _gosper(G.n, 2):
            remaining = full & ~pair
            if _is_connected_mask(rows, remaining):
                continue
            comps = _component_masks(rows, remaining)
            if all(_min_degree_in(rows, c) >= g for c in comps):
                return Kappa2Witness("1", bits_of(pair))
        return None
    if kappa != 1 or g < 1:
        return None

    cuts = _cut_vertices(G)
    # Gate: one good cut vertex would already give connectivity 1.
    for v in cuts:
        comps = _component_masks(rows, full & ~(1 << v))
        if all(_min_degree_in(rows, c) >= g for c in comps):
            return None

    for v in cuts:
        comps = _component_masks(rows, full & ~(1 << v))
        if len(comps) < 3:
            continue
        isolated = [c for c in comps if c.bit_count() == 1]
        if not isolated:
            continue
        iso = isolated[0]
        if all(_min_degree_in(rows, c) >= g for c in comps if c != iso):
            return Kappa2Witness("2.2b", (v, bits_of(iso)[0]))

    cut_mask = 0
    for v in cuts:
        cut_mask |= 1 << v
    for pair in _gosper(G.n, 2):
        if pair & cut_mask:
            continue
        remaining = full & ~pair
        if _is_connected_mask(rows, remaining):
            continue
        comps = _component_masks(rows, remaining)
        if all(_min_degree_in(rows, c) >= g for c in comps):
            return Kappa2Witness("2.2c", bits_of(pair))

    for v in cuts:
        remaining = full & ~(1 << v)
        comps = _component_masks(rows, remaining)
        deficient = [c for c in comps if _min_degree_in(rows, c) <= g - 1]
        if len(deficient) != 1:
            continue
        comp = deficient[0]
        weak = [u for u in bits_of(comp) if (rows[u] & remaining).bit_count() <= g - 1]
        if len(weak) != 1:
            continue
        u = weak[0]
        neighbors = rows[u] & remaining
        ok_neighbors = True
        m = neighbors
        while m:
            low = m & -m
            m ^= low
            if (rows[low.bit_length() - 1] & remaining).bit_count() < g + 1:
                ok_neighbors = False
                break
        if not ok_neighbors:
            continue
        rem2 = remaining & ~(1 << u)
        if rem2 and not _is_connected_mask(rows, rem2):
            return Kappa2Witness("2.2a", (v, u))
    return None


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.edge_count == G.n - 1 and is_connected(G)


@dataclass(frozen=True)
class TnStarShape:
    t: int
    parts: tuple[int, ...]


def recognize_tn_star(T: Graph) -> TnStarShape | None:
    """Structural inverse of the hub-with-attached-stars tree generator.

    Looks for a hub adjacent to some direct leaves and to r >= 2 star
    centers, each star center carrying only leaves. Recognition is purely
    structural (labeling-independent); parts are returned sorted.
    """
    if not is_tree(T):
        raise GraphError("recognize_tn_star requires a tree")
    n = T.n
    degs = T.degrees()
    for hub in range(n):
        leaves = []
        centers = []
        for w in T.neighbors(hub):
            if degs[w] == 1:
                leaves.append(w)
            else:
                centers.append(w)
        if len(centers) < 2:
            continue
        covered = 1 + len(leaves)
        shape_ok = True
        parts = []
        for w in centers:
            kids = [x for x in T.neighbors(w) if x != hub]
            if any(degs[x] != 1 for x in kids):
                shape_ok = False
                break
            parts.append(1 + len(kids))
            covered += 1 + len(kids)
        if shape_ok and covered == n and all(a >= 2 for a in parts):
            return TnStarShape(t=sum(parts), parts=tuple(sorted(parts)))
    return None


def tree_kappa_predict(T: Graph, g: int) -> int | None:
    """Predicted good-neighbor connectivity of a tree, None for not-exists.

    g = 0: every tree with n >= 3 has a cut vertex, value 1. g >= 2: every
    vertex-deleted subtree keeps a vertex of degree <= 1, so no cut exists.
    g = 1: the recognizer decides the structured value n-t inside the window
    4 <= t <= (n+2)/2; outside it the solver is consulted.
    """
    if g < 0:
        raise GraphError(f"g must be non-negative, got {g}")
    if not is_tree(T):
        raise GraphError("tree_kappa_predict requires a tree")
    n = T.n
    if g == 0:
        return 1 if n >= 3 else None
    if g >= 2:
        return None
    shape = recognize_tn_star(T)
    if shape is not None and 4 <= shape.t and 2 * shape.t <= n + 2:
        return n - shape.t
    return kappa_gnc(T, 1).value

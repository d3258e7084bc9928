"""Immutable bitset-backed simple graphs plus classical connectivity kernels.

Vertices are labelled 0..n-1 and each adjacency row is a Python int used as a
bitmask, so n is capped at 64 to keep one row per machine word. Every function
here is pure; Graph instances never mutate after construction and are safe to
share across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Malformed graph construction or out-of-domain argument."""


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack vertex labels into a bitmask, rejecting labels outside 0..n-1."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into an ascending tuple of vertex labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """Simple undirected graph with one adjacency bitmask per vertex."""

    __slots__ = ("n", "rows", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be 0..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self.full_mask = (1 << n) - 1

    @classmethod
    def from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Trusted constructor from prebuilt adjacency rows (no validation)."""
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g.full_mask = (1 << n) - 1
        return g

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            higher = self.rows[u] >> (u + 1)
            while higher:
                low = higher & -higher
                out.append((u, u + low.bit_length()))
                higher ^= low
        return out

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_of(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def is_complete(self) -> bool:
        return all(self.rows[v] == self.full_mask ^ (1 << v) for v in range(self.n))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image of the graph under new_label -> perm[new_label]."""
        p = list(perm)
        return Graph(self.n, [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                              if self.rows[p[i]] >> p[j] & 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    size: int
    min_degree: int


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components of a vertex-deleted subgraph, smallest label first."""

    components: tuple[ComponentInfo, ...]

    @property
    def count(self) -> int:
        return len(self.components)


def _component_masks(rows: tuple[int, ...], remaining: int) -> list[int]:
    """Vertex masks of the connected components induced on `remaining`."""
    comps = []
    rem = remaining
    while rem:
        comp = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & rem & ~comp
        comps.append(comp)
        rem &= ~comp
    return comps


def _is_connected_mask(rows: tuple[int, ...], mask: int) -> bool:
    """True iff the subgraph induced on `mask` has at most one component."""
    if not mask:
        return True
    comp = 0
    frontier = mask & -mask
    while frontier:
        comp |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & mask & ~comp
    return comp == mask


def _min_degree_in(rows: tuple[int, ...], mask: int) -> int:
    best = MAX_VERTICES + 1
    m = mask
    while m:
        low = m & -m
        m ^= low
        d = (rows[low.bit_length() - 1] & mask).bit_count()
        if d < best:
            best = d
    return best


def _gosper(n_bits: int, k: int) -> Iterator[int]:
    """All masks over n_bits with popcount k, in ascending numeric order."""
    if k == 0:
        yield 0
        return
    if k > n_bits:
        return
    m = (1 << k) - 1
    top = 1 << n_bits
    while m < top:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


def components_after_removal(G: Graph, removed: Iterable[int]) -> ComponentSummary:
    """Components of G - X with sizes and minimum degrees measured inside G - X."""
    rmask = mask_of(removed, G.n)
    remaining = G.full_mask & ~rmask
    infos = []
    for comp in _component_masks(G.rows, remaining):
        infos.append(ComponentInfo(
            vertices=bits_of(comp),
            size=comp.bit_count(),
            min_degree=_min_degree_in(G.rows, comp),
        ))
    return ComponentSummary(components=tuple(infos))


def is_connected(G: Graph) -> bool:
    return _is_connected_mask(G.rows, G.full_mask)


def kappa_classical(G: Graph) -> int | None:
    """Classical vertex connectivity by increasing-size subset search.

    Returns None for complete graphs (no removal disconnects them) and 0 for
    disconnected input, which doubles as the disconnected-input flag.
    """
    n = G.n
    if not _is_connected_mask(G.rows, G.full_mask):
        return 0
    if G.is_complete():
        return None
    for k in range(1, n - 1):
        for cut in _gosper(n, k):
            if not _is_connected_mask(G.rows, G.full_mask & ~cut):
                return k
    raise AssertionError("connected non-complete graph must have a cut of size <= n-2")


def _edge_maxflow(G: Graph, s: int, t: int) -> int:
    """Edge-disjoint s-t path count via unit-capacity BFS augmentation."""
    cap = [dict() for _ in range(G.n)]
    for u, v in G.edges():
        cap[u][v] = 1
        cap[v][u] = 1
    flow = 0
    while True:
        parent = {s: s}
        queue = [s]
        while queue and t not in parent:
            nxt = []
            for u in queue:
                for v, c in cap[u].items():
                    if c > 0 and v not in parent:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if t not in parent:
            return flow
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1


def lambda_classical(G: Graph) -> int:
    """Classical edge connectivity, exact, via iterated minimum s-t cuts."""
    if G.n < 2:
        raise GraphError(f"edge connectivity needs n >= 2, got n={G.n}")
    if not is_connected(G):
        return 0
    return min(_edge_maxflow(G, 0, t) for t in range(1, G.n))


def is_spanning_subgraph(H: Graph, G: Graph) -> bool:
    """True iff H has the same vertex set as G and E(H) is a subset of E(G)."""
    if H.n != G.n:
        return False
    return all(H.rows[v] & ~G.rows[v] == 0 for v in range(G.n))

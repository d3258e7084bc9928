"""Exhaustive small-graph enumeration and brute-force canonical labeling.

The canonical form of a graph is the minimum, over all vertex permutations,
of the upper-triangle adjacency bits in column-major order, packed into an
int. Minimization is vectorized with numpy over the full permutation table,
which stays cache-friendly up to n = 9 (362880 permutations).

Isomorphism classes are enumerated by edge augmentation: every class with
m+1 edges contains an edge whose deletion yields a class with m edges, so
augmenting all m-edge representatives by one edge and deduplicating by
canonical form is complete. For connected classes the same argument works
starting from the trees (removing a cycle edge keeps connectivity), which
avoids enumerating disconnected substrate at n = 8.
"""

from __future__ import annotations

import multiprocessing
from functools import lru_cache
from itertools import permutations

import numpy as np

from .codec import colex_pairs, graph_from_bits, graph_to_bits
from .graph import Graph, GraphError, is_connected

MAX_ENUM_N = 8
MAX_CANON_N = 9

_canon_memo: dict[tuple[int, tuple[int, ...]], int] = {}


@lru_cache(maxsize=None)
def _canon_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column gather indices of shape (n!, C(n,2)) for canonicalization."""
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    pairs = colex_pairs(n)
    idx_i = np.empty((perms.shape[0], len(pairs)), dtype=np.int8)
    idx_j = np.empty_like(idx_i)
    for c, (i, j) in enumerate(pairs):
        idx_i[:, c] = perms[:, i]
        idx_j[:, c] = perms[:, j]
    return idx_i, idx_j


def canonical_form(G: Graph) -> int:
    """Labeling-independent representative of G's isomorphism class."""
    n = G.n
    if n > MAX_CANON_N:
        raise GraphError(f"canonical labeling is brute force; refusing n={n} > {MAX_CANON_N}")
    if n <= 1:
        return 0
    key = (n, G.rows)
    cached = _canon_memo.get(key)
    if cached is not None:
        return cached
    adj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        row = G.rows[v]
        while row:
            low = row & -row
            row ^= low
            adj[v, low.bit_length() - 1] = True
    idx_i, idx_j = _canon_tables(n)
    bits = adj[idx_i, idx_j]
    packed = np.packbits(bits, axis=1, bitorder="little")
    padded = np.zeros((packed.shape[0], 8), dtype=np.uint8)
    padded[:, : packed.shape[1]] = packed
    values = padded.view("<u8").ravel()
    result = int(values.min())
    _canon_memo[key] = result
    return result


def canonical_graph(G: Graph) -> Graph:
    return graph_from_bits(G.n, canonical_form(G))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and canonical_form(G) == canonical_form(H)


class _ClassLevels:
    """Incrementally computed canonical representatives per edge count."""

    def __init__(self, n: int, seeds: list[int], connected_only: bool, base_edges: int):
        self.n = n
        self.connected_only = connected_only
        self.base_edges = base_edges
        self.levels: list[list[int]] = [sorted(seeds)]

    def level(self, m: int) -> list[int]:
        idx = m - self.base_edges
        if idx < 0:
            return []
        max_edges = self.n * (self.n - 1) // 2
        if m > max_edges:
            return []
        while len(self.levels) <= idx:
            prev = self.levels[-1]
            seen: set[int] = set()
            npairs = max_edges
            for bits in prev:
                for c in range(npairs):
                    if bits >> c & 1:
                        continue
                    candidate = graph_from_bits(self.n, bits | (1 << c))
                    seen.add(canonical_form(candidate))
            self.levels.append(sorted(seen))
        return self.levels[idx]


@lru_cache(maxsize=None)
def _all_class_levels(n: int) -> _ClassLevels:
    return _ClassLevels(n, seeds=[0], connected_only=False, base_edges=0)


@lru_cache(maxsize=None)
def _connected_class_levels(n: int) -> _ClassLevels:
    if n == 0:
        return _ClassLevels(n, seeds=[0], connected_only=True, base_edges=0)
    seeds = [canonical_form(t) for t in enumerate_trees(n)]
    return _ClassLevels(n, seeds=sorted(set(seeds)), connected_only=True, base_edges=n - 1)


def graph_classes_at_edges(n: int, m: int, connected_only: bool = False) -> list[Graph]:
    """Canonical class representatives on n vertices with exactly m edges."""
    if n > MAX_ENUM_N:
        raise GraphError(
            f"full enumeration refuses n={n} > {MAX_ENUM_N}; supply an external corpus instead"
        )
    levels = _connected_class_levels(n) if connected_only else _all_class_levels(n)
    return [graph_from_bits(n, bits) for bits in levels.level(m)]


def enumerate_graphs(
    n: int,
    *,
    connected_only: bool = False,
    dedupe_iso: bool = False,
    edge_min: int | None = None,
    edge_max: int | None = None,
):
    """Stream graphs on n vertices passing the filters.

    Labeled mode walks all 2^C(n,2) edge masks in ascending numeric order;
    with dedupe_iso one representative per isomorphism class is produced
    instead, ordered by (edge count, canonical bits).
    """
    if n > MAX_ENUM_N:
        raise GraphError(
            f"full enumeration refuses n={n} > {MAX_ENUM_N}; supply an external corpus instead"
        )
    max_edges = n * (n - 1) // 2
    lo = 0 if edge_min is None else max(edge_min, 0)
    hi = max_edges if edge_max is None else min(edge_max, max_edges)
    if dedupe_iso:
        for m in range(lo, hi + 1):
            yield from graph_classes_at_edges(n, m, connected_only=connected_only)
        return
    for bits in range(1 << max_edges):
        count = bits.bit_count()
        if not lo <= count <= hi:
            continue
        G = graph_from_bits(n, bits)
        if connected_only and not is_connected(G):
            continue
        yield G


@lru_cache(maxsize=None)
def connected_graph_classes(n: int) -> tuple[Graph, ...]:
    """All connected isomorphism classes on n vertices, deterministic order."""
    out = []
    max_edges = n * (n - 1) // 2
    start = max(n - 1, 0)
    for m in range(start, max_edges + 1):
        out.extend(graph_classes_at_edges(n, m, connected_only=True))
    return tuple(out)


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


@lru_cache(maxsize=None)
def connected_labeled_count(n: int) -> int:
    """Count of connected labeled graphs via the complement-exclusion recurrence."""
    if n <= 1:
        return 1
    from math import comb

    total = labeled_graph_count(n)
    for k in range(1, n):
        total -= comb(n - 1, k - 1) * connected_labeled_count(k) * labeled_graph_count(n - k)
    return total


# --- trees ------------------------------------------------------------------


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on 0..n-1 with the given sequence."""
    if n < 2:
        return []
    if len(seq) != n - 2:
        raise GraphError(f"sequence length must be n-2 = {n - 2}, got {len(seq)}")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        edges.append((leaf, s) if leaf < s else (s, leaf))
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _tree_certificate(n: int, edges: list[tuple[int, int]]):
    """Content-stable rooted-at-center certificate (complete tree invariant)."""
    if n == 1:
        return (0, ())
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    remaining = n
    layer = [v for v in range(n) if deg[v] == 1]
    alive = [True] * n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for w in adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(v: int, parent: int):
        return tuple(sorted(encode(w, v) for w in adj[v] if w != parent))

    return (n, min(encode(c, -1) for c in centers))


def _tree_shard(args: tuple[int, int, int]) -> dict:
    """Dedupe one slice of sequence space; returns certificate -> (index, edges)."""
    n, lo, hi = args
    length = n - 2
    best: dict[tuple, tuple[int, tuple]] = {}
    seq = [0] * length
    rem = lo
    for pos in range(length - 1, -1, -1):
        seq[pos] = rem % n
        rem //= n
    for index in range(lo, hi):
        edges = prufer_decode(tuple(seq), n)
        cert = _tree_certificate(n, edges)
        if cert not in best:
            best[cert] = (index, tuple(edges))
        # odometer increment
        pos = length - 1
        while pos >= 0:
            seq[pos] += 1
            if seq[pos] < n:
                break
            seq[pos] = 0
            pos -= 1
    return best


_tree_cache: dict[int, tuple[Graph, ...]] = {}


def enumerate_trees(n: int, threads: int = 1) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism, by exhaustive sequence
    enumeration, deduplicated by canonical form.

    A fast complete tree invariant prunes the bulk; the surviving
    representatives are re-deduplicated by brute-force canonical form, and
    the two mechanisms are required to agree. Output is ordered by canonical
    bits and is independent of the worker count.
    """
    if n < 1:
        raise GraphError(f"trees need n >= 1, got n={n}")
    cached = _tree_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        return _tree_cache.setdefault(n, (Graph(1),))
    if n == 2:
        return _tree_cache.setdefault(n, (Graph(2, [(0, 1)]),))
    total = n ** (n - 2)
    chunk = 1 << 17
    shards = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if threads > 1 and len(shards) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            results = pool.map(_tree_shard, shards)
    else:
        results = [_tree_shard(s) for s in shards]
    merged: dict[tuple, tuple[int, tuple]] = {}
    for shard in results:
        for cert, entry in shard.items():
            if cert not in merged or entry < merged[cert]:
                merged[cert] = entry
    by_canon: dict[int, Graph] = {}
    for _, edges in merged.values():
        T = Graph(n, edges)
        c = canonical_form(T)
        by_canon.setdefault(c, graph_from_bits(n, c))
    if len(by_canon) != len(merged):
        raise AssertionError("tree certificate and canonical form disagree")
    return _tree_cache.setdefault(n, tuple(by_canon[c] for c in sorted(by_canon)))


__all__ = [
    "MAX_CANON_N",
    "MAX_ENUM_N",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "connected_graph_classes",
    "connected_labeled_count",
    "enumerate_graphs",
    "enumerate_trees",
    "graph_classes_at_edges",
    "graph_to_bits",
    "labeled_graph_count",
    "prufer_decode",
]

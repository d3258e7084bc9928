"""Exact good-neighbor / extra connectivity with certificates.

The fast paths enumerate fault sets by increasing size and, within a size,
in ascending numeric order of the fault bitmask; the first valid cut found
is the certificate, which makes every result deterministic. A separately
written unpruned oracle over all 2^n subsets backs the fast paths in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    _component_masks,
    _gosper,
    _is_connected_mask,
    bits_of,
    mask_of,
)


class NotExistReason(Enum):
    G_OUT_OF_RANGE = "GOutOfRange"
    NO_VALID_CUT = "NoValidCut"
    COMPLETE_GRAPH = "CompleteGraph"
    DISCONNECTED_INPUT = "DisconnectedInput"


@dataclass(frozen=True)
class GncResult:
    """Outcome of a vertex-cut search: a value with certificate, or a reason."""

    value: int | None
    certificate: tuple[int, ...] | None
    reason: NotExistReason | None

    @property
    def exists(self) -> bool:
        return self.value is not None

    @staticmethod
    def found(value: int, certificate: tuple[int, ...]) -> "GncResult":
        return GncResult(value, certificate, None)

    @staticmethod
    def missing(reason: NotExistReason) -> "GncResult":
        return GncResult(None, None, reason)


# The extra-connectivity result has the same shape; only the cut condition
# (component order >= g+1 instead of minimum degree >= g) differs.
ExtraResult = GncResult


@dataclass(frozen=True)
class EdgeExtraResult:
    value: int | None
    edges: tuple[tuple[int, int], ...] | None
    reason: NotExistReason | None

    @property
    def exists(self) -> bool:
        return self.value is not None


def _check_g(g: int) -> None:
    if g < 0:
        raise GraphError(f"g must be non-negative, got {g}")


def g_range(G: Graph) -> tuple[int, int]:
    """Admissible window (0, g_max) for good-neighbor cuts.

    g_max = min(max degree, floor((n-3)/2)); a negative g_max means no g is
    admissible at all.
    """
    return 0, min(G.max_degree(), (G.n - 3) // 2)


def _good_neighbor_ok(rows: tuple[int, ...], remaining: int, g: int) -> bool:
    """Every vertex of the remainder keeps at least g neighbors in it."""
    if g == 0:
        return True
    m = remaining
    while m:
        low = m & -m
        m ^= low
        if (rows[low.bit_length() - 1] & remaining).bit_count() < g:
            return False
    return True


def is_gnc_faulty_set(G: Graph, fault, g: int) -> bool:
    """True iff every vertex outside `fault` keeps at least g neighbors outside it."""
    _check_g(g)
    fmask = mask_of(fault, G.n)
    return _good_neighbor_ok(G.rows, G.full_mask & ~fmask, g)


def is_gnc_cut(G: Graph, fault, g: int) -> bool:
    """True iff `fault` is a g-good-neighbor faulty set whose removal disconnects G."""
    _check_g(g)
    fmask = mask_of(fault, G.n)
    remaining = G.full_mask & ~fmask
    if not remaining or _is_connected_mask(G.rows, remaining):
        return False
    return _good_neighbor_ok(G.rows, remaining, g)


def _expand(sub: int, positions: list[int]) -> int:
    mask = 0
    while sub:
        low = sub & -sub
        sub ^= low
        mask |= 1 << positions[low.bit_length() - 1]
    return mask


@lru_cache(maxsize=None)
def kappa_gnc(G: Graph, g: int) -> GncResult:
    """Minimum g-good-neighbor cut of G with a certificate.

    Sizes are searched from 0 up to n-2g-2; any good-neighbor cut forces two
    components of order >= g+1 each, so nothing can exist beyond that bound.
    Vertices of degree below g belong to every faulty set and are fixed up
    front, which prunes without ever changing the answer.
    """
    _check_g(g)
    n = G.n
    rows = G.rows
    if not _is_connected_mask(rows, G.full_mask):
        return GncResult.missing(NotExistReason.DISCONNECTED_INPUT)
    if G.is_complete():
        return GncResult.missing(NotExistReason.COMPLETE_GRAPH)
    if g > g_range(G)[1]:
        return GncResult.missing(NotExistReason.G_OUT_OF_RANGE)
    required = 0
    for v in range(n):
        if rows[v].bit_count() < g:
            required |= 1 << v
    req_count = required.bit_count()
    free = [v for v in range(n) if not required >> v & 1]
    hi = n - 2 * g - 2
    for k in range(req_count, hi + 1):
        for sub in _gosper(len(free), k - req_count):
            fmask = required | _expand(sub, free)
            remaining = G.full_mask & ~fmask
            if g and not _good_neighbor_ok(rows, remaining, g):
                continue
            if _is_connected_mask(rows, remaining):
                continue
            return GncResult.found(k, bits_of(fmask))
    return GncResult.missing(NotExistReason.NO_VALID_CUT)


def kappa_gnc_oracle(G: Graph, g: int) -> GncResult:
    """Unpruned reference: every subset of V, independent connectivity check.

    Kept deliberately simple and separate from the fast path; refuses n > 20.
    """
    _check_g(g)
    n = G.n
    if n > 20:
        raise GraphError(f"oracle refuses n={n} > 20 (2^n subsets)")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in G.edges():
        adj[u].add(v)
        adj[v].add(u)
    best: tuple[int, int] | None = None
    for fmask in range(1 << n):
        alive = [v for v in range(n) if not fmask >> v & 1]
        if len(alive) < 2:
            continue
        alive_set = set(alive)
        if any(len(adj[v] & alive_set) < g for v in alive):
            continue
        seen: set[int] = set()
        stack = [alive[0]]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(w for w in adj[v] if w in alive_set and w not in seen)
        if len(seen) == len(alive):
            continue
        key = (fmask.bit_count(), fmask)
        if best is None or key < best:
            best = key
    if best is not None:
        return GncResult.found(best[0], bits_of(best[1]))
    if not _is_connected_mask(G.rows, G.full_mask):
        return GncResult.missing(NotExistReason.DISCONNECTED_INPUT)
    return GncResult.missing(NotExistReason.NO_VALID_CUT)


@lru_cache(maxsize=None)
def kappa_extra(G: Graph, g: int) -> ExtraResult:
    """Minimum cutset leaving every component with at least g+1 vertices."""
    _check_g(g)
    n = G.n
    rows = G.rows
    if not _is_connected_mask(rows, G.full_mask):
        return GncResult.missing(NotExistReason.DISCONNECTED_INPUT)
    if G.is_complete():
        return GncResult.missing(NotExistReason.COMPLETE_GRAPH)
    hi = n - 2 * g - 2
    for k in range(0, hi + 1):
        for fmask in _gosper(n, k):
            remaining = G.full_mask & ~fmask
            comps = _component_masks(rows, remaining)
            if len(comps) < 2:
                continue
            if all(c.bit_count() >= g + 1 for c in comps):
                return GncResult.found(k, bits_of(fmask))
    return GncResult.missing(NotExistReason.NO_VALID_CUT)


def lambda_extra(G: Graph, g: int) -> EdgeExtraResult:
    """Minimum edge cut leaving every component with more than g vertices.

    Brute force over edge subsets by increasing size; guarded at 24 edges.
    """
    _check_g(g)
    m = G.edge_count
    if m > 24:
        raise GraphError(
            f"edge brute force is 2^m; refusing m={m} > 24 "
            "(shrink the graph or compute at smaller scale)"
        )
    edges = G.edges()
    # Two surviving components of order >= g+1 keep >= 2g edges, so larger
    # deletions cannot succeed.
    top = m - 2 * g if g else m
    for k in range(0, top + 1):
        for combo in combinations(range(m), k):
            rows = list(G.rows)
            for idx in combo:
                u, v = edges[idx]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            comps = _component_masks(tuple(rows), G.full_mask)
            if len(comps) >= 2 and all(c.bit_count() > g for c in comps):
                return EdgeExtraResult(k, tuple(edges[i] for i in combo), None)
    return EdgeExtraResult(None, None, NotExistReason.NO_VALID_CUT)

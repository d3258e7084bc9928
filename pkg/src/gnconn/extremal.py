"""Extremal edge-count functions for good-neighbor connectivity, searched
exhaustively and compared against their closed forms.

All three searches run over connected graphs of a fixed order: the minimum
size attaining value exactly k, the edge threshold forcing value >= k, and
the edge ceiling guaranteeing value <= k. Graphs where no good-neighbor cut
exists never violate a lower-bound requirement (they count as ">= k") and
never exceed a ceiling.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .codec import emit_graph6
from .enumeration import MAX_ENUM_N, graph_classes_at_edges
from .graph import Graph, GraphError, is_connected
from .solver import kappa_gnc

_WITNESS_CAP = 10


@dataclass(frozen=True)
class FormulaValues:
    """Closed-form values; None with a note when undefined at the parameters."""

    s: int | None
    f: int | None
    g: int | None
    s_note: str = ""
    f_note: str = ""
    g_note: str = ""


def formula_values(n: int, k: int, g: int) -> FormulaValues:
    """Closed forms for the three extremal functions.

    The size minimum uses the tree value n-1 at g=1 and (n-k)g/2 + k + 1
    rounded up for g >= 2; the rounding case is non-integral when g is even
    and n-k is odd, which is reported rather than guessed. The threshold
    formula is C(n,2) - (n-k-g)(g+1) + 1 (its witness needs k >= 2). The
    ceiling is derived from the identity g(n,k) = s(n,k+1) - 1.
    """
    s_val, s_note = _s_formula(n, k, g)
    if k >= 2 and g >= 1 and 2 * g <= n - k - 2 and 1 <= k <= n - 2 * g - 2:
        f_val, f_note = comb(n, 2) - (n - k - g) * (g + 1) + 1, ""
    else:
        f_val, f_note = None, "outside stated window (needs k >= 2 and 1 <= g <= (n-k-2)/2)"
    s_next, s_next_note = _s_formula(n, k + 1, g)
    if s_next is not None:
        g_val, g_note = s_next - 1, ""
    else:
        g_val, g_note = None, f"derived from size minimum at k+1: {s_next_note}"
    return FormulaValues(s_val, f_val, g_val, s_note, f_note, g_note)


def _s_formula(n: int, k: int, g: int) -> tuple[int | None, str]:
    if not (g >= 1 and 2 * g <= n - k - 2 and 1 <= k <= n - 2 * g - 2):
        return None, "outside stated window (needs 1 <= g <= (n-k-2)/2 and 1 <= k <= n-2g-2)"
    if g == 1:
        return n - 1, ""
    total = (n - k) * g
    if total % 2 == 0:
        return total // 2 + k + 1, ""
    if (total + 1) % 2 == 0 and g % 2 == 1:
        return (total + 1) // 2 + k + 1, ""
    return None, f"non-integral: ((n-k)g+1)/2 with (n-k)g = {total} even parity mismatch"


@dataclass
class ExtremalReport:
    kind: str
    n: int
    k: int
    g: int
    searched_value: int | None
    formula_value: int | None
    formula_note: str
    witnesses: list[str]
    match: bool
    graphs_scanned: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "g": self.g,
            "searchedValue": self.searched_value,
            "formulaValue": self.formula_value,
            "formulaNote": self.formula_note,
            "witnesses": list(self.witnesses),
            "match": self.match,
            "graphsScanned": self.graphs_scanned,
            "elapsed": self.elapsed,
        }


def _kappa_of_payload(payload: tuple[int, tuple[int, ...], int]) -> int | None:
    n, rows, g = payload
    return kappa_gnc(Graph.from_rows(n, rows), g).value


def _values_for(graphs: Sequence[Graph], g: int, threads: int) -> list[int | None]:
    payloads = [(G.n, G.rows, g) for G in graphs]
    if threads > 1 and len(payloads) >= 32:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            return pool.map(_kappa_of_payload, payloads, chunksize=16)
    return [_kappa_of_payload(p) for p in payloads]


class _Universe:
    """Connected graphs of order n grouped by edge count, internal or corpus."""

    def __init__(self, n: int, corpus: Iterable[Graph] | None):
        self.n = n
        self.max_edges = n * (n - 1) // 2
        self.corpus: dict[int, list[Graph]] | None = None
        if corpus is not None:
            grouped: dict[int, list[Graph]] = {}
            for G in corpus:
                if G.n == n and is_connected(G):
                    grouped.setdefault(G.edge_count, []).append(G)
            for graphs in grouped.values():
                graphs.sort(key=emit_graph6)
            self.corpus = grouped
        elif n > MAX_ENUM_N:
            raise GraphError(
                f"internal enumeration refuses n={n} > {MAX_ENUM_N}; pass an external corpus"
            )

    def at_edges(self, m: int) -> list[Graph]:
        if self.corpus is not None:
            return self.corpus.get(m, [])
        return graph_classes_at_edges(self.n, m, connected_only=True)


def _search(kind: str, n: int, k: int, g: int, corpus, threads: int) -> ExtremalReport:
    if n < 1 or k < 1 or g < 0:
        raise GraphError(f"parameters must satisfy n >= 1, k >= 1, g >= 0; got {(n, k, g)}")
    start = time.perf_counter()
    universe = _Universe(n, corpus)
    formulas = formula_values(n, k, g)
    scanned = 0
    searched: int | None = None
    witnesses: list[str] = []

    if kind == "s":
        formula, note = formulas.s, formulas.s_note
        edge_range = range(max(n - 1, 0), universe.max_edges + 1)
        hit = lambda v: v is not None and v == k
        offset = 0
    elif kind == "g":
        formula, note = formulas.g, formulas.g_note
        edge_range = range(max(n - 1, 0), universe.max_edges + 1)
        hit = lambda v: v is not None and v > k
        offset = -1
    elif kind == "f":
        formula, note = formulas.f, formulas.f_note
        edge_range = range(universe.max_edges, max(n - 1, 0) - 1, -1)
        hit = lambda v: v is not None and v < k
        offset = +1
    else:
        raise GraphError(f"unknown extremal function {kind!r}")

    for m in edge_range:
        graphs = universe.at_edges(m)
        scanned += len(graphs)
        values = _values_for(graphs, g, threads)
        hits = [G for G, v in zip(graphs, values) if hit(v)]
        if hits:
            searched = m + offset
            witnesses = [emit_graph6(G) for G in hits[:_WITNESS_CAP]]
            break

    match = searched is not None and formula is not None and searched == formula
    return ExtremalReport(
        kind=kind, n=n, k=k, g=g,
        searched_value=searched,
        formula_value=formula,
        formula_note=note,
        witnesses=witnesses,
        match=match,
        graphs_scanned=scanned,
        elapsed=time.perf_counter() - start,
    )


def s_search(n: int, k: int, g: int, corpus: Iterable[Graph] | None = None,
             threads: int = 1) -> ExtremalReport:
    """Minimum edge count over connected graphs of order n whose
    good-neighbor connectivity equals k exactly; ascends and stops at the
    first hit."""
    return _search("s", n, k, g, corpus, threads)


def f_search(n: int, k: int, g: int, corpus: Iterable[Graph] | None = None,
             threads: int = 1) -> ExtremalReport:
    """One more than the maximum edge count of a connected graph whose
    good-neighbor connectivity exists and is below k; descends from the
    complete graph."""
    return _search("f", n, k, g, corpus, threads)


def g_search(n: int, k: int, g: int, corpus: Iterable[Graph] | None = None,
             threads: int = 1) -> ExtremalReport:
    """One less than the minimum edge count of a connected graph whose
    good-neighbor connectivity exists and exceeds k; ascends and stops at
    the first hit."""
    return _search("g", n, k, g, corpus, threads)

"""Deterministic generators for every named graph family.

Each generator documents its labeling so certificates are reproducible run
to run. `instantiate` wraps a generator together with the expected
connectivity record that the verify suites consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError


class FamilyParameterError(GraphError):
    """A generator precondition was violated; the message names the inequality."""


def _clique_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[j])
            for i in range(len(vertices)) for j in range(i + 1, len(vertices))]


def _join_edges(a: Iterable[int], b: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in a for v in b]


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise FamilyParameterError(f"path needs n >= 1, got n={n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise FamilyParameterError(f"cycle needs n >= 3, got n={n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    if n < 1:
        raise FamilyParameterError(f"star needs n >= 1, got n={n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Wheel of order n: center 0 plus the (n-1)-cycle 1..n-1."""
    if n < 4:
        raise FamilyParameterError(f"wheel needs n >= 4, got n={n}")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return Graph(n, rim + [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyParameterError(f"complete graph needs n >= 1, got n={n}")
    return Graph(n, _clique_edges(range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise FamilyParameterError(f"complete bipartite needs a, b >= 1, got a={a}, b={b}")
    return Graph(a + b, _join_edges(range(a), range(a, a + b)))


def complete_multipartite(*parts: int) -> Graph:
    """Parts laid out consecutively in the given order."""
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise FamilyParameterError(f"parts must all be >= 1, got {parts}")
    n = sum(parts)
    bounds = []
    at = 0
    for p in parts:
        bounds.append(range(at, at + p))
        at += p
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend(_join_edges(bounds[i], bounds[j]))
    return Graph(n, edges)


def tn_star(n: int, t: int, parts: Sequence[int]) -> Graph:
    """Tree: hub 0 with n-t-1 direct leaves, joined to r star centers.

    Labeling: hub v=0; direct leaves 1..n-t-1; then each attached star
    occupies a contiguous block, center first. The minimum 1-good-neighbor
    cut is {0, 1, ..., n-t-1}.
    """
    parts = tuple(parts)
    r = len(parts)
    if r < 2:
        raise FamilyParameterError(f"needs r >= 2 attached stars, got r={r}")
    if any(a < 2 for a in parts):
        raise FamilyParameterError(f"every part must satisfy a_i >= 2, got {parts}")
    if sum(parts) != t:
        raise FamilyParameterError(f"parts must sum to t={t}, got sum {sum(parts)}")
    if t < 4:
        raise FamilyParameterError(f"needs t >= 4, got t={t}")
    if 2 * t > n + 2:
        raise FamilyParameterError(f"needs t <= (n+2)/2, got t={t}, n={n}")
    edges = [(0, u) for u in range(1, n - t)]
    at = n - t
    for a in parts:
        center = at
        edges.append((0, center))
        edges.extend((center, leaf) for leaf in range(at + 1, at + a))
        at += a
    assert at == n
    return Graph(n, edges)


def tn_prime(n: int, k: int, a: int, b: int) -> Graph:
    """Tree of three stars: center x=0 (k-1 leaves) joined to centers u and v.

    Labeling: x-block 0..k-1, u-block k..k+a-1, v-block k+a..n-1, each block
    center first.
    """
    if k < 1:
        raise FamilyParameterError(f"needs k >= 1, got k={k}")
    if a < 2 or b < 2:
        raise FamilyParameterError(f"needs a >= 2 and b >= 2, got a={a}, b={b}")
    if k + a + b != n:
        raise FamilyParameterError(f"needs k+a+b = n, got {k}+{a}+{b} != {n}")
    if n < k + 4:
        raise FamilyParameterError(f"needs n >= k+4, got n={n}, k={k}")
    edges = [(0, leaf) for leaf in range(1, k)]
    u, v = k, k + a
    edges += [(0, u), (0, v)]
    edges += [(u, leaf) for leaf in range(k + 1, k + a)]
    edges += [(v, leaf) for leaf in range(k + a + 1, n)]
    return Graph(n, edges)


def circulant_regular(m: int, g: int, offset_base: int = 0) -> list[tuple[int, int]]:
    """Edges of the g-regular circulant on vertices offset_base..offset_base+m-1.

    Offsets 1..g//2 both ways; odd g additionally uses the antipodal offset
    m/2, which requires m even. Valid whenever m >= g+1 and m*g is even.
    """
    if m <= g:
        raise FamilyParameterError(f"no {g}-regular graph on {m} < {g + 1} vertices")
    if (m * g) % 2:
        raise FamilyParameterError(f"no {g}-regular graph on {m} vertices ({m}*{g} is odd)")
    pairs = set()
    for v in range(m):
        for d in range(1, g // 2 + 1):
            w = (v + d) % m
            pairs.add((min(v, w), max(v, w)))
        if g % 2:
            w = (v + m // 2) % m
            pairs.add((min(v, w), max(v, w)))
    edges = sorted((u + offset_base, w + offset_base) for u, w in pairs)
    degs = {v: 0 for v in range(offset_base, offset_base + m)}
    for u, w in edges:
        degs[u] += 1
        degs[w] += 1
    if any(d != g for d in degs.values()):
        raise FamilyParameterError(f"circulant construction failed to be {g}-regular on m={m}")
    return edges


def fkn(n: int, k: int, g: int, f1_order: int) -> Graph:
    """Two g-regular circulant blocks hung off a star by single edges.

    Labeling: star center v=0 with leaves 1..k-1, then block F1 of order
    f1_order, then block F2; v attaches to the first vertex of each block.
    The minimum g-good-neighbor cut is the whole star block {0..k-1}.
    """
    if k < 1:
        raise FamilyParameterError(f"needs k >= 1, got k={k}")
    if g < 2:
        raise FamilyParameterError(f"needs g >= 2, got g={g}")
    if 2 * g > n - k - 2:
        raise FamilyParameterError(f"needs g <= (n-k-2)/2, got g={g}, n-k={n - k}")
    rest = n - k
    if (rest * g) % 2:
        raise FamilyParameterError(f"(n-k)*g = {rest}*{g} must be even")
    a, b = f1_order, rest - f1_order
    if a < g + 1 or b < g + 1:
        raise FamilyParameterError(f"block orders must be >= g+1 = {g + 1}, got {a} and {b}")
    edges = [(0, leaf) for leaf in range(1, k)]
    edges += circulant_regular(a, g, offset_base=k)
    edges += circulant_regular(b, g, offset_base=k + a)
    edges += [(0, k), (0, k + a)]
    return Graph(n, edges)


def _near_regular_block(b: int, g: int, offset_base: int) -> list[tuple[int, int]]:
    """Connected block of order b with degree sequence (g+1, g, ..., g).

    Starts from the (g-1)-regular circulant, then searches exhaustively for
    augmentation edges among non-adjacent pairs that realize the exact
    degree deficits (first vertex +2, every other +1). Raises rather than
    emitting a wrong graph.
    """
    base = circulant_regular(b, g - 1, offset_base=0)
    adj = [0] * b
    for u, w in base:
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    deficit = [1] * b
    deficit[0] = 2

    added: list[tuple[int, int]] = []

    def backtrack() -> bool:
        v = next((i for i in range(b) if deficit[i]), None)
        if v is None:
            return True
        for w in range(v + 1, b):
            if deficit[w] and not adj[v] >> w & 1:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
                deficit[v] -= 1
                deficit[w] -= 1
                added.append((v, w))
                if backtrack():
                    return True
                added.pop()
                adj[v] &= ~(1 << w)
                adj[w] &= ~(1 << v)
                deficit[v] += 1
                deficit[w] += 1
        return False

    if not backtrack():
        raise FamilyParameterError(
            f"no near-regular augmentation exists for order {b}, degree {g}"
        )
    degs = [adj[v].bit_count() for v in range(b)]
    if degs[0] != g + 1 or any(d != g for d in degs[1:]):
        raise FamilyParameterError(f"near-regular block validation failed: degrees {degs}")
    return [(u + offset_base, w + offset_base) for u, w in sorted(base + added)]


def hkn(n: int, k: int, g: int, a: int, b: int) -> Graph:
    """Star plus a g-regular block of even order a and a near-regular block
    of odd order b (one vertex of degree g+1, the rest g).

    Labeling mirrors fkn: star block first, then the a-block, then the
    b-block whose first vertex carries degree g+1.
    """
    if k < 1:
        raise FamilyParameterError(f"needs k >= 1, got k={k}")
    if g < 2:
        raise FamilyParameterError(f"needs g >= 2, got g={g}")
    if ((n - k) * g) % 2 == 0:
        raise FamilyParameterError(f"(n-k)*g = {n - k}*{g} must be odd for this family")
    if 2 * g > n - k - 2:
        raise FamilyParameterError(f"needs g <= (n-k-2)/2, got g={g}, n-k={n - k}")
    if a % 2 or b % 2 == 0:
        raise FamilyParameterError(f"needs a even and b odd, got a={a}, b={b}")
    if a < g + 1 or b < g + 1:
        raise FamilyParameterError(f"needs a, b >= g+1 = {g + 1}, got a={a}, b={b}")
    if a + b != n - k:
        raise FamilyParameterError(f"needs a+b = n-k, got {a}+{b} != {n - k}")
    edges = [(0, leaf) for leaf in range(1, k)]
    edges += circulant_regular(a, g, offset_base=k)
    edges += [(u + k + a, w + k + a) for u, w in _near_regular_block(b, g, 0)]
    edges += [(0, k), (0, k + a)]
    return Graph(n, edges)


def gkn(n: int, k: int, g: int) -> Graph:
    """Clique chain K_{n-k-g} -- K_{k-1} -- K_{g+1} with complete joins to
    the middle clique.

    Labeling: big clique 0..n-k-g-1, middle clique next, small clique
    K_{g+1} last. The minimum g-good-neighbor cut is the middle clique.
    """
    if k < 2:
        raise FamilyParameterError(f"needs k >= 2, got k={k}")
    if g < 1:
        raise FamilyParameterError(f"needs g >= 1, got g={g}")
    if 2 * g > n - k - 2:
        raise FamilyParameterError(f"needs g <= (n-k-2)/2, got g={g}, n-k={n - k}")
    if n - k - g < g + 1:
        raise FamilyParameterError(f"needs n-k-g >= g+1, got {n - k - g} < {g + 1}")
    big = list(range(n - k - g))
    mid = list(range(n - k - g, n - g - 1))
    small = list(range(n - g - 1, n))
    edges = _clique_edges(big) + _clique_edges(mid) + _clique_edges(small)
    edges += _join_edges(big, mid) + _join_edges(small, mid)
    return Graph(n, edges)


def h_examples(which: int, n: int, g: int) -> Graph:
    """The four small-connectivity example graphs.

    h1: cliques K_{g+1} (labels 0..g) and K_{n-g-3} (g+1..n-3) plus u=n-2
    and v=n-1 each joined completely to both cliques. h2: same cliques plus
    edges uv, v-0, u-(g+1). h3: same cliques plus uv, v-(g+1), v-0.
    h4: cliques K_{g+1} (0..g) and K_{n-g-1} (g+1..n-1) plus edges from
    v=0 to g+1 and g+2.
    """
    if which not in (1, 2, 3, 4):
        raise FamilyParameterError(f"which must be 1..4, got {which}")
    if g < 1:
        raise FamilyParameterError(f"needs g >= 1, got g={g}")
    if n < 2 * g + 4:
        raise FamilyParameterError(f"needs n >= 2g+4 = {2 * g + 4}, got n={n}")
    if which == 4:
        small = list(range(g + 1))
        big = list(range(g + 1, n))
        edges = _clique_edges(small) + _clique_edges(big)
        edges += [(0, g + 1), (0, g + 2)]
        return Graph(n, edges)
    small = list(range(g + 1))
    big = list(range(g + 1, n - 2))
    u, v = n - 2, n - 1
    edges = _clique_edges(small) + _clique_edges(big)
    if which == 1:
        edges += _join_edges(small + big, [u])
        edges += _join_edges(small + big, [v])
    elif which == 2:
        edges += [(u, v), (v, 0), (u, g + 1)]
    else:
        edges += [(u, v), (v, g + 1), (v, 0)]
    return Graph(n, edges)


def remark_pair(g: int) -> tuple[Graph, Graph]:
    """Spanning pair (G, H) witnessing that g-good-neighbor connectivity is
    not monotone under spanning subgraphs for g >= 1.

    Blocks X1, X2, Y1, Y2 are cliques of order g+1 at consecutive offsets,
    then u, v, w. In G, u joins all four blocks and v, w join the Y blocks,
    plus edges uv and uw. H keeps the Y blocks, drops one edge inside each X
    block (leaving minimum degree g-1), joins u to the X blocks and to Y2
    only, and drops uv, uw. H spans G with values 1 vs 2.
    """
    if g < 1:
        raise FamilyParameterError(f"needs g >= 1 (reduced blocks need degree g-1 >= 0), got g={g}")
    s = g + 1
    x1 = list(range(0, s))
    x2 = list(range(s, 2 * s))
    y1 = list(range(2 * s, 3 * s))
    y2 = list(range(3 * s, 4 * s))
    u, v, w = 4 * s, 4 * s + 1, 4 * s + 2
    n = 4 * s + 3

    g_edges = _clique_edges(x1) + _clique_edges(x2) + _clique_edges(y1) + _clique_edges(y2)
    g_edges += _join_edges(x1 + x2 + y1 + y2, [u])
    g_edges += _join_edges(y1 + y2, [v]) + _join_edges(y1 + y2, [w])
    g_edges += [(u, v), (u, w)]
    big = Graph(n, g_edges)

    def clique_minus_one(block: list[int]) -> list[tuple[int, int]]:
        return [e for e in _clique_edges(block) if e != (block[0], block[1])]

    h_edges = clique_minus_one(x1) + clique_minus_one(x2)
    h_edges += _clique_edges(y1) + _clique_edges(y2)
    h_edges += _join_edges(x1 + x2 + y2, [u])
    h_edges += _join_edges(y1 + y2, [v]) + _join_edges(y1 + y2, [w])
    sub = Graph(n, h_edges)
    return big, sub


@dataclass(frozen=True)
class FamilyInstance:
    """A generated graph bundled with its expected connectivity record.

    gnc_expected maps g to the expected good-neighbor connectivity, with
    None meaning "no cut exists". kappa_expected is asserted only when
    assert_kappa is set. certificate_hint, when present, is one valid
    minimum cut (not necessarily the solver's canonical one).
    """

    family: str
    label: str
    params: dict
    graph: Graph
    gnc_expected: dict[int, int | None]
    kappa_expected: int | None = None
    assert_kappa: bool = False
    certificate_hint: tuple[int, ...] | None = None

    def expected_json(self) -> dict:
        return {
            "family": self.family,
            "label": self.label,
            "params": dict(self.params),
            "n": self.graph.n,
            "gncExpected": {str(g): v for g, v in sorted(self.gnc_expected.items())},
            "kappaExpected": self.kappa_expected if self.assert_kappa else None,
            "certificateHint": list(self.certificate_hint) if self.certificate_hint else None,
        }


def instantiate(family: str, **params) -> list[FamilyInstance]:
    """Build a family instance list (one graph, or two for remark-pair)."""
    builder = _INSTANTIATORS.get(family)
    if builder is None:
        raise FamilyParameterError(
            f"unknown family {family!r}; known: {', '.join(sorted(_INSTANTIATORS))}"
        )
    return builder(**params)


def _inst_path(n: int) -> list[FamilyInstance]:
    expected: dict[int, int | None] = {0: 1 if n >= 3 else None, 1: 1 if n >= 5 else None, 2: None}
    return [FamilyInstance("path", "", {"n": n}, path(n), expected,
                           certificate_hint=((n + 1) // 2 - 1,) if n >= 3 else None)]


def _inst_cycle(n: int) -> list[FamilyInstance]:
    expected: dict[int, int | None] = {0: 2 if n >= 4 else None, 1: 2 if n >= 6 else None, 2: None}
    return [FamilyInstance("cycle", "", {"n": n}, cycle(n), expected)]


def _inst_star(n: int) -> list[FamilyInstance]:
    expected: dict[int, int | None] = {0: 1 if n >= 3 else None, 1: None}
    return [FamilyInstance("star", "", {"n": n}, star(n), expected,
                           certificate_hint=(0,) if n >= 3 else None)]


def _inst_wheel(n: int) -> list[FamilyInstance]:
    expected: dict[int, int | None] = {0: 3, 1: 3} if n >= 7 else {}
    if n >= 7:
        expected[2] = None
    return [FamilyInstance("wheel", "", {"n": n}, wheel(n), expected,
                           kappa_expected=3 if n >= 6 else None, assert_kappa=n >= 6,
                           certificate_hint=(0, 1, 1 + (n - 1) // 2) if n >= 7 else None)]


def _inst_complete(n: int) -> list[FamilyInstance]:
    return [FamilyInstance("complete", "", {"n": n}, complete(n), {0: None, 1: None})]


def _inst_complete_bipartite(a: int, b: int) -> list[FamilyInstance]:
    expected: dict[int, int | None] = {}
    if a >= b >= 2:
        expected = {0: b, 1: None, 2: None}
    G = complete_bipartite(a, b)
    hint = tuple(range(a, a + b)) if a >= b >= 2 else None
    return [FamilyInstance("complete-bipartite", "", {"a": a, "b": b}, G, expected,
                           certificate_hint=hint)]


def _inst_complete_multipartite(parts: Sequence[int]) -> list[FamilyInstance]:
    parts = tuple(parts)
    G = complete_multipartite(*parts)
    expected: dict[int, int | None] = {}
    if len(parts) >= 3 and max(parts) >= 2:
        expected = {0: G.n - max(parts), 1: None}
    return [FamilyInstance("complete-multipartite", "", {"parts": list(parts)}, G, expected)]


def _inst_tn_star(n: int, t: int, parts: Sequence[int]) -> list[FamilyInstance]:
    G = tn_star(n, t, parts)
    return [FamilyInstance("tn-star", "", {"n": n, "t": t, "parts": list(parts)}, G,
                           {1: n - t}, certificate_hint=tuple(range(n - t)))]


def _inst_tn_prime(n: int, k: int, a: int, b: int) -> list[FamilyInstance]:
    G = tn_prime(n, k, a, b)
    return [FamilyInstance("tn-prime", "", {"n": n, "k": k, "a": a, "b": b}, G,
                           {1: k}, certificate_hint=tuple(range(k)))]


def _inst_fkn(n: int, k: int, g: int, f1_order: int) -> list[FamilyInstance]:
    G = fkn(n, k, g, f1_order)
    return [FamilyInstance("fkn", "", {"n": n, "k": k, "g": g, "f1_order": f1_order}, G,
                           {g: k}, certificate_hint=tuple(range(k)))]


def _inst_hkn(n: int, k: int, g: int, a: int, b: int) -> list[FamilyInstance]:
    G = hkn(n, k, g, a, b)
    return [FamilyInstance("hkn", "", {"n": n, "k": k, "g": g, "a": a, "b": b}, G,
                           {g: k}, certificate_hint=tuple(range(k)))]


def _inst_gkn(n: int, k: int, g: int) -> list[FamilyInstance]:
    G = gkn(n, k, g)
    hint = tuple(range(n - k - g, n - g - 1))
    return [FamilyInstance("gkn", "", {"n": n, "k": k, "g": g}, G, {g: k - 1},
                           certificate_hint=hint)]


def _inst_h(which: int):
    def build(n: int, g: int) -> list[FamilyInstance]:
        G = h_examples(which, n, g)
        kappa = 2 if which == 1 else 1
        return [FamilyInstance(f"h{which}", "", {"n": n, "g": g}, G, {g: 2},
                               kappa_expected=kappa, assert_kappa=True)]
    return build


def _inst_remark_pair(g: int) -> list[FamilyInstance]:
    big, sub = remark_pair(g)
    return [
        FamilyInstance("remark-pair", "G", {"g": g}, big, {g: 1}),
        FamilyInstance("remark-pair", "H", {"g": g}, sub, {g: 2}),
    ]


_INSTANTIATORS = {
    "path": _inst_path,
    "cycle": _inst_cycle,
    "star": _inst_star,
    "wheel": _inst_wheel,
    "complete": _inst_complete,
    "complete-bipartite": _inst_complete_bipartite,
    "complete-multipartite": _inst_complete_multipartite,
    "tn-star": _inst_tn_star,
    "tn-prime": _inst_tn_prime,
    "fkn": _inst_fkn,
    "hkn": _inst_hkn,
    "gkn": _inst_gkn,
    "h1": _inst_h(1),
    "h2": _inst_h(2),
    "h3": _inst_h(3),
    "h4": _inst_h(4),
    "remark-pair": _inst_remark_pair,
}

FAMILY_TAGS = tuple(sorted(_INSTANTIATORS))

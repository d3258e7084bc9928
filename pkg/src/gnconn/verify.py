"""Exhaustive verification suites driving every module's invariants.

Each suite walks a finite universe (isomorphism classes, trees, family
grids, parameter windows) and returns a SuiteReport whose JSON form is
deterministic: identical inputs produce byte-identical reports no matter
how many worker processes are used.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .characterize import has_kappa1, has_kappa2, recognize_tn_star, tree_kappa_predict
from .codec import emit_graph6
from .enumeration import connected_graph_classes, enumerate_trees
from .extremal import f_search, formula_values, g_search, s_search
from .families import FamilyInstance, instantiate
from .graph import Graph, kappa_classical
from .solver import g_range, is_gnc_cut, kappa_extra, kappa_gnc, kappa_gnc_oracle


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "maxN": self.max_n,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


def _pool_map(worker: Callable, payloads: Sequence, threads: int) -> list:
    if threads > 1 and len(payloads) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            return pool.map(worker, payloads, chunksize=8)
    return [worker(p) for p in payloads]


def _gather(report: SuiteReport, results: Iterable[tuple[int, list[dict], list[str]]]) -> None:
    for checked, failures, notes in results:
        report.checked += checked
        report.failures.extend(failures)
        report.notes.extend(notes)


def _class_payloads(max_n: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for n in range(1, max_n + 1):
        out.extend((n, G.rows) for G in connected_graph_classes(n))
    return out


# --- kappa1 / kappa2 checker equivalence -------------------------------------


def _kappa1_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    G = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    gmax = g_range(G)[1]
    for g in range(0, gmax + 1):
        checked += 1
        witness = has_kappa1(G, g)
        value = kappa_gnc(G, g).value
        if (witness is not None) != (value == 1):
            failures.append({
                "graph6": emit_graph6(G), "g": g, "check": "kappa1-equivalence",
                "witness": witness, "solverValue": value,
            })
        elif witness is not None and not is_gnc_cut(G, (witness,), g):
            failures.append({
                "graph6": emit_graph6(G), "g": g, "check": "kappa1-witness-valid",
                "witness": witness,
            })
    return checked, failures, notes


def _kappa2_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    G = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    gmax = g_range(G)[1]
    for g in range(0, gmax + 1):
        checked += 1
        witness = has_kappa2(G, g)
        value = kappa_gnc(G, g).value
        if (witness is not None) != (value == 2):
            failures.append({
                "graph6": emit_graph6(G), "g": g, "check": "kappa2-equivalence",
                "witness": witness.branch if witness else None, "solverValue": value,
            })
        elif witness is not None:
            pair = witness.vertices
            if len(pair) != 2 or not is_gnc_cut(G, pair, g):
                failures.append({
                    "graph6": emit_graph6(G), "g": g, "check": "kappa2-witness-valid",
                    "branch": witness.branch, "witness": list(pair),
                })
    return checked, failures, notes


def suite_kappa1(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("kappa1", max_n)
    _gather(report, _pool_map(_kappa1_worker, _class_payloads(max_n), threads))
    return report


def suite_kappa2(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("kappa2", max_n)
    _gather(report, _pool_map(_kappa2_worker, _class_payloads(max_n), threads))
    return report


# --- trees --------------------------------------------------------------------


def _tree_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    T = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    g6 = emit_graph6(T)

    checked += 1
    v0 = kappa_gnc(T, 0).value
    if v0 != (1 if n >= 3 else None) or tree_kappa_predict(T, 0) != v0:
        failures.append({"graph6": g6, "g": 0, "check": "tree-g0", "solverValue": v0})

    checked += 1
    v1 = kappa_gnc(T, 1).value
    shape = recognize_tn_star(T)
    t_rec = shape.t if shape is not None and 4 <= shape.t and 2 * shape.t <= n + 2 else None
    t_sol = n - v1 if v1 is not None and 4 <= n - v1 and 2 * (n - v1) <= n + 2 else None
    if t_rec != t_sol:
        failures.append({
            "graph6": g6, "g": 1, "check": "tree-structure-iff",
            "recognizedT": t_rec, "solverT": t_sol, "solverValue": v1,
        })
    if tree_kappa_predict(T, 1) != v1:
        failures.append({"graph6": g6, "g": 1, "check": "tree-predict", "solverValue": v1})

    gmax = g_range(T)[1]
    for g in range(2, gmax + 1):
        checked += 1
        res = kappa_gnc(T, g)
        if res.exists or tree_kappa_predict(T, g) is not None:
            failures.append({"graph6": g6, "g": g, "check": "tree-no-cut-beyond-1",
                             "solverValue": res.value})
    return checked, failures, notes


def suite_trees(max_n: int = 8, threads: int = 1) -> SuiteReport:
    report = SuiteReport("trees", max_n)
    payloads = []
    for n in range(2, max_n + 1):
        payloads.extend((n, T.rows) for T in enumerate_trees(n, threads=threads))
    _gather(report, _pool_map(_tree_worker, payloads, threads))
    return report


# --- families -----------------------------------------------------------------


def _partitions(total: int, min_part: int, max_parts: int | None = None):
    """Non-decreasing partitions of `total` into parts >= min_part."""

    def rec(remaining: int, smallest: int, acc: tuple[int, ...]):
        if remaining == 0:
            if len(acc) > 0:
                yield acc
            return
        if max_parts is not None and len(acc) >= max_parts:
            return
        for part in range(smallest, remaining + 1):
            if remaining - part != 0 and remaining - part < part:
                continue
            yield from rec(remaining - part, part, acc + (part,))

    yield from rec(total, min_part, ())


def standard_grid(max_n: int = 14) -> list[FamilyInstance]:
    """The family instances exercised by the families suite, capped by order."""
    instances: list[FamilyInstance] = []

    def add(family: str, **params) -> None:
        for inst in instantiate(family, **params):
            if inst.graph.n <= max_n:
                instances.append(inst)

    for n in range(2, min(10, max_n) + 1):
        add("path", n=n)
    for n in range(3, min(10, max_n) + 1):
        add("cycle", n=n)
    for n in range(3, min(8, max_n) + 1):
        add("star", n=n)
    for n in range(2, min(6, max_n) + 1):
        add("complete", n=n)
    for n in range(6, min(10, max_n) + 1):
        add("wheel", n=n)
    for a in range(2, 7):
        for b in range(2, a + 1):
            if a + b <= max_n:
                add("complete-bipartite", a=a, b=b)
    for n in range(3, min(8, max_n) + 1):
        for parts in _partitions(n, 1):
            if len(parts) >= 3 and max(parts) >= 2:
                add("complete-multipartite", parts=list(parts))
    for n in range(6, max_n + 1):
        for t in range(4, (n + 2) // 2 + 1):
            for parts in _partitions(t, 2):
                if len(parts) >= 2:
                    add("tn-star", n=n, t=t, parts=list(parts))
    for k in range(1, 6):
        for a in range(2, 7):
            for b in range(a, 7):
                n = k + a + b
                if n <= max_n and n >= k + 4:
                    add("tn-prime", n=n, k=k, a=a, b=b)
    for n in range(8, max_n + 1):
        for k in range(1, 5):
            for g in range(2, 6):
                rest = n - k
                if 2 * g > rest - 2 or (rest * g) % 2:
                    continue
                for f1 in range(g + 1, rest - g):
                    if (f1 * g) % 2 or ((rest - f1) * g) % 2:
                        continue
                    add("fkn", n=n, k=k, g=g, f1_order=f1)
    for n in range(9, max_n + 1):
        for k in range(1, 5):
            for g in (3, 5):
                rest = n - k
                if 2 * g > rest - 2 or (rest * g) % 2 == 0:
                    continue
                for a in range(g + 1, rest):
                    b = rest - a
                    if a % 2 == 0 and b % 2 == 1 and b >= g + 1:
                        add("hkn", n=n, k=k, g=g, a=a, b=b)
    for n in range(6, max_n + 1):
        for k in range(2, 7):
            for g in range(1, 4):
                if 2 * g <= n - k - 2 and n - k - g >= g + 1:
                    add("gkn", n=n, k=k, g=g)
    for which in (1, 2, 3, 4):
        for n in (8, 10):
            for g in (1, 2):
                if n >= 2 * g + 4 and n <= max_n:
                    add(f"h{which}", n=n, g=g)
    g_cap = (max_n - 7) // 4
    for g in range(1, g_cap + 1):
        add("remark-pair", g=g)
    return instances


def _family_worker(payload: dict):
    checked, failures, notes = 0, [], []
    inst = FamilyInstance(
        family=payload["family"], label=payload["label"], params=payload["params"],
        graph=Graph.from_rows(payload["n"], payload["rows"]),
        gnc_expected={int(k): v for k, v in payload["gnc"].items()},
        kappa_expected=payload["kappa"], assert_kappa=payload["assertKappa"],
        certificate_hint=tuple(payload["hint"]) if payload["hint"] is not None else None,
    )
    G = inst.graph
    ident = {"family": inst.family, "label": inst.label, "params": inst.params}
    if inst.assert_kappa:
        checked += 1
        got = kappa_classical(G)
        if got != inst.kappa_expected:
            failures.append({**ident, "check": "kappa-classical",
                             "expected": inst.kappa_expected, "got": got})
    for g, expected in sorted(inst.gnc_expected.items()):
        checked += 1
        got = kappa_gnc(G, g).value
        if got != expected:
            failures.append({**ident, "check": "gnc-value", "g": g,
                             "expected": expected, "got": got})
        elif expected is not None and inst.certificate_hint is not None:
            if len(inst.certificate_hint) != expected or not is_gnc_cut(G, inst.certificate_hint, g):
                failures.append({**ident, "check": "certificate-hint", "g": g,
                                 "hint": list(inst.certificate_hint)})
    return checked, failures, notes


def suite_families(max_n: int = 14, threads: int = 1) -> SuiteReport:
    report = SuiteReport("families", max_n)
    payloads = [{
        "family": inst.family, "label": inst.label, "params": inst.params,
        "n": inst.graph.n, "rows": inst.graph.rows,
        "gnc": {str(g): v for g, v in inst.gnc_expected.items()},
        "kappa": inst.kappa_expected, "assertKappa": inst.assert_kappa,
        "hint": list(inst.certificate_hint) if inst.certificate_hint is not None else None,
    } for inst in standard_grid(max_n)]
    _gather(report, _pool_map(_family_worker, payloads, threads))
    return report


# --- bounds / monotonicity / relations ----------------------------------------


def _bounds_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    G = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    g6 = emit_graph6(G)
    kappa = kappa_classical(G)
    gmax = g_range(G)[1]
    max_pairs = n * (n - 1) // 2
    for g in range(0, gmax + 1):
        checked += 1
        res = kappa_gnc(G, g)
        if not res.exists:
            continue
        k = res.value
        if kappa is not None and not (kappa <= k):
            failures.append({"graph6": g6, "g": g, "check": "lower-bound-kappa",
                             "kappa": kappa, "value": k})
        if not (1 <= k <= n - 2 * g - 2):
            failures.append({"graph6": g6, "g": g, "check": "window", "value": k})
        if G.edge_count > max_pairs - (g + 1) ** 2:
            failures.append({"graph6": g6, "g": g, "check": "edge-bound",
                             "edges": G.edge_count})
        if not is_gnc_cut(G, res.certificate, g):
            failures.append({"graph6": g6, "g": g, "check": "certificate-valid",
                             "certificate": list(res.certificate)})
    return checked, failures, notes


def _monotone_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    G = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    gmax = g_range(G)[1]
    for g in range(0, gmax):
        checked += 1
        hi = kappa_gnc(G, g + 1)
        if not hi.exists:
            continue
        lo = kappa_gnc(G, g)
        if not lo.exists or lo.value > hi.value:
            failures.append({
                "graph6": emit_graph6(G), "g": g, "check": "monotone-in-g",
                "valueAtG": lo.value, "valueAtGPlus1": hi.value,
            })
    return checked, failures, notes


def _relations_worker(payload: tuple[int, tuple[int, ...]]):
    n, rows = payload
    G = Graph.from_rows(n, rows)
    checked, failures, notes = 0, [], []
    g6 = emit_graph6(G)
    kappa = kappa_classical(G)
    gmax = g_range(G)[1]

    checked += 1
    res0 = kappa_gnc(G, 0)
    if kappa is None:
        if res0.exists:
            failures.append({"graph6": g6, "check": "complete-no-cut", "value": res0.value})
    elif res0.value != kappa:
        failures.append({"graph6": g6, "check": "g0-equals-kappa",
                         "kappa": kappa, "value": res0.value})

    for g in range(0, gmax + 1):
        checked += 1
        gnc = kappa_gnc(G, g)
        extra = kappa_extra(G, g)
        if gnc.exists and extra.exists and extra.value > gnc.value:
            failures.append({"graph6": g6, "g": g, "check": "extra-below-gnc",
                             "extra": extra.value, "gnc": gnc.value})
        if g == 1 and gnc.exists and extra.exists and extra.value != gnc.value:
            notes.append(f"divergence at g=1 for {g6}: extra={extra.value} gnc={gnc.value}")

    for g in range(0, gmax + 2):
        checked += 1
        fast = kappa_gnc(G, g)
        slow = kappa_gnc_oracle(G, g)
        if fast.value != slow.value:
            failures.append({"graph6": g6, "g": g, "check": "oracle-equivalence",
                             "fast": fast.value, "oracle": slow.value})
        elif fast.exists:
            if fast.certificate != slow.certificate:
                failures.append({"graph6": g6, "g": g, "check": "oracle-certificate-order",
                                 "fast": list(fast.certificate),
                                 "oracle": list(slow.certificate)})
            if not is_gnc_cut(G, fast.certificate, g) or not is_gnc_cut(G, slow.certificate, g):
                failures.append({"graph6": g6, "g": g, "check": "oracle-certificates-valid"})
    return checked, failures, notes


def suite_bounds(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("bounds", max_n)
    _gather(report, _pool_map(_bounds_worker, _class_payloads(max_n), threads))
    return report


def suite_monotone(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("monotone", max_n)
    _gather(report, _pool_map(_monotone_worker, _class_payloads(max_n), threads))
    return report


def suite_relations(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("relations", max_n)
    _gather(report, _pool_map(_relations_worker, _class_payloads(max_n), threads))
    return report


# --- extremal formulas ----------------------------------------------------------


def suite_extremal_formulas(max_n: int = 6, threads: int = 1) -> SuiteReport:
    report = SuiteReport("extremal-formulas", max_n)
    for n in range(5, max_n + 1):
        for g in range(1, (n - 3) // 2 + 1):
            for k in range(1, n - 2 * g - 1):
                if 2 * g > n - k - 2:
                    continue
                fv = formula_values(n, k, g)
                if fv.s is not None:
                    report.checked += 1
                    rep = s_search(n, k, g, threads=threads)
                    if rep.searched_value != fv.s:
                        report.failures.append({
                            "fn": "s", "n": n, "k": k, "g": g,
                            "searched": rep.searched_value, "formula": fv.s,
                        })
                elif fv.s_note.startswith("non-integral"):
                    rep = s_search(n, k, g, threads=threads)
                    report.notes.append(
                        f"s({n},{k}) at g={g}: formula non-integral, searched "
                        f"{rep.searched_value}"
                    )
                if fv.f is not None:
                    report.checked += 1
                    rep = f_search(n, k, g, threads=threads)
                    if rep.searched_value != fv.f:
                        report.failures.append({
                            "fn": "f", "n": n, "k": k, "g": g,
                            "searched": rep.searched_value, "formula": fv.f,
                        })
                if fv.g is not None:
                    report.checked += 1
                    rep = g_search(n, k, g, threads=threads)
                    s_next = s_search(n, k + 1, g, threads=threads)
                    identity = None if s_next.searched_value is None else s_next.searched_value - 1
                    if rep.searched_value != fv.g or rep.searched_value != identity:
                        report.failures.append({
                            "fn": "g", "n": n, "k": k, "g": g,
                            "searched": rep.searched_value, "formula": fv.g,
                            "identity": identity,
                        })
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "kappa1": suite_kappa1,
    "kappa2": suite_kappa2,
    "trees": suite_trees,
    "families": suite_families,
    "bounds": suite_bounds,
    "monotone": suite_monotone,
    "relations": suite_relations,
    "extremal-formulas": suite_extremal_formulas,
}

_DEFAULT_MAX_N = {
    "kappa1": 6, "kappa2": 6, "trees": 8, "families": 14,
    "bounds": 6, "monotone": 6, "relations": 6, "extremal-formulas": 6,
}


def run_suite(name: str, max_n: int | None = None, threads: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}, all")
    return SUITES[name](max_n if max_n is not None else _DEFAULT_MAX_N[name], threads=threads)


def run_all(max_n: int | None = None, threads: int = 1) -> list[SuiteReport]:
    return [run_suite(name, max_n=max_n, threads=threads) for name in SUITES]

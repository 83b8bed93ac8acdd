"""Instance-level theorem checks and the exhaustive corpus suite."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import (
    HomologyProfile,
    alexander_dual,
    boundary_squares_to_zero,
    reduced_betti,
    reduced_euler_characteristic,
)
from .corpus import anchor_orders, corpus, cycle_graph, edge_permutations, vertex_subsets
from .graph import Graph, bits, mask_of
from .morse import (
    CriticalCensus,
    Matching,
    MatchingAnomaly,
    StepTrace,
    critical_cells,
    extend_matching,
    grinberg_matching,
    is_acyclic,
    is_valid_matching,
)
from .nucleus import (
    MAX_SUBSET_VERTICES,
    a_complex,
    elser_number,
    elser_via_euler,
    enumerate_nuclei,
    nucleus_complex,
)
from .observations import (
    difference_membership_violations,
    first_step_violations,
    minimal_edge_violations,
    spanning_tree_violations,
)

CHECKS = (
    "identity", "signs", "duality", "dual_betti", "chain", "concentration",
    "phi0", "phi_valid", "phi_acyclic", "phi_anomaly", "phi_dimension",
    "morse_equality", "layer_acyclic", "membership_law", "first_step_law",
    "minimal_edge_law", "spanning_tree_law", "counterexample",
)


@dataclass
class TheoremReport:
    u: tuple[int, ...]
    case: str
    degree: int
    betti: HomologyProfile
    passed: bool | None
    counterexample: bool = False

    def to_json(self) -> dict:
        out = {
            "u": list(self.u),
            "case": self.case,
            "degree": self.degree,
            "betti": self.betti.to_json(),
            "nonzero": {str(k): b for k, b in self.betti.nonzero().items()},
            "passed": self.passed,
        }
        if self.counterexample:
            out["flag"] = "conjecture case (i) counterexample"
        return out


def verify_theorem(g: Graph, u: Iterable[int]) -> TheoremReport:
    """Check where the reduced homology of Δ^G_U lives.

    |u| = 1: everything vanishes.  |u| > 1: only degree |E|-|V| may be
    nonzero.  u = ∅ is report-only; it is flagged when homology appears
    outside degree |E|-|V|-1.
    """
    u = tuple(sorted(set(u)))
    betti = reduced_betti(nucleus_complex(g, u))
    degree = g.m - g.n
    nonzero = betti.nonzero()
    if not u:
        flagged = any(k != degree - 1 for k in nonzero)
        return TheoremReport(u, "report-only", degree - 1, betti, None, flagged)
    if len(u) == 1:
        return TheoremReport(u, "point", degree, betti, not nonzero)
    return TheoremReport(u, "concentrated", degree, betti, all(k == degree for k in nonzero))


@dataclass
class MorseReport:
    n: int
    u: tuple[int, ...]
    matching: Matching
    trace: StepTrace
    valid: bool
    acyclic: bool
    census: CriticalCensus
    betti: HomologyProfile

    @property
    def dimension_ok(self) -> bool:
        allowed = {self.n - 3} if len(self.u) > 1 else set()
        return self.census.dimensions() <= allowed

    @property
    def morse_equality(self) -> bool:
        return self.census.count() == self.betti[self.n - 3]

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "pairs": self.matching.to_json(),
            "valid": self.valid,
            "acyclic": self.acyclic,
            "critical": self.census.to_json(),
            "critical_count": self.census.count(),
            "critical_dimension_ok": self.dimension_ok,
            "betti_of_a": self.betti.to_json(),
            "morse_equality": self.morse_equality,
            "blocked": self.trace.blocked_count(),
            "trace": self.trace.to_json(),
        }


def morse_report(g: Graph, u: Sequence[int], strict: bool = False) -> MorseReport:
    matching, trace = extend_matching(g, u, strict=strict)
    dom = matching.domain
    return MorseReport(g.n, tuple(u), matching, trace, is_valid_matching(dom, matching),
                       is_acyclic(dom, matching), critical_cells(dom, matching), reduced_betti(dom))


# -- corpus suite -------------------------------------------------------------------

def _witness(g: Graph, u, detail=None) -> dict:
    out = {"graph": str(g), "n": g.n, "u": list(u) if u is not None else None}
    if detail is not None:
        out["detail"] = detail
    return out


@dataclass
class Tally:
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)
    notes: Counter = field(default_factory=Counter)
    rows: list | None = None

    def record(self, check: str, ok: bool, g: Graph, u=None, detail=None):
        if ok:
            self.passed[check] += 1
        else:
            self.failed[check] += 1
            self.witnesses.setdefault(check, _witness(g, u, detail))
        if self.rows is not None:
            label = "-" if u is None else ",".join(map(str, u))
            self.rows.append((str(g), label, check, "pass" if ok else "fail"))

    def merge(self, other: "Tally"):
        self.passed.update(other.passed)
        self.failed.update(other.failed)
        self.notes.update(other.notes)
        for k, w in other.witnesses.items():
            self.witnesses.setdefault(k, w)
        if self.rows is not None and other.rows is not None:
            self.rows.extend(other.rows)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def to_json(self) -> dict:
        names = [c for c in CHECKS if c in self.passed or c in self.failed]
        return {
            "ok": self.ok,
            "checks": {c: {"passed": self.passed[c], "failed": self.failed[c]} for c in names},
            "notes": dict(sorted(self.notes.items())),
            "first_failures": {c: self.witnesses[c] for c in names if c in self.witnesses},
        }


def _check_complexes(g: Graph, tally: Tally):
    degree = g.m - g.n
    for u in vertex_subsets(g):
        delta = nucleus_complex(g, u)
        a = a_complex(g, u)
        dual = alexander_dual(delta)
        if u:
            tally.record("duality", dual == a, g, u)
        else:
            # A_∅ is void by definition; compare homology with the true dual instead
            tally.record("duality", a.is_void, g, u)
            if dual != a:
                tally.notes["empty_u_dual_not_void"] += 1
        bd = reduced_betti(delta)
        bdual = reduced_betti(dual if not u else a)
        tally.record("dual_betti", all(bd[i] == bdual[g.m - i - 3] for i in range(-1, g.m - 1)), g, u)
        built = [(delta, bd), (a, bdual if u else reduced_betti(a))]
        if not u:
            built.append((dual, bdual))
        for cx, b in built:
            tally.record("chain", boundary_squares_to_zero(cx)
                         and b.euler() == reduced_euler_characteristic(cx), g, u)
        nonzero = bd.nonzero()
        if not u:
            if any(k != degree - 1 for k in nonzero):
                tally.notes["conjecture_i_counterexamples"] += 1
        elif len(u) == 1:
            tally.record("concentration", not nonzero, g, u, {"betti": bd.to_json()})
        else:
            tally.record("concentration", all(k == degree for k in nonzero), g, u,
                         {"betti": bd.to_json()})


def _check_morse(g: Graph, tally: Tally, all_orders_up_to: int):
    for x in range(g.n):
        m0 = grinberg_matching(g, x)
        dom = m0.domain
        ok = (is_valid_matching(dom, m0) and is_acyclic(dom, m0)
              and critical_cells(dom, m0).count() == 0)
        tally.record("phi0", ok, g, (x,))
    betti_cache: dict[int, HomologyProfile] = {}
    for u in vertex_subsets(g, 2):
        umask = mask_of(u)
        if umask not in betti_cache:
            betti_cache[umask] = reduced_betti(a_complex(g, u))
        target = betti_cache[umask][g.n - 3]
        for order in anchor_orders(u, all_orders_up_to):
            try:
                matching, trace = extend_matching(g, order)
            except MatchingAnomaly as exc:
                tally.record("phi_anomaly", False, g, order, str(exc))
                continue
            tally.record("phi_anomaly", True, g, order)
            if trace.blocked_count():
                tally.notes["runs_with_blocked_selections"] += 1
            dom = matching.domain
            census = critical_cells(dom, matching)
            tally.record("phi_valid", is_valid_matching(dom, matching), g, order)
            tally.record("phi_acyclic", is_acyclic(dom, matching), g, order)
            crit = {str(d): [bits(f) for f in fs] for d, fs in census.by_dimension.items()}
            tally.record("phi_dimension", census.dimensions() <= {g.n - 3}, g, order, {"critical": crit})
            tally.record("morse_equality", census.count() == target, g, order,
                         {"critical": census.count(), "betti": target})
            layers_ok = all(
                is_acyclic(dom, Matching(dom, [p for p in matching.pairs if p.layer == t]))
                for t in range(1, len(order) + 1))
            tally.record("layer_acyclic", layers_ok, g, order)
            bad = minimal_edge_violations(g, order, matching)
            tally.record("minimal_edge_law", not bad, g, order, {"faces": [bits(f) for f in bad]})
            if len(order) == 2:
                x, y = order
                bad = first_step_violations(g, x, y, trace.layers[0])
                tally.record("first_step_law", not bad, g, order, {"faces": [bits(f) for f in bad]})
                crit_faces = [f for fs in census.by_dimension.values() for f in fs]
                bad = spanning_tree_violations(g, y, crit_faces)
                tally.record("spanning_tree_law", not bad, g, order, {"faces": [bits(f) for f in bad]})


def identity_tally(g: Graph, ks: Sequence[int] = range(5), tally: Tally | None = None) -> Tally:
    """Elser identity and sign laws for one graph."""
    tally = tally if tally is not None else Tally()
    if g.n > MAX_SUBSET_VERTICES:
        return tally
    values = {}
    for k in ks:
        values[k] = elser_number(g, k).value
        tally.record("identity", elser_via_euler(g, k) == values[k], g, None, {"k": k})
    signs_ok = all((v <= 0) if k == 0 else (v == 0) if k == 1 else (v >= 0)
                   for k, v in values.items())
    tally.record("signs", signs_ok, g, None, {"values": values})
    return tally


def complex_tally(g: Graph, tally: Tally | None = None) -> Tally:
    """Duality, chain sanity, concentration and the membership law for one graph."""
    tally = tally if tally is not None else Tally()
    _check_complexes(g, tally)
    for x in range(g.n):
        for y in range(g.n):
            if x != y:
                bad = difference_membership_violations(g, x, y)
                tally.record("membership_law", not bad, g, (x, y), {"faces": [bits(f) for f in bad]})
    return tally


def morse_tally(g: Graph, seed: int = 0, permutations: int = 3, all_orders_up_to: int = 3,
                tally: Tally | None = None) -> Tally:
    """Matching checks under the given edge order and ``permutations`` shuffled
    ones (seeded from ``seed`` and the graph)."""
    tally = tally if tally is not None else Tally()
    rng = random.Random(f"{seed}:{g}")
    for variant in [g] + edge_permutations(g, permutations, rng):
        _check_morse(variant, tally, all_orders_up_to)
    return tally


def check_graph(g: Graph, seed: int = 0, permutations: int = 3, ks: Sequence[int] = range(5),
                all_orders_up_to: int = 3, rows: bool = False) -> Tally:
    """Every per-graph check."""
    tally = Tally(rows=[] if rows else None)
    identity_tally(g, ks, tally)
    complex_tally(g, tally)
    morse_tally(g, seed, permutations, all_orders_up_to, tally)
    return tally


def counterexample_tally(ns: Iterable[int] = (3, 4, 5, 6)) -> Tally:
    """b̃_1(Δ^{C_n}_∅) = 1 and its faces are exactly the nucleus complements."""
    tally = Tally()
    for n in ns:
        g = cycle_graph(n)
        delta = nucleus_complex(g, ())
        census = sorted(g.full ^ nuc.edge_set for nuc in enumerate_nuclei(g))
        betti = reduced_betti(delta)
        ok = betti.nonzero() == {1: 1} and sorted(delta.faces) == census
        tally.record("counterexample", ok, g, (), {"betti": betti.to_json(), "f_vector": delta.f_vector()})
    return tally


def _check_graph_job(args) -> Tally:
    g, seed, permutations, rows = args
    return check_graph(g, seed=seed, permutations=permutations, rows=rows)


def verify_corpus(max_n: int, seed: int = 0, permutations: int = 3, jobs: int = 1,
                  rows: bool = False) -> Tally:
    """Run the whole suite on every labeled connected graph with 3..max_n vertices."""
    graphs = list(corpus(max_n))
    total = Tally(rows=[] if rows else None)
    work = [(g, seed, permutations, rows) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_check_graph_job, work, chunksize=8)
            for t in results:
                total.merge(t)
    else:
        for item in work:
            total.merge(_check_graph_job(item))
    total.merge(counterexample_tally())
    return total

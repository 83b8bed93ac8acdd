"""Checkers for the structural facts the layered matching is supposed to obey.

Each checker returns the list of violating faces (empty when the fact holds).
They recompute what they need with plain per-face graph searches rather than
the whole-power-set tables the constructions use.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graph import Graph, bits, is_vertex_cover, shade, vertices_of
from .morse import LayerTrace, Matching
from .nucleus import a_complex


def _find(parent: dict, a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _component_count(g: Graph, s: int) -> int:
    """Connected components of the edge-induced subgraph G_s (union-find)."""
    verts = bits(vertices_of(g, s))
    parent = {v: v for v in verts}
    count = len(verts)
    for i in bits(s):
        a, b = (_find(parent, w) for w in g.edges[i])
        if a != b:
            parent[a] = b
            count -= 1
    return count


def _on_cycle(g: Graph, s: int, e: int) -> bool:
    # removing e keeps its endpoints in V_s, so a bridge shows up as one more component
    rest = s & ~(1 << e)
    u, v = g.edges[e]
    before = _component_count(g, s)
    after = _component_count(g, rest) + sum(1 for w in (u, v) if not (g.incidence[w] & rest))
    return after == before


def _degree(g: Graph, s: int, v: int) -> int:
    return sum(1 for i in bits(s) if v in g.edges[i])


@lru_cache(maxsize=64)
def _face_facts(g: Graph) -> tuple[tuple[bool, int], ...]:
    """Per nonempty edge set: (connected and covering, V_σ); index 0 unused."""
    out = [(False, 0)]
    for s in range(1, g.full + 1):
        vs = vertices_of(g, s)
        out.append((_component_count(g, s) == 1 and is_vertex_cover(g, vs), vs))
    return tuple(out)


def difference_membership_violations(g: Graph, x: int, y: int) -> list[int]:
    """Faces where membership in A_y ∖ A_x disagrees with: G_σ connected,
    V_σ a vertex cover, x ∈ V_σ, y ∉ V_σ (σ ≠ ∅); ∅ only for a star centred at x."""
    ax = a_complex(g, [x]).faces
    ay = a_complex(g, [y]).faces
    facts = _face_facts(g)
    bad = []
    if 0 in ay and 0 not in ax and not all(x in e for e in g.edges):
        bad.append(0)
    for s in range(1, g.full + 1):
        inside = s in ay and s not in ax
        good, vs = facts[s]
        if inside != (good and bool(vs >> x & 1) and not vs >> y & 1):
            bad.append(s)
    return bad


def _step_two_case(g: Graph, tau: int, x: int, y: int) -> bool:
    """The listed ways a layer face survives step 1 unpaired."""
    e1 = 0
    if not tau & 1:
        return y in g.edges[e1]
    if _on_cycle(g, tau, e1):
        return False
    leaves = [w for w in g.edges[e1] if _degree(g, tau, w) == 1]
    if not leaves:
        return True  # bridge, not a leaf-edge
    if x in leaves:
        return True
    vs = vertices_of(g, tau)
    for z in range(g.n):
        if not vs >> z & 1 and any(w in g.neighbors(z) for w in leaves):
            return True
    return False


def first_step_violations(g: Graph, x: int, y: int, trace: LayerTrace) -> list[int]:
    """Compare C_1 of the (x, y) layer with the step-2 case list.

    Only the exceptional {e_1} / ∅ pair may satisfy the case list while
    being matched at step 1.
    """
    c1 = trace.unpaired_after(1)
    bad = []
    for tau in trace.faces:
        described = _step_two_case(g, tau, x, y)
        if tau in c1 and not described:
            bad.append(tau)
        elif described and tau not in c1 and tau not in (0, 1):
            bad.append(tau)
    return bad


def minimal_edge_violations(g: Graph, u: Sequence[int], matching: Matching) -> list[int]:
    """Upper faces of later-layer pairs whose removed edge is not the least
    edge keeping every earlier anchor's shade equal to E(G)."""
    bad = []
    for p in matching.pairs:
        if p.layer < 2:
            continue
        earlier = u[:p.layer - 1]

        def removable(e, high=p.high):
            rest = high & ~(1 << e)
            return all(shade(g, a, rest) == g.full for a in earlier)

        candidates = [e for e in bits(p.high) if removable(e)]
        if not candidates or candidates[0] != p.step - 1:
            bad.append(p.high)
    return bad


def _tree_path_edges(g: Graph, tree: int, a: int, b: int) -> list[int]:
    parent = {a: None}
    queue = [a]
    for v in queue:
        for i in bits(tree & g.incidence[v]):
            p, q = g.edges[i]
            w = q if p == v else p
            if w not in parent:
                parent[w] = (v, i)
                queue.append(w)
    path = []
    v = b
    while parent.get(v) is not None:
        v, i = parent[v]
        path.append(i)
    return path


def spanning_tree_violations(g: Graph, y: int, critical: Sequence[int]) -> list[int]:
    """Critical faces that are not spanning trees of G ∖ {y}, or that admit an
    outside edge e_j (missing y) whose fundamental cycle has e_j as its least edge."""
    others = g.all_vertices & ~(1 << y)
    bad = []
    for s in critical:
        if (vertices_of(g, s) != others or s.bit_count() != g.n - 2
                or _component_count(g, s) != 1):
            bad.append(s)
            continue
        for j in range(g.m):
            if s >> j & 1 or y in g.edges[j]:
                continue
            cycle = _tree_path_edges(g, s, *g.edges[j])
            if not cycle or min(cycle) > j:
                bad.append(s)
                break
    return bad

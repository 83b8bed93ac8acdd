"""Discrete vector fields on A_U.

Layer 1 is Grinberg's matching on A_{x_1}; each later anchor x_t adds a layer
on A_{x_t} ∖ A_{x_1..x_{t-1}}, matched edge by edge in the fixed edge order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .complex import SimplicialComplex
from .graph import (
    Graph,
    bits,
    is_bridge_in,
    leaf_endpoints_in,
    shade_is_full,
    shade_table,
    vertices_of,
)
from .nucleus import a_complex


class MatchingAnomaly(RuntimeError):
    """A step rule selected a face whose partner is missing or already matched."""

    def __init__(self, layer: int, step: int, face: int, partner: int, reason: str):
        super().__init__(
            f"layer {layer}, step {step}: face {bits(face)} -> {bits(partner)}: {reason}")
        self.layer = layer
        self.step = step
        self.face = face
        self.partner = partner
        self.reason = reason


class Pair(NamedTuple):
    low: int
    high: int
    layer: int
    step: int  # 1-based index of the edge in high ∖ low


@dataclass
class Matching:
    domain: SimplicialComplex
    pairs: list[Pair] = field(default_factory=list)

    def __len__(self):
        return len(self.pairs)

    @property
    def up(self) -> dict[int, int]:
        return {p.low: p.high for p in self.pairs}

    @property
    def down(self) -> dict[int, int]:
        return {p.high: p.low for p in self.pairs}

    def to_json(self) -> list[dict]:
        return [{"low": bits(p.low), "high": bits(p.high), "layer": p.layer, "step": p.step}
                for p in self.pairs]


class StepRecord(NamedTuple):
    step: int
    paired: tuple[tuple[int, int], ...]
    unpaired: frozenset
    # faces the rule selected whose partner was already matched earlier
    blocked: tuple[tuple[int, int], ...] = ()


@dataclass
class LayerTrace:
    layer: int
    anchor: int
    earlier: tuple[int, ...]
    faces: frozenset
    steps: list[StepRecord] = field(default_factory=list)

    def unpaired_after(self, i: int) -> frozenset:
        """C_i; C_0 is the whole layer."""
        return self.faces if i == 0 else self.steps[i - 1].unpaired

    def to_json(self) -> dict:
        return {
            "layer": self.layer,
            "anchor": self.anchor,
            "faces": sorted(bits(f) for f in self.faces),
            "steps": [{"step": s.step,
                       "paired": [[bits(a), bits(b)] for a, b in s.paired],
                       "unpaired": sorted(bits(f) for f in s.unpaired),
                       "blocked": [[bits(a), bits(b)] for a, b in s.blocked]} for s in self.steps],
        }


@dataclass
class StepTrace:
    layers: list[LayerTrace] = field(default_factory=list)

    def blocked_count(self) -> int:
        return sum(len(s.blocked) for layer in self.layers for s in layer.steps)

    def to_json(self) -> list[dict]:
        return [layer.to_json() for layer in self.layers]


def grinberg_matching(g: Graph, x: int) -> Matching:
    """Pair F with F △ {σ(F)}, σ(F) the least edge outside shade(x, F)."""
    member = ~shade_is_full(g, x)
    missing = g.full ^ shade_table(g, x)
    sigma = missing & -missing
    faces = np.arange(1 << g.m, dtype=np.int64)
    lows = np.flatnonzero(member & ((faces & sigma) == 0))
    pairs = [Pair(int(f), int(f | s), 1, int(s).bit_length())
             for f, s in zip(lows, sigma[lows])]
    return Matching(a_complex(g, [x]), pairs)


def step_rule_applies(g: Graph, tau: int, i: int, earlier_anchors: int) -> bool:
    """Whether the step-i rule pairs tau with tau ∖ {e_i} (e_i in tau assumed).

    e_i must lie on a cycle of G_tau, or be a leaf-edge none of whose leaf
    endpoints is an earlier anchor or a neighbour of a vertex outside V_tau.
    """
    if not is_bridge_in(g, tau, i):
        return True
    leaves = leaf_endpoints_in(g, tau, i)
    if not leaves or leaves & earlier_anchors:
        return False
    outside = g.all_vertices & ~vertices_of(g, tau)
    for z in bits(outside):
        if g.adjacency[z] & leaves:
            return False
    return True


def _match_layer(g: Graph, layer: int, anchors: Sequence[int], faces: frozenset,
                 keep_trace: bool, strict: bool) -> tuple[list[Pair], LayerTrace]:
    earlier = 0
    for a in anchors[:-1]:
        earlier |= 1 << a
    trace = LayerTrace(layer, anchors[-1], tuple(anchors[:-1]), faces)
    unpaired = set(faces)
    pairs = []
    all_blocked = []
    for i in range(g.m):
        bit = 1 << i
        chosen = []
        for tau in sorted(unpaired):
            if not tau & bit:
                continue
            if tau == bit and 0 in unpaired:
                chosen.append(tau)  # the exceptional {e_i} / ∅ pairing
            elif step_rule_applies(g, tau, i, earlier):
                chosen.append(tau)
        step_pairs = []
        blocked = []
        for tau in chosen:
            partner = tau ^ bit
            if partner not in faces:
                raise MatchingAnomaly(layer, i + 1, tau, partner, "partner outside the layer")
            if partner not in unpaired:
                if strict:
                    raise MatchingAnomaly(layer, i + 1, tau, partner, "partner already matched")
                blocked.append((partner, tau))
                continue
            unpaired.discard(tau)
            unpaired.discard(partner)
            pairs.append(Pair(partner, tau, layer, i + 1))
            step_pairs.append((partner, tau))
        if keep_trace:
            trace.steps.append(StepRecord(i + 1, tuple(step_pairs), frozenset(unpaired), tuple(blocked)))
        else:
            all_blocked.extend(blocked)
    if not keep_trace:
        trace.steps.append(StepRecord(g.m, (), frozenset(unpaired), tuple(all_blocked)))
    return pairs, trace


def layer_faces(g: Graph, anchors: Sequence[int]) -> frozenset:
    """A_{x_t} ∖ A_{x_1..x_{t-1}} for anchors x_1..x_t."""
    member = ~shade_is_full(g, anchors[-1])
    for a in anchors[:-1]:
        member &= shade_is_full(g, a)
    return frozenset(int(f) for f in np.flatnonzero(member))


def extend_matching(g: Graph, u: Sequence[int], keep_trace: bool = True,
                    strict: bool = False) -> tuple[Matching, StepTrace]:
    """Layered matching on A_U for the ordered anchors ``u``.

    At step i a face and its partner are both taken from the faces still
    unpaired before the step.  A selected face whose partner was matched at an
    earlier step stays unpaired and is logged as blocked; ``strict=True``
    raises MatchingAnomaly instead.  A partner outside the layer always
    raises.  With ``keep_trace=False`` only the final unpaired set of each
    layer is recorded.
    """
    u = list(u)
    if not u:
        raise ValueError("u must contain at least one vertex")
    if len(set(u)) != len(u):
        raise ValueError("u must not repeat vertices")
    for v in u:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    base = grinberg_matching(g, u[0])
    pairs = list(base.pairs)
    trace = StepTrace()
    for t in range(1, len(u)):
        faces = layer_faces(g, u[:t + 1])
        layer_pairs, layer_trace = _match_layer(g, t + 1, u[:t + 1], faces, keep_trace, strict)
        pairs.extend(layer_pairs)
        trace.layers.append(layer_trace)
    return Matching(a_complex(g, u), pairs), trace


# -- verification ---------------------------------------------------------------

def is_valid_matching(k: SimplicialComplex, m: Matching) -> bool:
    seen = set()
    faces = k.faces
    for p in m.pairs:
        diff = p.high ^ p.low
        if p.low & ~p.high or diff == 0 or diff & (diff - 1):
            return False
        if p.low not in faces or p.high not in faces:
            return False
        if p.low in seen or p.high in seen:
            return False
        seen.add(p.low)
        seen.add(p.high)
    return True


def _has_cycle(succ: dict[int, list[int]]) -> bool:
    """Iterative three-colour DFS."""
    state: dict[int, int] = {}
    for root in succ:
        if root in state:
            continue
        state[root] = 1
        stack = [(root, iter(succ[root]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
                continue
            s = state.get(nxt, 0)
            if s == 1:
                return True
            if s == 0:
                state[nxt] = 1
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return False


def is_acyclic(k: SimplicialComplex, m: Matching) -> bool:
    """No closed V-path.

    Every closed V-path alternates between matched lower faces and their
    partners, so it suffices to search the digraph on lower faces with an arc
    α → α' whenever α' ≠ α is a facet of partner(α) and is itself matched
    upward.  ``hasse_has_cycle`` is the full modified-Hasse-diagram version.
    """
    up = m.up
    succ = {}
    for low, high in up.items():
        out = []
        rest = high
        while rest:
            b = rest & -rest
            rest ^= b
            facet = high ^ b
            if facet != low and facet in up:
                out.append(facet)
        succ[low] = out
    return not _has_cycle(succ)


def hasse_has_cycle(k: SimplicialComplex, m: Matching) -> bool:
    """Directed cycle search on the whole modified Hasse diagram of ``k``:
    matched pairs point up, every other cover relation points down."""
    up = m.up
    down = m.down
    succ = {}
    for f in k.faces:
        out = []
        if f in up:
            out.append(up[f])
        for b in bits(f):
            facet = f ^ (1 << b)
            if down.get(f) != facet:
                out.append(facet)
        succ[f] = out
    return _has_cycle(succ)


@dataclass
class CriticalCensus:
    by_dimension: dict

    def count(self) -> int:
        return sum(len(v) for v in self.by_dimension.values())

    def dimensions(self) -> set[int]:
        return {d for d, v in self.by_dimension.items() if v}

    def to_json(self) -> list[dict]:
        return [{"dim": d, "faces": [bits(f) for f in fs]} for d, fs in sorted(self.by_dimension.items())]


def critical_cells(k: SimplicialComplex, m: Matching) -> CriticalCensus:
    matched = set()
    for p in m.pairs:
        matched.add(p.low)
        matched.add(p.high)
    by_dim: dict[int, list[int]] = {}
    for f in sorted(k.faces - matched):
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    return CriticalCensus(by_dim)

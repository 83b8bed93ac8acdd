"""Small connected graphs with a fixed edge order, and edge-subset combinatorics.

Edge sets and vertex sets are plain Python ints used as bit vectors: bit ``i``
of an edge set is edge ``e_{i+1}`` (edge index ``i`` in the fixed order), bit
``v`` of a vertex set is vertex ``v``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_MAX_EDGES = 20


class GraphError(ValueError):
    """Invalid graph input.  ``kind`` names the failed check."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def max_edges_from_env() -> int:
    raw = os.environ.get("NUCLEUS_MAX_EDGES")
    if raw is None:
        return DEFAULT_MAX_EDGES
    try:
        value = int(raw)
    except ValueError:
        raise GraphError("bad-guard", f"NUCLEUS_MAX_EDGES={raw!r} is not an integer")
    if value <= 0:
        raise GraphError("bad-guard", "NUCLEUS_MAX_EDGES must be positive")
    return value


@dataclass(frozen=True)
class Graph:
    """A simple connected graph on vertices ``0..n-1``.

    ``edges[i]`` is edge ``e_{i+1}``; the tuple order is the total order on
    E(G) that the matching constructions depend on.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    edge_vertices: tuple[int, ...] = field(init=False, repr=False, compare=False)
    incidence: tuple[int, ...] = field(init=False, repr=False, compare=False)
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for u, v in edges:
            if u < 0 or v >= self.n:
                raise GraphError("vertex-range", f"edge {u}-{v} outside 0..{self.n - 1}")
            if u == v:
                raise GraphError("self-loop", f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise GraphError("duplicate-edge", f"edge {u}-{v} listed twice")
            seen.add((u, v))
        # edge-level problems are reported first, they are the more specific diagnosis
        if self.n < 3:
            raise GraphError("too-few-vertices", f"need at least 3 vertices, got {self.n}")
        incidence = [0] * self.n
        adjacency = [0] * self.n
        for i, (u, v) in enumerate(edges):
            incidence[u] |= 1 << i
            incidence[v] |= 1 << i
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        object.__setattr__(self, "edge_vertices", tuple((1 << u) | (1 << v) for u, v in edges))
        object.__setattr__(self, "incidence", tuple(incidence))
        object.__setattr__(self, "adjacency", tuple(adjacency))
        if component_of(self, 0, self.full) != self.all_vertices:
            raise GraphError("disconnected", "graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> int:
        """E(G) as an edge set."""
        return (1 << len(self.edges)) - 1

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])

    def edge_index(self, u: int, v: int) -> int:
        return self.edges.index((min(u, v), max(u, v)))

    def reordered(self, order: Sequence[int]) -> "Graph":
        """The same graph with ``order[j]`` (an old index) becoming edge index ``j``."""
        if sorted(order) != list(range(self.m)):
            raise ValueError("order must be a permutation of the edge indices")
        return Graph(self.n, tuple(self.edges[i] for i in order))

    def to_edgelist(self) -> str:
        lines = [f"n {self.n}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return ",".join(f"{u}-{v}" for u, v in self.edges)


# -- parsing -----------------------------------------------------------------

_HEADER = re.compile(r"^n\s+(\S+)$")


def parse_graph(text: str, max_edges: int | None = None, fmt: str = "auto") -> Graph:
    """Read a graph from an edge-list document or a graph6 string.

    The edge list is one ``u v`` pair per line with an optional ``n <count>``
    header; blank lines and ``#`` comments are skipped.  Edges are indexed in
    file order.  ``fmt`` is ``"edgelist"``, ``"graph6"`` or ``"auto"``.
    """
    if max_edges is None:
        max_edges = max_edges_from_env()
    if fmt == "auto":
        fmt = "graph6" if _looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        g = parse_graph6(text.strip())
    elif fmt == "edgelist":
        g = _parse_edgelist(text)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    if g.m > max_edges:
        raise GraphError("too-many-edges", f"{g.m} edges exceeds the limit of {max_edges}")
    return g


def parse_inline(text: str, max_edges: int | None = None) -> Graph:
    """Parse the inline syntax ``"0-1,1-2,0-2"``."""
    lines = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        parts = token.split("-")
        if len(parts) != 2:
            raise GraphError("malformed", f"bad inline edge {token!r}")
        lines.append(" ".join(parts))
    return parse_graph("\n".join(lines), max_edges=max_edges, fmt="edgelist")


def _looks_like_graph6(text: str) -> bool:
    body = text.strip()
    if body.startswith(">>graph6<<"):
        return True
    return bool(body) and len(body.split()) == 1 and not body.isdigit()


def _parse_edgelist(text: str) -> Graph:
    n_header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER.match(line)
        if header:
            if n_header is not None or pairs:
                raise GraphError("malformed", f"line {lineno}: header must come first")
            if not header.group(1).isdigit():
                raise GraphError("malformed", f"line {lineno}: bad vertex count {header.group(1)!r}")
            n_header = int(header.group(1))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError("malformed", f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    if not pairs and n_header is None:
        raise GraphError("malformed", "no edges")
    n = n_header if n_header is not None else 1 + max(max(p) for p in pairs)
    return Graph(n, tuple(pairs))


def parse_graph6(data: str) -> Graph:
    """Decode a graph6 string.  Edges are ordered as the format lists them:
    column by column through the upper triangle, ``(0,1), (0,2), (1,2), (0,3), ...``."""
    import networkx as nx

    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphError("malformed", f"bad graph6 string: {exc}") from None
    edges = sorted(((min(u, v), max(u, v)) for u, v in h.edges()), key=lambda e: (e[1], e[0]))
    return Graph(h.number_of_nodes(), tuple(edges))


def to_graph6(g: Graph) -> str:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


# -- edge-subset operations --------------------------------------------------

def vertices_of(g: Graph, s: int) -> int:
    """V_s: endpoints of the edges in ``s``, as a vertex mask."""
    out = 0
    ev = g.edge_vertices
    while s:
        low = s & -s
        out |= ev[low.bit_length() - 1]
        s ^= low
    return out


def is_vertex_cover(g: Graph, x: int) -> bool:
    return all(ev & x for ev in g.edge_vertices)


def component_of(g: Graph, v: int, f: int) -> int:
    """Vertex mask of v's component in the spanning subgraph (V(G), f)."""
    comp = 1 << v
    ev = g.edge_vertices
    pending = f
    grew = True
    while grew and pending:
        grew = False
        rest = pending
        while rest:
            low = rest & -rest
            rest ^= low
            e = ev[low.bit_length() - 1]
            if e & comp:
                comp |= e
                pending ^= low
                grew = True
    return comp


def edges_touching(g: Graph, vmask: int) -> int:
    """Edges with at least one endpoint in ``vmask``."""
    out = 0
    for v in bits(vmask):
        out |= g.incidence[v]
    return out


def shade(g: Graph, v: int, f: int) -> int:
    """Edges with an endpoint joined to ``v`` by an f-path (trivial paths included)."""
    return edges_touching(g, component_of(g, v, f))


def is_connected_edge_subgraph(g: Graph, s: int) -> bool:
    if s == 0:
        raise ValueError("connectivity of the empty edge-induced subgraph is undefined")
    start = g.edges[(s & -s).bit_length() - 1][0]
    return component_of(g, start, s) == vertices_of(g, s)


def _require_member(s: int, e: int):
    if not (s >> e) & 1:
        raise ValueError(f"edge index {e} is not in the edge set")


def is_bridge_in(g: Graph, s: int, e: int) -> bool:
    """True iff deleting edge ``e`` from G_s separates its endpoints."""
    _require_member(s, e)
    u, v = g.edges[e]
    return not (component_of(g, u, s & ~(1 << e)) >> v) & 1


def degree_in(g: Graph, s: int, v: int) -> int:
    return (g.incidence[v] & s).bit_count()


def leaf_endpoints_in(g: Graph, s: int, e: int) -> int:
    """Endpoints of ``e`` having degree 1 in G_s, as a vertex mask."""
    _require_member(s, e)
    out = 0
    for w in g.edges[e]:
        if degree_in(g, s, w) == 1:
            out |= 1 << w
    return out


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# -- whole-power-set tables -----------------------------------------------------
# Shade only depends on v's component, so one array pass over all 2^m edge
# sets replaces 2^m separate searches.

@lru_cache(maxsize=256)
def component_table(g: Graph, v: int) -> np.ndarray:
    """``table[f]`` = vertex mask of v's component in (V(G), f), for every f."""
    faces = np.arange(1 << g.m, dtype=np.int64)
    comp = np.full(faces.shape, 1 << v, dtype=np.int64)
    has_edge = [((faces >> i) & 1).astype(bool) for i in range(g.m)]
    while True:
        before = comp.copy()
        for i, ev in enumerate(g.edge_vertices):
            hit = has_edge[i] & ((comp & ev) != 0)
            comp[hit] |= ev
        if np.array_equal(before, comp):
            return comp


@lru_cache(maxsize=256)
def shade_table(g: Graph, v: int) -> np.ndarray:
    """``table[f]`` = shade(g, v, f) for every edge set f."""
    comp = component_table(g, v)
    out = np.zeros(comp.shape, dtype=np.int64)
    for i, ev in enumerate(g.edge_vertices):
        out[(comp & ev) != 0] |= 1 << i
    return out


def shade_is_full(g: Graph, v: int) -> np.ndarray:
    """Boolean array: shade(g, v, f) == E(G)."""
    return shade_table(g, v) == g.full

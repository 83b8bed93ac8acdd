"""Nuclei, Elser numbers, the U-nucleus complex and its dual A_U."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

import numpy as np

from .complex import SimplicialComplex, reduced_euler_characteristic
from .graph import (
    Graph,
    bits,
    is_connected_edge_subgraph,
    is_vertex_cover,
    iter_subsets,
    mask_of,
    shade_is_full,
    vertices_of,
)

MAX_SUBSET_VERTICES = 12


class GuardError(ValueError):
    pass


@dataclass(frozen=True)
class Nucleus:
    edge_set: int
    vertex_set: int

    @property
    def num_edges(self) -> int:
        return self.edge_set.bit_count()

    @property
    def num_vertices(self) -> int:
        return self.vertex_set.bit_count()


@lru_cache(maxsize=1024)
def enumerate_nuclei(g: Graph) -> tuple[Nucleus, ...]:
    """All nuclei of g: single-vertex ones first, then by edge set as an integer."""
    out = [Nucleus(0, 1 << v) for v in range(g.n) if g.incidence[v] == g.full]
    for s in range(1, g.full + 1):
        vs = vertices_of(g, s)
        if is_vertex_cover(g, vs) and is_connected_edge_subgraph(g, s):
            out.append(Nucleus(s, vs))
    return tuple(out)


@dataclass(frozen=True)
class ElserTerm:
    edges: int
    vertices: int
    sign: int


@dataclass(frozen=True)
class ElserReport:
    k: int
    value: int
    terms: tuple[ElserTerm, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "value": self.value,
            "terms": [{"edges": t.edges, "vertices": t.vertices, "sign": t.sign} for t in self.terms],
        }


def elser_number(g: Graph, k: int) -> ElserReport:
    if k < 0:
        raise ValueError("k must be nonnegative")
    terms = []
    total = 0
    for nuc in enumerate_nuclei(g):
        sign = -1 if nuc.num_edges % 2 else 1
        terms.append(ElserTerm(nuc.num_edges, nuc.num_vertices, sign))
        total += sign * nuc.num_vertices ** k
    if g.n % 2 == 0:
        total = -total
    return ElserReport(k, total, tuple(terms))


def _vertex_mask(g: Graph, u: Iterable[int] | int) -> int:
    if isinstance(u, int):
        mask = u
    else:
        mask = mask_of(u)
    if mask >> g.n:
        raise ValueError(f"vertex set {bits(mask)} not inside 0..{g.n - 1}")
    return mask


def nucleus_complex(g: Graph, u: Iterable[int] | int) -> SimplicialComplex:
    """Δ^G_U: complements of the edge sets of nuclei whose vertex set contains u."""
    return _nucleus_complex(g, _vertex_mask(g, u))


@lru_cache(maxsize=4096)
def _nucleus_complex(g: Graph, umask: int) -> SimplicialComplex:
    faces = frozenset(g.full ^ nuc.edge_set for nuc in enumerate_nuclei(g)
                      if nuc.vertex_set & umask == umask)
    # SimplicialComplex rejects families that are not downward closed
    return SimplicialComplex(g.m, faces)


def a_mask(g: Graph, u: Iterable[int] | int) -> np.ndarray:
    """Boolean membership array of A_U over all 2^m edge sets."""
    umask = _vertex_mask(g, u)
    member = np.zeros(1 << g.m, dtype=bool)
    for v in bits(umask):
        member |= ~shade_is_full(g, v)
    return member


def a_complex(g: Graph, u: Iterable[int] | int) -> SimplicialComplex:
    """A_U: edge sets F with shade(v, F) a proper subset of E(G) for some v in u."""
    return _a_complex(g, _vertex_mask(g, u))


@lru_cache(maxsize=4096)
def _a_complex(g: Graph, umask: int) -> SimplicialComplex:
    faces = frozenset(int(f) for f in np.flatnonzero(a_mask(g, umask)))
    return SimplicialComplex(g.m, faces)


def surjection_count(k: int, j: int) -> int:
    if k < 0 or j < 0:
        raise ValueError("arguments must be nonnegative")
    return sum((-1) ** (j - i) * comb(j, i) * i ** k for i in range(j + 1))


def elser_via_euler(g: Graph, k: int, max_vertices: int = MAX_SUBSET_VERTICES) -> int:
    """els_k recomputed as the surjection-weighted sum of χ̃(Δ^G_U) over U ⊆ V."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n > max_vertices:
        raise GuardError(f"{g.n} vertices exceeds the subset-enumeration guard of {max_vertices}")
    total = 0
    for umask in iter_subsets(g.all_vertices):
        weight = surjection_count(k, umask.bit_count())
        if weight == 0:
            continue
        total += weight * reduced_euler_characteristic(nucleus_complex(g, umask))
    return -total if (g.m + g.n) % 2 else total

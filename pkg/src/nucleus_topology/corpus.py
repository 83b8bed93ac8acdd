"""Exhaustive corpora of small labeled graphs."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from .graph import Graph, GraphError, bits


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on vertices 0..n-1 (no isomorphism reduction).

    Candidate edges are the pairs (u, v), u < v, in lexicographic order; graphs
    come out in increasing order of their edge subset read as an integer, and
    each graph keeps the lexicographic edge order.
    """
    slots = list(combinations(range(n), 2))
    for code in range(1, 1 << len(slots)):
        # fewer than n-1 edges cannot connect n vertices
        if code.bit_count() < n - 1:
            continue
        try:
            yield Graph(n, tuple(slots[i] for i in bits(code)))
        except GraphError as exc:
            if exc.kind != "disconnected":
                raise


def corpus(max_n: int, min_n: int = 3) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def vertex_subsets(g: Graph, min_size: int = 0, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    top = g.n if max_size is None else max_size
    for k in range(min_size, top + 1):
        yield from combinations(range(g.n), k)


def anchor_orders(u: tuple[int, ...], all_orders_up_to: int = 3) -> Iterator[tuple[int, ...]]:
    """Every ordering of u when |u| <= all_orders_up_to, else u as given."""
    if len(u) <= all_orders_up_to:
        yield from permutations(u)
    else:
        yield u


def edge_permutations(g: Graph, count: int, rng: random.Random) -> list[Graph]:
    """``count`` copies of g with randomly shuffled edge orders."""
    out = []
    for _ in range(count):
        order = list(range(g.m))
        rng.shuffle(order)
        out.append(g.reordered(order))
    return out


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))

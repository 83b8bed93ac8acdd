from itertools import product

import networkx as nx
import pytest

from nucleus_topology.complex import complex_from_faces, full_simplex
from nucleus_topology.corpus import corpus
from nucleus_topology.graph import bits, mask_of
from nucleus_topology.nucleus import (
    GuardError,
    a_complex,
    elser_number,
    elser_via_euler,
    enumerate_nuclei,
    nucleus_complex,
    surjection_count,
)

SMALL = list(corpus(4))


def _brute_nuclei(g):
    """Connected subgraphs whose vertex set covers every edge, via networkx."""
    out = set()
    for v in range(g.n):
        if all(v in e for e in g.edges):
            out.add((0, 1 << v))
    for s in range(1, g.full + 1):
        h = nx.Graph([g.edges[i] for i in bits(s)])
        if nx.is_connected(h) and all(set(e) & set(h) for e in g.edges):
            out.add((s, mask_of(h)))
    return out


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_nuclei_brute_force(g):
    got = {(n.edge_set, n.vertex_set) for n in enumerate_nuclei(g)}
    assert got == _brute_nuclei(g)


def test_nuclei_counts(p3, c3, c4):
    p = enumerate_nuclei(p3)
    assert len(p) == 4 and p[0].edge_set == 0 and p[0].vertex_set == 0b010
    c = enumerate_nuclei(c3)
    assert len(c) == 7 and sorted(n.num_edges for n in c) == [1, 1, 1, 2, 2, 2, 3]
    assert sorted(n.num_edges for n in enumerate_nuclei(c4)) == [2] * 4 + [3] * 4 + [4]


def test_elser_spot_values(p3, c3, c4):
    assert elser_number(c3, 2).value == 6
    assert elser_number(p3, 1).value == 0
    assert elser_number(c4, 0).value == -1
    with pytest.raises(ValueError):
        elser_number(c3, -1)


def _surjections(k, j):
    return sum(1 for f in product(range(j), repeat=k) if set(f) == set(range(j)))


@pytest.mark.parametrize("k,j", [(k, j) for k in range(6) for j in range(5)])
def test_surjection_count(k, j):
    assert surjection_count(k, j) == _surjections(k, j)


def test_surjection_examples():
    assert surjection_count(3, 2) == 6
    assert all(surjection_count(k, 1) == 1 for k in range(1, 8))
    assert surjection_count(2, 3) == 0


def test_via_euler_examples(p3, c3, c4):
    assert elser_via_euler(c3, 2) == 6
    assert elser_via_euler(p3, 1) == 0
    assert elser_via_euler(c4, 0) == -1


def test_via_euler_guard(c3):
    with pytest.raises(GuardError):
        elser_via_euler(c3, 2, max_vertices=2)


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_identity_small_corpus(g):
    for k in range(5):
        assert elser_via_euler(g, k) == elser_number(g, k).value


def test_nucleus_complex_examples(c3, k13):
    assert nucleus_complex(c3, [0, 1]) == complex_from_faces(3, [0b001, 0b110])
    assert nucleus_complex(c3, []) == complex_from_faces(3, [0b011, 0b101, 0b110])
    assert nucleus_complex(k13, [0]) == full_simplex(3)


def _brute_a(g, u):
    faces = set()
    for f in range(g.full + 1):
        h = nx.Graph([g.edges[i] for i in bits(f)])
        for v in u:
            h.add_node(v)
            comp = nx.node_connected_component(h, v)
            if not all(set(e) & comp for e in g.edges):
                faces.add(f)
                break
    return faces


def test_a_complex_examples(p3, c3, k13):
    assert a_complex(p3, [0]).faces == {0, 0b10}
    assert a_complex(c3, [0, 1]).faces == {0, 0b010, 0b100}
    assert a_complex(k13, [0]).is_void


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_a_complex_brute_force(g):
    for r in range(g.n + 1):
        for u in [tuple(bits(s)) for s in range(1 << g.n) if s.bit_count() == r]:
            assert a_complex(g, u).faces == _brute_a(g, u)


def test_vertex_out_of_range(c3):
    with pytest.raises(ValueError):
        nucleus_complex(c3, [5])

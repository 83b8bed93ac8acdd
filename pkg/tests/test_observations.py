import pytest

from nucleus_topology.corpus import corpus, vertex_subsets
from nucleus_topology.graph import parse_inline
from nucleus_topology.morse import critical_cells, extend_matching
from nucleus_topology.observations import (
    difference_membership_violations,
    first_step_violations,
    minimal_edge_violations,
    spanning_tree_violations,
)

SMALL = list(corpus(4))


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_membership_law(g):
    for x in range(g.n):
        for y in range(g.n):
            if x != y:
                assert difference_membership_violations(g, x, y) == []


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_laws_hold_up_to_four_vertices(g):
    for u in vertex_subsets(g, 2, 2):
        for order in (u, u[::-1]):
            m, trace = extend_matching(g, order)
            x, y = order
            assert first_step_violations(g, x, y, trace.layers[0]) == []
            assert minimal_edge_violations(g, order, m) == []
            census = critical_cells(m.domain, m)
            crit = [f for fs in census.by_dimension.values() for f in fs]
            assert spanning_tree_violations(g, y, crit) == []


def test_spanning_tree_checker_flags_non_trees(c3):
    # {e1, e2} has 2 edges, but G minus vertex 1 has 2 vertices
    assert spanning_tree_violations(c3, 1, [0b011]) == [0b011]
    assert spanning_tree_violations(c3, 1, [0b010]) == []


def test_known_law_failures_on_five_vertices():
    # witness graph where the layered pairing strands faces outside dimension n-3
    g = parse_inline("0-2,0-3,0-4,1-2,1-3")
    m, _ = extend_matching(g, (0, 4))
    census = critical_cells(m.domain, m)
    assert census.by_dimension == {1: [0b00011], 2: [0b11001]}
    assert spanning_tree_violations(g, 4, [0b00011]) == [0b00011]

"""Elser numbers two ways: the nucleus sum, and surjection-weighted Euler
characteristics of the U-nucleus complexes."""

from nucleus_topology import elser_number, elser_via_euler, enumerate_nuclei
from nucleus_topology.corpus import complete_graph, cycle_graph, path_graph, star_graph
from nucleus_topology.graph import bits

## A triangle has seven nuclei: every single edge already covers the third vertex
c3 = cycle_graph(3)
for nuc in enumerate_nuclei(c3):
    print("nucleus edges", bits(nuc.edge_set), "vertices", bits(nuc.vertex_set))

## The table of els_k for a few small graphs
graphs = {"P_3": path_graph(3), "C_3": c3, "C_4": cycle_graph(4), "K_{1,3}": star_graph(3), "K_4": complete_graph(4)}
print("\ngraph     " + "".join(f"k={k:<6}" for k in range(5)))
for name, g in graphs.items():
    row = [elser_number(g, k).value for k in range(5)]
    print(f"{name:<10}" + "".join(f"{v:<8}" for v in row))

## els_1 is always 0, els_0 <= 0 and els_k >= 0 above that.  The second
## route sums Sur(k, |U|) * chi(Delta_U) over vertex subsets U
for name, g in graphs.items():
    same = all(elser_via_euler(g, k) == elser_number(g, k).value for k in range(5))
    print(name, "identity holds:", same)

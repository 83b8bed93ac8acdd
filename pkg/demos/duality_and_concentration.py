"""Alexander duality between Delta^G_U and A_U, and where the homology of
Delta^G_U lives."""

from nucleus_topology import a_complex, alexander_dual, nucleus_complex, reduced_betti, verify_theorem
from nucleus_topology.corpus import complete_graph, cycle_graph
from nucleus_topology.graph import bits

g = complete_graph(4)
print("K_4 has", g.m, "edges; |E|-|V| =", g.m - g.n)

## Delta_U shrinks as U grows, A_U grows
for u in [(0,), (0, 1), (0, 1, 2), (0, 1, 2, 3)]:
    delta = nucleus_complex(g, u)
    a = a_complex(g, u)
    print(f"U={u}: |Delta|={len(delta.faces):3d} |A|={len(a.faces):3d}",
          "dual(Delta) == A:", alexander_dual(delta) == a)

## Reduced Betti numbers reflect, b_i(Delta) = b_{m-i-3}(A)
u = (0, 1)
bd = reduced_betti(nucleus_complex(g, u))
ba = reduced_betti(a_complex(g, u))
print("\nb(Delta_U):", bd.nonzero(), "  b(A_U):", ba.nonzero())

## For |U| > 1 only degree |E|-|V| can carry homology; |U| = 1 is acyclic
for u in [(2,), (0, 3), (1, 2, 3)]:
    r = verify_theorem(g, u)
    print(u, r.case, "nonzero:", r.betti.nonzero(), "pass" if r.passed else "FAIL")

## U = ∅ is different: cycles give a circle, one degree higher than the rule
for n in range(3, 7):
    delta = nucleus_complex(cycle_graph(n), ())
    print(f"C_{n}: facets {[bits(f) for f in delta.facets()][:3]}..., b =", reduced_betti(delta).nonzero())

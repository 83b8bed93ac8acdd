"""Acyclic matchings on A_U: the single-anchor matching and the layered
extension, with the critical-cell census compared against homology."""

from nucleus_topology import critical_cells, extend_matching, grinberg_matching, is_acyclic, reduced_betti
from nucleus_topology.corpus import complete_graph, star_graph
from nucleus_topology.graph import bits
from nucleus_topology.verify import morse_report

## One anchor: every face of A_x is matched, so A_x collapses
g = complete_graph(4)
m0 = grinberg_matching(g, 0)
print("A_0 on K_4:", len(m0.domain.faces), "faces,", len(m0.pairs), "pairs,",
      critical_cells(m0.domain, m0).count(), "critical")

## Two anchors on the claw K_{1,3}: layer 2 pairs {e1} with {e1,e3} at step 3
m, trace = extend_matching(star_graph(3), (1, 2))
for p in m.pairs:
    print(f"layer {p.layer} step {p.step}: {bits(p.low)} < {bits(p.high)}")

## On K_4 with U = {0,1,2} the critical cells sit in dimension n-3 = 1 and
## their number is the Betti number of A_U in that degree
r = morse_report(g, (0, 1, 2))
print("\ncritical census:", r.census.to_json())
print("b(A_U):", reduced_betti(r.matching.domain).nonzero(), "acyclic:", is_acyclic(r.matching.domain, r.matching))
print("blocked selections in the trace:", r.trace.blocked_count())

"""Where the layered matching leaves extra critical cells.

Up to four vertices every run ends with critical cells only in dimension
n-3.  On five vertices some runs do not; this script walks through the
smallest one.
"""

from nucleus_topology import MatchingAnomaly, parse_inline, reduced_betti
from nucleus_topology.graph import bits
from nucleus_topology.verify import morse_report

g = parse_inline("0-2,0-3,0-4,1-2,1-3")
r = morse_report(g, (0, 4))
print("valid:", r.valid, " acyclic:", r.acyclic)
print("critical:", r.census.to_json())
print("b(A_U):", reduced_betti(r.matching.domain).nonzero() or "all zero")

## The layer-2 trace shows the face whose partner was already taken
for step in r.trace.layers[0].steps:
    for low, high in step.blocked:
        print(f"step {step.step}: {bits(high)} selected, partner {bits(low)} already matched")

## Under strict pairing the same run aborts
try:
    morse_report(g, (0, 4), strict=True)
except MatchingAnomaly as exc:
    print("strict:", exc)

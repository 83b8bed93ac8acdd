"""Nucleus complexes of graphs, their homology, and discrete Morse matchings on A_U."""

from .complex import (
    HomologyProfile,
    SimplicialComplex,
    alexander_dual,
    boundary_matrix,
    boundary_squares_to_zero,
    complex_from_faces,
    reduced_betti,
    reduced_euler_characteristic,
)
from .graph import Graph, GraphError, parse_graph, parse_inline, shade
from .morse import (
    Matching,
    MatchingAnomaly,
    critical_cells,
    extend_matching,
    grinberg_matching,
    hasse_has_cycle,
    is_acyclic,
    is_valid_matching,
)
from .nucleus import (
    GuardError,
    Nucleus,
    a_complex,
    elser_number,
    elser_via_euler,
    enumerate_nuclei,
    nucleus_complex,
)
from .verify import check_graph, morse_report, verify_corpus, verify_theorem

__all__ = [
    "Graph", "GraphError", "GuardError", "HomologyProfile", "Matching", "MatchingAnomaly",
    "Nucleus", "SimplicialComplex", "a_complex", "alexander_dual", "boundary_matrix",
    "boundary_squares_to_zero", "check_graph", "complex_from_faces", "critical_cells",
    "elser_number", "elser_via_euler", "enumerate_nuclei", "extend_matching",
    "grinberg_matching", "hasse_has_cycle", "is_acyclic", "is_valid_matching",
    "morse_report", "nucleus_complex", "parse_graph", "parse_inline", "reduced_betti",
    "reduced_euler_characteristic", "shade", "verify_corpus", "verify_theorem",
]

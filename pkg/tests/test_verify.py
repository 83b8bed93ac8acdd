from nucleus_topology.corpus import cycle_graph
from nucleus_topology.graph import parse_inline
from nucleus_topology.verify import (
    check_graph,
    counterexample_tally,
    morse_report,
    verify_corpus,
    verify_theorem,
)


def test_theorem_examples(c3, c4, k13):
    r = verify_theorem(c3, [0, 1])
    assert r.passed and r.case == "concentrated" and r.degree == 0 and r.betti.nonzero() == {0: 1}
    r = verify_theorem(c4, [])
    assert r.passed is None and r.counterexample and r.betti.nonzero() == {1: 1}
    r = verify_theorem(k13, [1, 2])
    assert r.passed and not r.betti.nonzero()
    assert verify_theorem(c3, [2]).passed


def test_morse_report_examples(c3, k13, p3):
    r = morse_report(c3, (0, 1))
    assert len(r.matching.pairs) == 1 and r.census.count() == 1 and r.morse_equality
    r = morse_report(k13, (1, 2))
    assert len(r.matching.pairs) == 3 and r.census.count() == 0 and r.dimension_ok
    r = morse_report(p3, (0,))
    assert len(r.matching.pairs) == 1 and r.census.count() == 0


def test_counterexample_family():
    t = counterexample_tally()
    assert t.ok and t.passed["counterexample"] == 4


def test_check_graph_rows(c4):
    t = check_graph(c4, permutations=1, rows=True)
    assert t.ok
    assert {r[2] for r in t.rows} >= {"identity", "duality", "phi0", "phi_valid"}
    assert all(r[3] in ("pass", "fail") for r in t.rows)


def test_corpus_four_is_clean():
    t = verify_corpus(4)
    assert t.ok, t.to_json()["first_failures"]
    assert t.notes["conjecture_i_counterexamples"] > 0


def test_parallel_matches_serial():
    a = verify_corpus(3, permutations=1)
    b = verify_corpus(3, permutations=1, jobs=2)
    assert a.to_json() == b.to_json()


def test_five_vertex_witness_fails_dimension():
    t = check_graph(parse_inline("0-2,0-3,0-4,1-2,1-3"), permutations=0)
    assert t.failed["phi_dimension"] > 0
    assert t.witnesses["phi_dimension"]["u"] == [0, 4]
    assert cycle_graph(5).m == 5

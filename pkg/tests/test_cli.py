import io
import json
import subprocess
import sys

import pytest

from nucleus_topology.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_elser_triangle():
    code, text = run("elser", "--edges", "0-1,0-2,1-2", "--k", "2")
    payload = json.loads(text)
    assert code == 0 and payload["value"] == 6 and payload["identity_ok"] is True
    assert payload["via_euler"] == 6


def test_elser_path():
    code, text = run("elser", "--edges", "0-1,1-2", "--k", "1")
    assert code == 0 and json.loads(text)["value"] == 0


def test_elser_too_small(capsys):
    code, _ = run("elser", "--edges", "0-1", "--k", "2")
    assert code == 64
    assert "3 vertices" in capsys.readouterr().err


def test_usage_errors_exit_64():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 64
    assert run("elser", "--k", "2")[0] == 64
    assert run("complex", "--edges", "0-1,1-2")[0] == 64
    assert run("complex", "--edges", "0-1,1-2", "--u", "7")[0] == 64
    assert run("elser", "--edges", "0-1,1-2", "--max-edges", "0")[0] == 64
    assert run("elser", "--edges", "0-1,1-2,0-2", "--max-edges", "2")[0] == 64


def test_verify_counterexample_flag():
    code, text = run("verify", "--edges", "0-1,1-2,2-3,0-3", "--u", "")
    payload = json.loads(text)
    assert code == 0
    assert payload["flag"] == "conjecture case (i) counterexample"
    assert payload["nonzero"] == {"1": 1}


def test_verify_concentration():
    code, text = run("verify", "--edges", "0-1,0-2,1-2", "--u", "0,1")
    payload = json.loads(text)
    assert code == 0 and payload["passed"] and payload["degree"] == 0


def test_verify_corpus_four():
    code, text = run("verify", "--corpus", "4", "--permutations", "1")
    assert code == 0 and json.loads(text)["ok"]


def test_verify_failure_exit_one():
    code, text = run("verify", "--edges", "0-2,0-3,0-4,1-2,1-3", "--permutations", "0")
    payload = json.loads(text)
    assert code == 1 and "phi_dimension" in payload["first_failures"]


def test_verify_tsv_rows():
    code, text = run("verify", "--edges", "0-1,1-2,0-2", "--format", "tsv", "--permutations", "0")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "graph\tu\tcheck\tresult"
    assert all(len(line.split("\t")) == 4 for line in lines)


@pytest.mark.parametrize("edges,u,pairs,critical", [
    ("0-1,0-2,1-2", "0,1", 1, 1),
    ("0-1,0-2,0-3", "1,2", 3, 0),
    ("0-1,1-2", "0", 1, 0),
])
def test_morse_examples(edges, u, pairs, critical):
    code, text = run("morse", "--edges", edges, "--u", u)
    payload = json.loads(text)
    assert code == 0
    assert len(payload["pairs"]) == pairs and payload["critical_count"] == critical


def test_morse_strict_anomaly_exit_two():
    code, text = run("morse", "--edges", "0-1,0-2,0-3,1-2", "--u", "1,3", "--strict")
    assert code == 2 and json.loads(text)["layer"] == 2


def test_morse_needs_anchor():
    assert run("morse", "--edges", "0-1,1-2", "--u", "")[0] == 64


def test_complex_and_dual_commands():
    code, text = run("complex", "--edges", "0-1,0-2,1-2", "--u", "0,1")
    assert code == 0 and json.loads(text) == {"ground": 3, "facets": [[0], [1, 2]]}
    code, text = run("acomplex", "--edges", "0-1,0-2,1-2", "--u", "0,1")
    assert json.loads(text) == {"ground": 3, "facets": [[1], [2]]}
    code, text = run("duality", "--edges", "0-1,0-2,1-2", "--u", "0,1")
    assert code == 0 and json.loads(text)["dual_equals_a"]
    code, text = run("homology", "--edges", "0-1,0-2,1-2", "--u", "")
    assert json.loads(text)["betti"]["1"] == 1


def test_nuclei_and_graph_sources(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("0 1\n1 2\n2 3\n0 3\n")
    code, text = run("nuclei", "--graph", str(path))
    assert code == 0 and json.loads(text)["count"] == 9
    code, text = run("nuclei", "--graph6", "Bw")
    assert json.loads(text)["count"] == 7
    assert run("nuclei", "--graph", str(tmp_path / "missing"))[0] == 64
    assert run("nuclei", "--edges", "0-1,1-2", "--graph6", "Bw")[0] == 64


def test_byte_stable_output():
    argv = ["morse", "--edges", "0-1,0-2,0-3,1-2", "--u", "1,3"]
    assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nucleus_topology", "elser", "--edges", "0-1,1-2,2-3,0-3",
                           "--k", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == -1

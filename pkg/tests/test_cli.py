import io
import json
import subprocess
import sys

import pytest

from parabolica.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_nf_example():
    assert call("nf", "--strands", "3", "1 2 1") == (0, "Δ^1 ·\n", "")


def test_embed_example():
    assert call("embed", "--eta", "--n", "4", "B:1")[1] == "1 1\n"
    assert call("embed", "--lambda", "--n", "3", "Ct:4")[1] == "4 4\n"
    assert call("embed", "--theta", "--n", "3", "At:1")[1] == "B:2\n"


def test_density_example():
    code, out, _ = call("density-check", "--punctures", "5", "--mode", "ka",
                        "--curve", '{"base":{"lo":1,"hi":1},"act":[]}')
    assert code == 0 and out == "C_[3,3]\n"


def test_json_rendering():
    code, out, _ = call("--json", "nf", "--strands", "3", "1 2 1")
    assert json.loads(out) == {"strands": 3, "delta_power": 1, "factors": []}
    code, out, _ = call("nf", "--json", "--strands", "3", "1")
    assert json.loads(out)["factors"] == [[2, 1, 3]]


def test_predicates():
    assert call("equal", "--strands", "3", "1 2 1", "2 1 2")[1] == "true\n"
    assert call("commutes", "--strands", "3", "1", "2")[1] == "false\n"
    p = '{"group":{"family":"A","rank":4},"base":{"lo":1,"hi":1},"conj":[]}'
    q = '{"group":{"family":"A","rank":4},"base":{"lo":3,"hi":3},"conj":[]}'
    assert call("parab-adjacent", p, q)[1] == "true\n"
    assert call("parab-equal", p, q)[1] == "false\n"
    c1, c2 = '{"base":{"lo":1,"hi":2},"act":[]}', '{"base":{"lo":2,"hi":3},"act":[]}'
    assert call("curve-disjoint", "--punctures", "5", c1, c2)[1] == "false\n"
    assert call("curve-equal", "--punctures", "5", c1, c1)[1] == "true\n"


def test_rewrite_and_psi():
    assert call("rewrite-b", "--n", "3", "1 1")[1] == "B:1\n"
    code, out, _ = call("psi", "--n", "3", "1")
    assert code == 0 and out.splitlines()[-1] == "a_1"


def test_central():
    assert call("central", "--group", "B", "--n", "4", "--lo", "1", "--hi", "1")[1] == "B:1\n"
    code, out, _ = call("central-element", "--group", "At", "--n", "4", "--wrap-lo", "4", "--wrap-hi", "0")
    assert code == 0 and out.startswith("At:")


def test_standardize_and_simul():
    c = '{"base":{"lo":2,"hi":3},"act":[2,2,-3,4]}'
    code, out, _ = call("standardize", "--pure1", "--punctures", "5", "--curve", c)
    assert code == 0 and out.splitlines()[-1].startswith("C[")
    p = '{"group":{"family":"Ct","rank":3},"base":{"lo":1,"hi":1},"conj":[2,-4]}'
    q = '{"group":{"family":"Ct","rank":3},"base":{"lo":3,"hi":4},"conj":[2,-4]}'
    code, out, _ = call("simul-standardize", p, q)
    assert code == 0 and out.splitlines()[-1] == "[1,1] [3,4]"


def test_graph_commands(tmp_path):
    code, out, _ = call("graph-build", "--punctures", "4", "--radius", "1")
    assert code == 0 and out.startswith("graph {")
    target = tmp_path / "slice.json"
    code, out, _ = call("graph-build", "--punctures", "5", "--mode", "ka", "--out", str(target))
    assert code == 0 and json.loads(target.read_text())["mode"] == "ka"
    code, out, _ = call("graph-distance", "--punctures", "5",
                        '{"base":{"lo":1,"hi":1},"act":[]}', '{"base":{"lo":3,"hi":4},"act":[]}')
    assert out == "distance <= 1\n"


def test_iso_and_verify():
    code, out, _ = call("iso-check", "--family", "At", "--samples", "30")
    assert code == 0 and "0 violations" in out
    code, out, _ = call("verify", "--max-rank", "4", "--scale", "0.05")
    assert code == 0 and out.splitlines()[-1].endswith("checks passed")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_user_errors_exit_1():
    assert call("nf", "--strands", "3", "1 5")[0] == 1
    assert call("nf")[0] == 1
    assert call("bogus")[0] == 1
    assert call("central", "--group", "X", "--n", "3", "--lo", "1", "--hi", "1")[0] == 1
    assert call("rewrite-b", "--n", "3", "1")[0] == 1
    assert call("curve-equal", "{", "{}")[0] == 1
    code, _, err = call("density-check", "--punctures", "5", "--mode", "ka",
                        "--curve", '{"base":{"lo":2,"hi":2},"act":[]}')
    assert code == 1 and err.startswith("error:")


def test_invariant_violation_exits_2(monkeypatch):
    from parabolica import graphs
    from parabolica.errors import InvariantViolation

    def broken(*_):
        raise InvariantViolation("forced")

    monkeypatch.setattr(graphs, "density_witness", broken)
    code, _, err = call("density-check", "--punctures", "5", "--mode", "ka",
                        "--curve", '{"base":{"lo":1,"hi":1},"act":[]}')
    assert code == 2 and "forced" in err


def test_deterministic_output():
    argv = ["graph-build", "--punctures", "5", "--out", "json"]
    assert call(*argv) == call(*argv)


@pytest.mark.parametrize("argv", [["nf", "--strands", "3", "1 2 1"]])
def test_console_script(argv):
    proc = subprocess.run([sys.executable, "-m", "parabolica.cli", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Δ^1 ·\n"

import json

import pytest
from hypothesis import given, settings

from fillet.cli import ParseError, format_graph, main, parse_graph_file
from fillet.graph_core import Mass

from conftest import F, graphs


def test_parse_path():
    gf = parse_graph_file("p 3 2\ne 0 1\ne 1 2\n")
    assert gf.graph.edges() == [(0, 1), (1, 2)] and gf.mass.weights() == [F(1, 3)] * 3


def test_parse_weights_and_comments():
    gf = parse_graph_file("c a comment\np 3 0\n\nw 1/2 1/4 1/4\n")
    assert gf.mass.weights() == [F(1, 2), F(1, 4), F(1, 4)]


@pytest.mark.parametrize("text, needle", [
    ("p 3 1\ne 0 0\n", "self-loop"),
    ("p 3 2\ne 0 1\ne 0 1\n", "duplicate"),
    ("p 3 1\ne 0 3\n", "range"),
    ("p 3 2\ne 0 1\n", "edge"),
    ("p 3 0\nw 1/2 1/2\n", "weight"),
    ("p 3 0\nw 1/2 1/4 1/8\n", "sum"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as info:
        parse_graph_file(text)
    assert needle in str(info.value)


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=40)
def test_format_parse_round_trip(g):
    w = [F(1, g.n)] * g.n
    w[0] += F(1, 2 * g.n)
    w[-1] -= F(1, 2 * g.n)
    for mass in (Mass.uniform(g.n), Mass.weighted(w)):
        gf = parse_graph_file(format_graph(g, mass, path=[0]))
        assert gf.graph.edges() == g.edges()
        assert gf.mass.weights() == mass.weights()
        assert gf.path == (0,)


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_find_point_mass(tmp_path, capsys):
    f = _write(tmp_path, "pm.txt", "p 3 0\nw 1 0 0\n")
    assert main(["find", "--input", f, "--pattern", "C4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] == "violation" and out["payload"]["type"] == "heavy-vertex"


def test_verify_and_tamper(tmp_path, capsys):
    f = _write(tmp_path, "pm.txt", "p 3 0\nw 1 0 0\n")
    cert = tmp_path / "cert.json"
    assert main(["find", "--input", f, "--pattern", "C4", "--out", str(cert)]) == 0
    assert main(["verify", "--input", f, "--cert", str(cert)]) == 0
    assert capsys.readouterr().out == "true\n"
    d = json.loads(cert.read_text())
    d["payload"]["v"] = 1
    cert.write_text(json.dumps(d))
    assert main(["verify", "--input", f, "--cert", str(cert)]) == 0
    assert capsys.readouterr().out.startswith("false, clause ")


def test_usage_errors_exit_one(tmp_path, capsys):
    bad = _write(tmp_path, "bad.txt", "p 3 1\ne 0 0\n")
    assert main(["coherence", "--input", bad, "--epsilon", "1/2"]) == 1
    assert "self-loop" in capsys.readouterr().err
    ok = _write(tmp_path, "ok.txt", "p 2 1\ne 0 1\n")
    assert main(["find", "--input", ok, "--pattern", "C4", "--set", "k=3"]) == 1
    assert main(["coherence", "--input", str(tmp_path / "missing.txt")]) == 1


def test_coherence_command(tmp_path, capsys):
    f = _write(tmp_path, "k2.txt", "p 2 1\ne 0 1\n")
    assert main(["coherence", "--input", f, "--epsilon", "3/5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] == "coherent"
    f = _write(tmp_path, "two.txt", "p 2 0\n")
    assert main(["coherence", "--input", f, "--epsilon", "2/5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["payload"]["type"] == "heavy-vertex"


def test_oracle_and_eh_commands(tmp_path, capsys):
    c5 = "p 5 5\n" + "".join(f"e {i} {(i + 1) % 5}\n" for i in range(5))
    f = _write(tmp_path, "c5.txt", c5)
    assert main(["oracle", "--input", f, "--pattern", "C4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["filleting"]["status"] == "found" and (out["omega"], out["alpha"]) == (2, 2)
    assert main(["eh", "--input", f]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["payload"]["product"] == 4


def test_gen_then_coherence(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--family", "cycle", "--params", '{"n": 6}', "--out", str(out)]) == 0
    gf = parse_graph_file(out.read_text())
    assert len(gf.graph.edges()) == 6


def test_experiment_csv(capsys):
    args = ["experiment", "--family", "gnp", "--params", '{"n": 40}', "--sweep", "p=1/40,2/40",
            "--seeds", "2", "--pattern", "C4", "--format", "csv"]
    assert main(args) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "family,params,seed,pattern,mode,eps,outcome,verified"
    assert len(lines) == 5 and all(line.endswith(",True") for line in lines[1:])

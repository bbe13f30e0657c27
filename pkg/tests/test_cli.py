import csv
import io
import json

import pytest

from clawtrace import cli
from clawtrace.generators import cycle_graph, gen_g1
from clawtrace.graph import parse_graph6, write_edgelist, write_graph6
from clawtrace.harness import Claim, CounterexampleReport


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_gen_g1():
    code, out = run("gen", "--family", "g1", "--k", "3", "--n", "9")
    assert code == 0
    assert parse_graph6(out.strip()) == gen_g1(3, 9)


@pytest.mark.parametrize(
    "args",
    [["--family", "g2", "--k", "5", "--n", "39"], ["--family", "pattern", "--pattern", "net"],
     ["--family", "bipartite", "--a", "3", "--b", "5"], ["--family", "petersen"],
     ["--family", "random", "--n", "9", "--p", "0.5", "--seed", "4"], ["--family", "cycle", "--n", "5"],
     ["--family", "complete", "--n", "4"], ["--family", "path", "--n", "3"]],
)
def test_gen_families(args):
    code, out = run("gen", *args)
    assert code == 0 and parse_graph6(out.strip()).n >= 3


def test_gen_formats():
    code, out = run("gen", "--family", "cycle", "--n", "5", "--format", "edgelist")
    assert out == write_edgelist(cycle_graph(5))
    code, out = run("gen", "--family", "cycle", "--n", "5", "--json")
    assert json.loads(out)["graph6"] == "Dhc"


def test_gen_missing_parameter(capsys):
    code, _ = run("gen", "--family", "g1", "--k", "3")
    assert code == 2
    assert "--n" in capsys.readouterr().err


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run()[0] == 2
    assert run("verify")[0] == 2
    assert run("verify", "--theorem", "7", "--counterexamples")[0] == 2
    assert run("solve", "--graph6", "@@@")[0] == 2
    assert run("gen", "--family", "g1", "--k", "0", "--n", "9")[0] == 2


def test_classify(monkeypatch):
    g6 = write_graph6(gen_g1(3, 9))
    code, out = run("classify", "--json", stdin=g6 + "\n", monkeypatch=monkeypatch)
    data = json.loads(out)
    assert code == 0 and data["flags"]["claw_heavy"] and not data["flags"]["z1_free"]
    code, out = run("classify", "--graph6", g6, "--r", "5")
    assert "claw_heavy: no" in out


def test_find(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(write_edgelist(gen_g1(3, 9)))
    code, out = run("find", "--in", str(f), "--pattern", "claw", "--all", "--json")
    assert json.loads(out)["count"] == 3
    code, out = run("find", "--in", str(f), "--pattern", "B")
    assert out.strip() == "free"
    code, out = run("find", "--graph6", "Dhc", "--pattern", "P4", "--json")
    assert json.loads(out)["embedding"]["pattern"] == "P4"


def test_solve_and_oracle():
    code, out = run("solve", "--graph6", "Dhc", "--json")
    data = json.loads(out)
    assert code == 0 and data["outcome"] == "path" and len(data["path"]) == 5
    code, out = run("solve", "--graph6", write_graph6(gen_g1(3, 9)))
    assert out.startswith("unresolved")
    code, out = run("oracle", "--graph6", write_graph6(gen_g1(3, 9)), "--json", "--budget-ms", "50")
    assert json.loads(out)["status"] == "no"
    code, out = run("oracle", "--graph6", "Dhc")
    assert out.startswith("yes")
    code, _ = run("solve", "--graph6", "Cc", "--hypothesis", "p3")  # disconnected
    assert code == 2


def test_verify_theorem_exit_zero():
    code, out = run("verify", "--theorem", "7", "--exhaustive-max-n", "6")
    assert code == 0 and out.startswith("PASS theorem 7")


def test_verify_json_byte_identical():
    args = ("verify", "--theorem", "5", "--exhaustive-max-n", "5", "--sample-count", "20", "--seed", "7", "--json")
    a, b = run(*args)[1], run(*args)[1]
    assert a == b
    assert json.loads(a)["totals"]["oracle_disagreements"] == 0


def test_verify_csv(tmp_path):
    path = tmp_path / "rows.csv"
    code, _ = run("verify", "--theorem", "8", "--exhaustive-max-n", "4", "--csv", str(path))
    rows = list(csv.DictReader(path.open()))
    assert code == 0 and len(rows) == 1 + 1 + 4 + 38
    assert set(rows[0]) == {"source", "index", "n", "graph6", "oracle", "h_claw-p4", "t8"}


def test_verify_counterexamples():
    code, out = run("verify", "--counterexamples")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) > 10


def test_claim_failure_exit_one(monkeypatch):
    bad = CounterexampleReport([Claim("x", "forced mismatch", True, False)])
    monkeypatch.setattr(cli, "verify_counterexamples", lambda: bad)
    code, out = run("verify", "--counterexamples")
    assert code == 1 and out.startswith("FAIL x")


def test_report():
    code, out = run("report", "--exhaustive-max-n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == {"5", "7", "8", "counterexamples"}

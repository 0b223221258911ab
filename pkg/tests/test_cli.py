import io
import json
import re

import pytest

from demazure_paths.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_graph_dot_chain():
    code, out = run("graph", "--n", "2", "--l", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph crystal {") and out.rstrip().endswith("}")
    nodes = re.findall(r'^\s+"(\d+)";$', out, re.M)
    edges = re.findall(r'"(\d+)" -> "(\d+)" \[label="(\d)"\]', out)
    assert sorted(nodes) == ["02", "11", "20"]
    assert sorted(edges) == [("02", "11", "0"), ("11", "02", "1"),
                             ("11", "20", "0"), ("20", "11", "1")]


def test_graph_is_deterministic():
    assert run("graph", "--n", "3", "--l", "2", "--format", "dot") == \
        run("graph", "--n", "3", "--l", "2", "--format", "dot")
    assert run("graph", "--n", "2", "--l", "2", "--tensor") == run("graph", "--n", "2", "--l", "2", "--tensor")


def test_graph_json_n3_l1():
    code, out = run("graph", "--n", "3", "--l", "1")
    js = json.loads(out)
    assert code == 0 and len(js["nodes"]) == 3 and len(js["edges"]) == 3


def test_graph_tensor_has_all_pairs():
    code, out = run("graph", "--n", "2", "--l", "2", "--tensor")
    assert code == 0 and len(json.loads(out)["nodes"]) == 9


def test_act_on_example_word():
    code, out = run("act", "--n", "2", "--l", "2", "--lambda", "0,2",
                    "--word", "11", "01", "01", "01", "00", "--i", "1")
    js = json.loads(out)
    assert code == 0
    assert js["reduced"] == ["-@4", "+@2", "+@1", "+@1"]
    assert js["e"]["factors"] == [[0, 2], [2, 0], [1, 1], [1, 1], [2, 0]]
    assert js["f"]["factors"] == [[0, 2], [1, 1], [1, 1], [0, 2], [2, 0]]


def test_act_rejects_bad_factor():
    code, _ = run("act", "--n", "3", "--l", "2", "--word", "01", "--i", "0")
    assert code == 2


def test_verify_exit_zero():
    code, out = run("verify", "--n", "2", "--l", "2", "--lambda", "2,0", "--k", "6")
    js = json.loads(out)
    assert code == 0 and js["status"] == "pass" and len(js["results"]) == 7


def test_check_reports_kappa_two():
    code, out = run("check", "--assumptions", "--n", "2", "--l", "2", "--lambda", "1,1")
    js = json.loads(out)
    assert code == 0 and js["kappa"] == 2
    assert [r["assumption"] for r in js["reports"]] == ["II", "III", "IV"]


def test_check_claim_false_exits_one():
    code, out = run("check", "--assumptions", "--lambda", "1,1", "--kappa-max", "1")
    assert code == 1
    assert json.loads(out)["reports"][0]["status"] == "fail"


def test_check_perfect():
    code, out = run("check", "--perfect", "--n", "3", "--l", "2")
    assert code == 0 and json.loads(out)["reports"][0]["assumption"] == "I"


def test_kirillov_pass_and_domain():
    code, out = run("kirillov", "--n", "2", "--l", "1", "--L", "2")
    assert code == 0 and json.loads(out)["status"] == "pass"
    assert run("kirillov", "--n", "2", "--l", "1", "--L", "3")[0] == 2


def test_kostka_text():
    code, out = run("kostka", "--n", "2", "--l", "1", "--L", "4", "--format", "text")
    assert code == 0
    assert "K_[3, 1](q) = q^5 + q^4 + q^3" in out


def test_character_and_demazure():
    code, out = run("character", "--lambda", "1,0,0", "--k", "3")
    assert code == 0 and json.loads(out)["size"] == 6
    code, out = run("demazure", "--lambda", "1,0", "--k", "2")
    assert code == 0 and json.loads(out)["size"] == 4


def test_energy_export():
    code, out = run("energy", "--n", "2", "--l", "1")
    assert code == 0 and len(json.loads(out)["entries"]) == 4


@pytest.mark.parametrize("argv", [
    ("verify", "--n", "2"),                                  # missing --lambda
    ("verify", "--lambda", "1,x", "--k", "1"),
    ("verify", "--lambda", "1,1", "--l", "3", "--k", "1"),   # level mismatch
    ("verify", "--lambda", "1,-1", "--k", "1"),
    ("graph", "--n", "1", "--l", "1"),
    ("nonsense",),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_cap_flag_fails_closed():
    assert run("demazure", "--lambda", "2,0", "--k", "6", "--cap", "50")[0] == 2
    assert run("graph", "--n", "3", "--l", "3", "--cap", "5")[0] == 2


def test_cap_env_var(monkeypatch):
    monkeypatch.setenv("DEMAZURE_CAP", "50")
    assert run("demazure", "--lambda", "2,0", "--k", "6")[0] == 2
    monkeypatch.setenv("DEMAZURE_CAP", "100000")
    assert run("demazure", "--lambda", "2,0", "--k", "3")[0] == 0

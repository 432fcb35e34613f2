import json
import subprocess
import sys

import jsonschema
import pytest

from packrho import cli
from packrho.coloring import verify_greedy_packing_coloring, verify_packing_coloring
from packrho.families import generate
from packrho.io import parse_graph6
from packrho.theorems import PATH_WITNESS


@pytest.fixture
def run(capsys, docs_dir):
    schema = json.loads((docs_dir / "run-report.schema.json").read_text())
    theorem_schema = json.loads((docs_dir / "theorem-report.schema.json").read_text())

    def _run(*argv):
        code = cli.main(list(argv))
        report = json.loads(capsys.readouterr().out)
        jsonschema.validate(report, schema)
        for rep in report.get("result", {}).get("reports", []):
            jsonschema.validate(rep, theorem_schema)
        return code, report

    return _run


def test_color_fig1(run):
    code, rep = run("color", "fig1", "--order", "b,a,c,d,e,f")
    assert code == 0
    assert rep["certificates"]["coloring"] == [2, 1, 3, 4, 1, 2]
    assert rep["graph"]["vertex_names"] == list("abcdef")


def test_color_random_is_deterministic(run):
    _, a = run("color", "cycle(9)", "--order", "random", "--seed", "4")
    _, b = run("color", "cycle(9)", "--order", "random", "--seed", "4")
    assert a["result"] == b["result"] and a["certificates"] == b["certificates"]


def test_color_order_file(run, tmp_path):
    f = tmp_path / "order.txt"
    f.write_text("3 2 1 0\n")
    code, rep = run("color", "path(4)", "--order", str(f))
    assert code == 0 and rep["result"]["order"] == [3, 2, 1, 0]


def test_bad_order(run):
    code, rep = run("color", "path(4)", "--order", "0,1")
    assert code == 2 and "permutation" in rep["error"]


@pytest.mark.parametrize("spec, value", [("knn_minus_matching(3)", 4), ("fig3", 7), ("path(7)", 4)])
def test_gamma(run, spec, value):
    code, rep = run("gamma", spec)
    assert code == 0 and rep["result"]["value"] == value
    g = generate(spec)
    colors = rep["certificates"]["coloring"]
    assert max(colors) == value and verify_greedy_packing_coloring(g, colors) is None


@pytest.mark.parametrize("method", ["layering", "orderings", "theorem3"])
def test_gamma_methods(run, method):
    code, rep = run("gamma", "cycle(6)", "--method", method)
    assert code == 0 and rep["result"] == {"value": 4, "method": method, "exact": True}


def test_chi(run):
    code, rep = run("chi", "fig2")
    assert code == 0 and rep["result"]["value"] == 6
    assert verify_packing_coloring(generate("fig2"), rep["certificates"]["coloring"]) is None


def test_size_limit_exit(run):
    code, rep = run("gamma", "path(20)", "--method", "orderings")
    assert code == 3 and rep["partial"] and not rep["ok"]


def test_timeout_partial(run):
    code, rep = run("gamma", "path(24)", "--method", "layering", "--budget", "0.01", "--limit", "40")
    assert code == 3 and rep["partial"]
    assert rep["result"]["exact"] is False
    colors = rep["certificates"]["coloring"]
    assert verify_greedy_packing_coloring(generate("path(24)"), colors) is None


def test_verify_witness(run, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("# path witness\n" + "\n".join(map(str, PATH_WITNESS)) + "\n")
    code, rep = run("verify", "path(29)", str(f), "--greedy")
    assert code == 0 and rep["result"]["valid"] and rep["result"]["colors_used"] == 7


def test_verify_failures(run, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("1\n1\n2\n")
    code, rep = run("verify", "path(3)", str(f))
    assert code == 1 and rep["result"]["reason"] == "packing"
    f.write_text("3\n1\n4\n1\n")
    code, rep = run("verify", "path(4)", str(f), "--greedy")
    assert code == 1 and rep["result"]["reason"] == "greedy"
    f.write_text("1\n")
    code, rep = run("verify", "path(3)", str(f))
    assert code == 1


def test_family_document_round_trip(run, tmp_path):
    code, rep = run("family", "join(path(4),cycle(5))")
    assert code == 0
    assert parse_graph6(rep["result"]["text"]) == generate("join(path(4),cycle(5))")
    f = tmp_path / "g.g6"
    f.write_text(rep["result"]["text"])
    code, rep2 = run("gamma", str(f))
    assert code == 0 and rep2["graph"]["n"] == 9


def test_family_raw(capsys):
    assert cli.main(["family", "path(3)", "--format", "edgelist", "--raw"]) == 0
    assert capsys.readouterr().out == "n 3\n0 1\n1 2\n"


def test_graph_file_formats(run, tmp_path):
    f = tmp_path / "k2.col"
    f.write_text("p edge 2 1\ne 1 2\n")
    code, rep = run("gamma", str(f))
    assert code == 0 and rep["result"]["value"] == 2
    f = tmp_path / "bad.col"
    f.write_text("p edge 2 1\ne 1 9\n")
    code, rep = run("gamma", str(f))
    assert code == 2 and "line 2" in rep["error"]


def test_usage_errors(run, capsys):
    code, rep = run("gamma", "nosuch(3)")
    assert code == 2
    assert cli.main(["frobnicate"]) == 2
    capsys.readouterr()


def test_check_subcommand(run):
    code, rep = run("check", "joins")
    assert code == 0 and rep["result"]["passed"]
    code, rep = run("check", "universal-vertex", "--nmax", "4")
    assert code == 0 and rep["result"]["reports"][0]["instances"] == 1 + 1 + 4 + 38


def test_check_paths_trials(run):
    code, rep = run("check", "paths", "--trials", "200")
    assert code == 0 and rep["result"]["reports"][0]["details"]["random"]["trials"] == 200


def test_check_n7_gate(run):
    code, rep = run("check", "universal-vertex", "--nmax", "7")
    assert code == 2


def test_bench(run):
    code, rep = run("bench", "--n", "200", "--m", "600", "--reps", "1", "--path-n", "50")
    assert code == 0
    assert [row["n"] for row in rep["result"]["path_scaling"]] == [50, 200]


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "packrho.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "packrho" in out.stdout

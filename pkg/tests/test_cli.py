import io
import json
import subprocess
import sys

import pytest

from graphmeasure.cli import run
from graphmeasure.diagrams import parse_diagram
from graphmeasure.graph import parse_graph, shadowed


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_measure_example(graph_files):
    code, out, _ = call("measure", "--graph", graph_files["tree.g"],
                        "--set", "{v1,e1,e2,e1^-1,e2^-1}", "--mode", "generator")
    assert code == 0
    assert out.splitlines()[-1] == "total: 16/3"


def test_integrate_example(graph_files):
    code, out, _ = call("integrate", "--graph", graph_files["triangle.g"],
                        "--expr", "g[e1.e2.e3]", "--mode", "generator")
    assert code == 0
    assert out == "neighborhood g[e1.e2.e3]: {v1,e1,e1^-1,e3,e3^-1}\ntotal: 16/3\n"
    code, out, _ = call("integrate", "--graph", graph_files["triangle.g"],
                        "--expr", "ind{v1,e1.e2.e3}")
    assert out.splitlines()[-1] == "total: 13/3"
    code, out, _ = call("measure", "--graph", graph_files["triangle.g"], "--set", "{v1,e1.e2.e3}")
    assert out.splitlines()[-1] == "total: 13/3"


def test_diagrams_empty(graph_files):
    code, out, _ = call("diagrams", "--graph", graph_files["empty.g"])
    assert code == 0
    assert out == "# total: 0\n"
    code, out, _ = call("diagrams", "--graph", graph_files["tree.g"])
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[:3] == ["v1 -> v1 :", "v2 -> v2 :", "v3 -> v3 :"]


def test_emitted_diagrams_reparse(graph_files):
    g = shadowed(parse_graph(graph_files["triangle.g"].read_text()))
    code, out, _ = call("reduced-diagrams", "--graph", graph_files["triangle.g"])
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(lines) == 33
    for line in lines:
        text = line.split("  #")[0]
        assert str(parse_diagram(text, g)) == text


def test_json_sorted_and_deterministic(graph_files):
    args = ("measure", "--graph", graph_files["tree.g"], "--set", "{v2,e1,e1^-1}", "--json")
    first = call(*args)[1]
    assert first == call(*args)[1]
    data = json.loads(first)
    assert list(data) == sorted(data)
    assert data["total"] == "8/3"


def test_csv(graph_files):
    code, out, _ = call("diagrams", "--graph", graph_files["tree.g"], "--format", "csv")
    assert out.splitlines()[0] == "source,range,trace,length"
    assert "v1,v2,e1,1" in out.splitlines()


def test_extended(graph_files):
    code, out, _ = call("extended-integrate", "--graph", graph_files["loop.g"], "--weights", "on",
                        "--expr", "g[l]", "--max-len", "4")
    assert code == 0
    assert "status: diverging" in out and out.endswith("total: inf\n")
    code, out, _ = call("extended-integrate", "--graph", graph_files["loop.g"], "--weights", "on",
                        "--expr", "ind{l, l.l}")
    assert out.endswith("total: 1/1\n")


def test_shadow_and_isocheck(graph_files, tmp_path):
    code, out, _ = call("shadow", "--graph", graph_files["tree.g"])
    assert "edge e1^-1 v2 v1 weight 1/1" in out
    relabeled = tmp_path / "t2.g"
    relabeled.write_text("vertex a\nvertex b\nvertex c\nedge x b c\nedge y b a\n")
    code, out, _ = call("isocheck", "--graph", graph_files["tree.g"], "--other", relabeled)
    assert code == 0 and "isomorphic: yes" in out
    code, out, _ = call("isocheck", "--graph", graph_files["tree.g"],
                        "--graph2", graph_files["triangle.g"], "--measure", "--json")
    assert json.loads(out) == {"equivalent": False}


def test_subgraph_measure(graph_files):
    code, out, _ = call("subgraph-measure", "--graph", graph_files["triangle.g"],
                        "--vertices", "v1,v2", "--set", "{v1,e1,e1^-1,e2}")
    assert code == 0
    assert out.splitlines()[-1] == "total: 3/1"


@pytest.mark.parametrize("argv, code", [
    (["measure", "--graph", "tree.g", "--set", "{v1,zz}"], 2),
    (["measure", "--graph", "tree.g", "--set", "v1"], 2),
    (["integrate", "--graph", "tree.g", "--expr", "g^0"], 2),
    (["integrate", "--graph", "tree.g", "--expr", "g[v1"], 2),
    (["measure", "--graph", "bad.g", "--set", "{}"], 2),
    (["measure", "--graph", "tree.g", "--set", "{e1.e2}"], 1),
    (["measure", "--graph", "tree.g", "--set", "{e1^-1.e2}", "--mode", "generator"], 1),
    (["measure", "--graph", "missing.g", "--set", "{}"], 1),
    (["extended-integrate", "--graph", "tree.g", "--expr", "g^2"], 1),
    (["extended-integrate", "--graph", "tree.g", "--expr", "g[v1]", "--max-len", "0"], 1),
    (["reduced-diagrams", "--graph", "triangle.g", "--limit", "2"], 1),
    (["measure", "--graph", "tree.g"], 2),
    (["frobnicate"], 2),
    (["measure", "--graph", "tree.g", "--set", "{}", "--mode", "half"], 2),
])
def test_exit_codes(graph_files, argv, code, capsys):
    (graph_files["tree.g"].parent / "bad.g").write_text("vertex a\nedge e a b\n")
    argv = [str(graph_files["tree.g"].parent / a) if a.endswith(".g") else a for a in argv]
    got, _, err = call(*argv)
    assert got == code


def test_module_entry_point(graph_files):
    proc = subprocess.run([sys.executable, "-m", "graphmeasure", "measure", "--graph",
                           str(graph_files["tree.g"]), "--set", "{v1,e1,e2,e1^-1,e2^-1}",
                           "--mode", "generator"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.endswith("total: 16/3\n")

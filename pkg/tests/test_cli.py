from __future__ import annotations

import json
import subprocess
import sys

import pytest

from invgraphs.cli import main, parse_graph
from invgraphs.graph import SimpleGraph

FULVENE_EDGES = "1 2\n1 5\n2 3\n3 4\n4 5\n4 6\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_graph_autodetect(fulvene):
    assert parse_graph("A_") == SimpleGraph.from_edges(2, [(1, 2)])
    assert parse_graph(FULVENE_EDGES) == fulvene
    assert parse_graph("3\n1 2\n") == SimpleGraph.from_edges(3, [(1, 2)])


def test_classify_k2(capsys):
    code, out, err = run(capsys, "classify", "A_")
    assert code == 0 and err == ""
    assert json.loads(out)["classification"]["verdict"] == "bipartite-both"


def test_classify_fulvene_edge_file(capsys, tmp_path):
    p = tmp_path / "fulvene.txt"
    p.write_text(FULVENE_EDGES)
    code, out, _ = run(capsys, "classify", "--input", str(p))
    c = json.loads(out)["classification"]
    assert code == 0
    assert c["verdict"] == "negative-only"
    d = c["negative_signing"]
    assert d in ([1, 1, -1, -1, -1, 1], [-1, -1, 1, 1, 1, -1])


def test_classify_text(capsys, census6):
    (i,) = census6.indices("non-integral")
    from invgraphs.graph import to_graph6
    code, out, _ = run(capsys, "classify", "--format", "text", to_graph6(census6.graphs[i][0]))
    assert code == 0
    assert "non-integral" in out and "det          3" in out


def test_classify_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("A_\n"))
    code, out, _ = run(capsys, "classify", "--input", "-")
    assert code == 0 and json.loads(out)["input"] == "A_"


def test_parse_error(capsys):
    code, out, err = run(capsys, "classify", "A__")
    assert code != 0 and out == "" and "error" in err


def test_invert_k2(capsys):
    code, out, _ = run(capsys, "invert", "--format", "json", "A_")
    r = json.loads(out)
    assert code == 0 and r["weights"] == [[0, 1], [1, 0]] and r["sign"] == 1


def test_invert_fulvene_dot(capsys):
    code, out, _ = run(capsys, "invert", FULVENE_EDGES)
    lines = out.splitlines()
    edges = [ln.strip() for ln in lines if "--" in ln]
    assert code == 0
    assert edges.count("6 -- 6;") == 2
    assert len([e for e in edges if e.split(" -- ")[0] != e.split(" -- ")[1].rstrip(";")]) == 8


def test_invert_not_invertible(capsys, census6):
    from invgraphs.graph import to_graph6
    (i,) = census6.indices("integral-neither")
    code, out, err = run(capsys, "invert", to_graph6(census6.graphs[i][0]))
    assert code != 0 and out == ""
    assert "integral-neither" in err


@pytest.mark.parametrize("n,lines", [(2, 1), (4, 2), (6, 20)])
def test_enumerate(capsys, n, lines):
    code, out, _ = run(capsys, "enumerate", "--n", str(n))
    assert code == 0 and len(out.strip().splitlines()) == lines


def test_enumerate_bad_n(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "5")
    assert code != 0 and out == "" and err


def test_table(capsys, census6):
    code, out, _ = run(capsys, "table", "--n", "6", "--format", "json")
    r = json.loads(out)
    assert code == 0
    assert r["counts"] == census6.counts
    code, out, _ = run(capsys, "table", "--n", "4")
    assert "bipartite-both" in out and "positive-only" in out
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "json")
    assert [row["verdict"] for row in json.loads(out)["rows"]] == ["bipartite-both"]


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", "--n", "6", "--format", "json")
    r = json.loads(out)
    v = r["verdicts"]
    pos = {int(k) for k, x in v.items() if x == "positive-only"}
    assert code == 0
    assert len([i for i in r["maximal_self"] if i in pos]) == 4
    assert len([p for p in r["maximal_mutual"] if set(p) <= pos]) == 2
    assert len([i for i in r["selfinvertible"] if v[str(i)] not in ("bipartite-both",)]) == 2


def test_json_byte_identical(capsys):
    _, a, _ = run(capsys, "relations", "--n", "4", "--format", "json")
    _, b, _ = run(capsys, "relations", "--n", "4", "--format", "json")
    assert a == b


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "invgraphs.cli", "classify", "--format", "text", "A_"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "bipartite-both" in r.stdout

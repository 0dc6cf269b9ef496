import json

import pytest

from cospec.cli import main
from cospec.core import build_graph
from cospec.fixtures import fixture_path
from cospec.graphio import parse_graph, read_graph, write_graph
from cospec.spectrum import CharPoly, graph_char_poly
from oracles import expand
from reference_matrices import SIGNED_GM_8_FACTORS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def gm8_file():
    return str(fixture_path("signed_gm_8"))


@pytest.fixture
def ggm14_file():
    return str(fixture_path("signed_ggm_14"))


@pytest.fixture
def triangles(tmp_path):
    pos, neg = tmp_path / "pos.sg", tmp_path / "neg.sg"
    write_graph(build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]), pos)
    write_graph(build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)]), neg)
    return str(pos), str(neg)


def test_spectrum(capsys, gm8_file):
    code, doc, _ = run(capsys, "spectrum", gm8_file)
    assert code == 0 and doc["exit_code"] == 0
    assert doc["command"] == ["cospec", "spectrum", gm8_file]
    assert list(doc["inputs"]) == [gm8_file] and len(doc["inputs"][gm8_file]) == 64
    coeffs = CharPoly.from_strings(doc["char_poly"]).coeffs
    assert coeffs == expand(*SIGNED_GM_8_FACTORS)
    assert all(isinstance(c, str) for c in doc["char_poly"])
    assert len(doc["eigenvalues_approx"]) == 8


def test_gm_command(capsys, gm8_file, tmp_path):
    out = tmp_path / "switched.sg"
    code, doc, _ = run(capsys, "gm", gm8_file, "--partition", "C:0,1,2 C:3,4,5,6 D:7", "-o", str(out))
    assert code == 0
    assert doc["admissible"] and doc["cospectral"] and doc["conjugation_verified"]
    assert doc["char_poly"] == doc["switched_char_poly"]
    switched = parse_graph(doc["graph"])
    assert read_graph(out) == switched
    assert switched.degree(4) == 2


def test_gm_command_rejects(capsys, gm8_file):
    code, doc, err = run(capsys, "-v", "gm", gm8_file, "--partition", "C:0,1 C:2,3,4,5,6 D:7")
    assert code == 1 and doc["exit_code"] == 1
    assert not doc["admissible"] and doc["violation"]
    assert "not admissible" in err


def test_gm_command_bad_partition(capsys, gm8_file):
    code, doc, err = run(capsys, "gm", gm8_file, "--partition", "C:0,1 C:1,2")
    assert code == 2 and doc is None and "error" in err
    code, _, _ = run(capsys, "gm", gm8_file, "--partition", "Q:1")
    assert code == 2


def test_ggm_command(capsys, ggm14_file):
    code, doc, _ = run(capsys, "ggm", ggm14_file, "--v1", "0,1,2,3,4", "--v2", "5,6,7,8,9")
    assert code == 0
    assert doc["ell"] == -1 and doc["cospectral"] and doc["conjugation_verified"]
    assert {"vertex": 13, "case": "FullMixed21"} in doc["cases"]
    assert doc["partition"]["rest"] == [10, 11, 12, 13]


def test_ggm_size_mismatch(capsys, ggm14_file):
    code, _, _ = run(capsys, "ggm", ggm14_file, "--v1", "0,1", "--v2", "5")
    assert code == 2


def test_search(capsys, gm8_file):
    code, doc, _ = run(capsys, "search", "gm", gm8_file, "--t-max", "2", "--json")
    assert code == 0 and not doc["truncated"]
    assert doc["count"] == len(doc["partitions"]) > 0
    assert "C:0,1,2 C:3,4,5,6 D:7" in [p["partition"] for p in doc["partitions"]]


def test_search_ggm_sizes(capsys, ggm14_file):
    code, doc, _ = run(capsys, "search", "ggm", ggm14_file, "--m", "5")
    assert code == 0 and doc["count"] == 1
    assert doc["partitions"][0]["V1"] == [0, 1, 2, 3, 4]


def test_search_truncated_by_env_budget(capsys, ggm14_file, monkeypatch):
    monkeypatch.setenv("COSPEC_BUDGET_SECS", "0.05")
    code, doc, _ = run(capsys, "search", "gm", ggm14_file, "--t-max", "3")
    assert code == 0 and doc["truncated"]
    monkeypatch.setenv("COSPEC_BUDGET_SECS", "soon")
    code, _, _ = run(capsys, "search", "gm", ggm14_file)
    assert code == 2


def test_gen_roundtrip(capsys, tmp_path):
    out = tmp_path / "g.sg"
    code, doc, _ = run(capsys, "gen", "gm", "--seed", "7", "--sizes", "4,4", "--d", "2", "-o", str(out))
    assert code == 0 and doc["n"] == 10
    code, doc2, _ = run(capsys, "gm", str(out), "--partition", doc["partition"])
    assert code == 0 and doc2["cospectral"]

    out2 = tmp_path / "h.sg"
    code, doc, _ = run(capsys, "gen", "ggm", "--seed", "3", "--m", "3", "-o", str(out2))
    assert code == 0
    v1, v2 = ",".join(map(str, doc["V1"])), ",".join(map(str, doc["V2"]))
    code, doc2, _ = run(capsys, "ggm", str(out2), "--v1", v1, "--v2", v2)
    assert code == 0 and doc2["ell"] == doc["ell"]


def test_gen_infeasible(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "gm", "--seed", "1", "--sizes", "3", "--require-half",
                       "-o", str(tmp_path / "x.sg"))
    assert code == 2 and "half" in err


def test_iso(capsys, triangles, tmp_path):
    pos, neg = triangles
    code, doc, _ = run(capsys, "iso", pos, neg)
    assert code == 0 and doc["isomorphic"] is False and "certificate" not in doc
    code, doc, _ = run(capsys, "iso", pos, neg, "--underlying")
    assert doc["isomorphic"] is True
    other = tmp_path / "sw.sg"
    write_graph(build_graph(3, [(0, 1, -1), (1, 2, -1), (0, 2, 1)]), other)
    code, doc, _ = run(capsys, "iso", pos, str(other))
    assert doc["isomorphic"] and doc["certificate"] == {"perm": [0, 1, 2], "U": [1]}


def test_verify(capsys, triangles, gm8_file, tmp_path):
    pos, neg = triangles
    code, doc, _ = run(capsys, "verify", pos, neg)
    assert code == 1 and doc["cospectral"] is False
    code, doc, _ = run(capsys, "verify", gm8_file, gm8_file)
    assert code == 0 and doc["cospectral"]
    out = tmp_path / "sw.sg"
    run(capsys, "gm", gm8_file, "--partition", "C:0,1,2 C:3,4,5,6 D:7", "-o", str(out))
    code, doc, _ = run(capsys, "verify", gm8_file, str(out))
    assert code == 0 and doc["cospectral"]


def test_pipeline_gm(capsys, gm8_file):
    code, doc, err = run(capsys, "-v", "pipeline", gm8_file, "--mode", "gm", "--t-max", "2")
    assert code == 0
    pings = {p["partition"]: p for p in doc["pings"]}
    assert "C:0,1,2 C:3,4,5,6 D:7" in pings
    hit = pings["C:0,1,2 C:3,4,5,6 D:7"]
    assert hit["cospectral"] and hit["conjugation_verified"] and hit["switching_isomorphic"] is False
    assert "PING" in err


def test_pipeline_ggm(capsys, ggm14_file):
    code, doc, _ = run(capsys, "pipeline", ggm14_file, "--mode", "ggm", "--m", "5")
    assert code == 0 and len(doc["pings"]) == 1
    assert doc["pings"][0]["V1"] == [0, 1, 2, 3, 4]


def test_pipeline_empty_graph(capsys, tmp_path):
    path = tmp_path / "empty.sg"
    write_graph(build_graph(5, []), path)
    code, doc, _ = run(capsys, "pipeline", str(path), "--mode", "gm")
    assert code == 0 and doc["pings"] == [] and doc["candidates"] == 0


def test_usage_errors(capsys, tmp_path):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    bad = tmp_path / "bad.sg"
    bad.write_text("3 5\n")
    code, doc, err = run(capsys, "spectrum", str(bad))
    assert code == 2 and doc is None
    code, _, _ = run(capsys, "spectrum", str(tmp_path / "missing.sg"))
    assert code == 2


def test_written_graphs_reparse(capsys, gm8_file, tmp_path):
    out = tmp_path / "o.sg"
    _, doc, _ = run(capsys, "gm", gm8_file, "--partition", "C:0,1,2 C:3,4,5,6 D:7", "-o", str(out))
    g = read_graph(out)
    assert graph_char_poly(g).to_strings() == doc["switched_char_poly"]

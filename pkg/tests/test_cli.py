from __future__ import annotations

import json
import subprocess
import sys

import pytest

from genuslab.cli import main
from genuslab.graphs import complete_graph, disjoint_union
from genuslab.io import edgelist_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_info_s4(capsys):
    code, out, _ = run(capsys, "group-info", "--catalog", "S4")
    assert code == 0
    assert "order: 24" in out and "center_size: 1" in out and "class_count: 5" in out


def test_group_info_a5_json(capsys):
    code, out, _ = run(capsys, "group-info", "--catalog", "A5", "--format", "json")
    info = json.loads(out)
    assert (info["order"], info["class_count"]) == (60, 5)


def test_group_info_abelian(capsys):
    _, out, _ = run(capsys, "group-info", "--catalog", "Z2")
    assert "is_abelian: true" in out and "not applicable" in out


def test_group_info_unknown_name(capsys):
    code, _, err = run(capsys, "group-info", "--catalog", "nope")
    assert code == 2 and "available:" in err


def test_group_info_bad_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text('{"name": "x",\n "table": [[0, 1], [1, 1]]}')
    code, _, err = run(capsys, "group-info", "--file", str(path))
    assert code == 2 and "g.json" in err


def test_group_info_missing_file(capsys):
    code, _, err = run(capsys, "group-info", "--file", "/nonexistent/g.json")
    assert code == 2 and "cannot read" in err


def test_graph_q8_edgelist(capsys):
    _, out, _ = run(capsys, "graph", "--catalog", "Q8", "--kind", "commuting", "--format", "edgelist")
    assert len(out.splitlines()) == 3


def test_graph_s3_noncommuting(capsys):
    _, out, _ = run(capsys, "graph", "--catalog", "S3", "--kind", "noncommuting")
    assert len(out.splitlines()) == 9


def test_graph_dot_and_json(capsys, tmp_path):
    _, out, _ = run(capsys, "graph", "--catalog", "S3", "--format", "dot")
    assert out.startswith('graph "S3 commuting"')
    path = tmp_path / "g.json"
    run(capsys, "graph", "--catalog", "D8", "--format", "json", "--output", str(path))
    data = json.loads(path.read_text())
    assert data["vertex_count"] == 6 and len(data["edges"]) == 3


def test_graph_invalid_kind(capsys):
    with pytest.raises(SystemExit) as info:
        main(["graph", "--catalog", "S3", "--kind", "bogus"])
    assert info.value.code == 2


def test_surface_kn_genus(capsys):
    _, out, _ = run(capsys, "surface", "--kn", "7", "--genus")
    assert out.strip() == "1"


def test_surface_d14_crosscap(capsys):
    _, out, _ = run(capsys, "surface", "--catalog", "D14", "--crosscap")
    assert out.strip() == "1"


@pytest.fixture
def two_k5(tmp_path):
    path = tmp_path / "2k5.txt"
    path.write_text(edgelist_text(disjoint_union([complete_graph(5)] * 2)))
    return path


def test_surface_2k5_not_projective(capsys, two_k5):
    _, out, _ = run(capsys, "surface", "--edgelist", str(two_k5), "--embeds-nonorientable", "1")
    assert out.strip() == "false"
    _, out, _ = run(capsys, "surface", "--edgelist", str(two_k5), "--embeds-nonorientable", "2")
    assert out.strip() == "true"


def test_surface_full_verdict_json(capsys):
    _, out, _ = run(capsys, "surface", "--kmn", "3", "3", "--format", "json")
    v = json.loads(out)
    assert (v["genus"], v["crosscap"], v["planar"]) == (1, 1, False)


def test_surface_embeds_orientable(capsys):
    _, out, _ = run(capsys, "surface", "--kn", "8", "--embeds-orientable", "1")
    assert out.strip() == "false"


def test_surface_multiple_queries(capsys):
    _, out, _ = run(capsys, "surface", "--kn", "5", "--planar", "--genus", "--crosscap")
    assert out.splitlines() == ["planar: false", "genus: 1", "crosscap: 1"]


def test_surface_timeout_exit_3(tmp_path, capsys):
    # K5 glued to K5 glued to K5: whole-graph search cannot refute S2 quickly
    edges = []
    for block in range(3):
        base = 4 * block
        verts = [base + i for i in range(5)]
        edges += [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]
    path = tmp_path / "three_k5.txt"
    path.write_text("".join(f"{u} {v}\n" for u, v in edges))
    code, out, _ = run(capsys, "surface", "--edgelist", str(path), "--embeds-orientable", "2", "--timeout", "0.01")
    assert code == 3 and out.startswith("unknown")


def test_surface_bad_edgelist(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 x\n")
    code, _, err = run(capsys, "surface", "--edgelist", str(path), "--genus")
    assert code == 2 and ":2:" in err


def test_bad_timeout_rejected():
    with pytest.raises(SystemExit) as info:
        main(["surface", "--kn", "5", "--timeout", "0"])
    assert info.value.code == 2


def test_verify_planar_noncommuting_suite(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.1")
    assert code == 0
    assert json.loads(out)["planar"] == ["D8", "Q8", "S3"]


def test_verify_commuting_subsets_from_files(capsys):
    from genuslab.catalog import order32_paths

    paths = [str(p) for p in order32_paths()]
    code, out, _ = run(capsys, "verify", "--lemma", "2.1", "--input", *paths)
    data = json.loads(out)
    assert code == 0
    assert len(data["records"]) == len(paths)
    assert all(r["ok"] for r in data["records"])


def test_verify_all_report_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code_a, out_a, _ = run(capsys, "verify", "--all", "--output", str(a))
    code_b, _, _ = run(capsys, "verify", "--all", "--output", str(b), "--jobs", "2")
    assert code_a == code_b == 0
    assert json.loads(out_a)["summary"]["mismatched"] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_requires_a_suite():
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_console_script_byte_identical():
    cmd = [sys.executable, "-m", "genuslab.cli", "graph", "--catalog", "A4xZ2", "--format", "dot"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first

from __future__ import annotations

import json

import pytest

from injcolor import gen
from injcolor.cli import main
from injcolor.formats import emit_graph


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (("sub_heawood", gen.subdivide(gen.heawood(), 1)), ("fano", gen.fano_minus_vertex())):
        p = tmp_path / f"{name}.col"
        p.write_text(emit_graph(g))
        paths[name] = p
    return paths


def test_analyze(files, capsys):
    assert main(["analyze", str(files["fano"])]) == 0
    out = capsys.readouterr().out
    assert "mad: 36/13" in out and "mad < 36/13: no" in out


def test_color_and_verify(files, tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["color", str(files["sub_heawood"]), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["palette"] == 5 and min(doc["colors"]) >= 1
    assert main(["verify", str(files["sub_heawood"]), str(out)]) == 0
    # put the first vertex's color on a vertex it shares a neighbour with
    g = gen.subdivide(gen.heawood(), 1)
    w = g.adj(0)[0]
    v = next(x for x in g.adj(w) if x != 0)
    doc["colors"][v] = doc["colors"][0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    capsys.readouterr()
    assert main(["verify", str(files["sub_heawood"]), str(bad)]) == 1
    assert "violation" in capsys.readouterr().out


def test_color_strict_refuses_fano(files):
    assert main(["color", str(files["fano"])]) == 2


def test_color_directory(files, tmp_path):
    outdir = tmp_path / "out"
    assert main(["color", str(files["fano"].parent), "--mode", "force", "--out", str(outdir),
                 "--jobs", "2"]) == 0
    assert sorted(p.name for p in outdir.iterdir()) == ["fano.col.json", "sub_heawood.col.json"]


def test_exact(files, capsys):
    assert main(["exact", str(files["fano"])]) == 0
    assert "chi_i: 6" in capsys.readouterr().out


def test_discharge_document(files, capsys):
    assert main(["discharge", str(files["fano"])]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc)[:3] == ["case", "n", "conserved"]
    assert set(doc["final"]) == {"36/13"} and doc["bank"] == "0/1"
    assert main(["discharge", str(files["sub_heawood"])]) == 4


def test_generate(tmp_path, capsys):
    out = tmp_path / "h.col"
    assert main(["generate", "heawood", "--out", str(out)]) == 0
    assert out.read_text().startswith("p edge 14 21")
    assert main(["generate", "random", "--n", "20", "--delta", "3", "--seed", "1",
                 "--format", "edgelist"]) == 0
    assert capsys.readouterr().out.startswith("# n 20")


def test_exit_codes(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "missing.col")]) == 66
    bad = tmp_path / "loop.col"
    bad.write_text("p edge 2 1\ne 1 1\n")
    assert main(["analyze", str(bad)]) == 65
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["color", "x", "--mode", "bad"])
    assert exc.value.code == 64

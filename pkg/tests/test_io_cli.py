from __future__ import annotations

import subprocess
import sys

import pytest

from wiredcx import corpus
from wiredcx.cli import main
from wiredcx.io import (
    FormatError,
    detect_format,
    format_presentation,
    format_wired,
    parse_face,
    parse_presentation,
    parse_typed_triangles,
    parse_wired,
    parse_word_list,
    read_any_presentation,
    read_wired,
)
from wiredcx.presentation import wired_to_presentation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- formats -----------------------------------------------------------------

def test_parse_face():
    assert parse_face("(1,0)(5,2)(1,0)") == ((1, 0), (5, 2), (1, 0))
    assert parse_face(" ( 1 , 0 ) (5,2)  (1,0) ") == ((1, 0), (5, 2), (1, 0))
    for bad in ["(1,0)(5,2)", "(1,0)(5,2)(1,0)(3,4)", "(1,0)(5,2)(1,x)", "(1,0)x(5,2)(1,0)"]:
        with pytest.raises(FormatError):
            parse_face(bad)


def test_wired_round_trip(v_fixtures):
    for wc in v_fixtures:
        text = format_wired(wc)
        back = parse_wired(text)
        assert back.faces == wc.faces
        assert format_wired(back) == text


def test_fixture_files_echo_exactly():
    for fid in ("V01", "V27", "conv-8"):
        fx = corpus.get(fid)
        assert format_wired(fx.load()) == fx.text()


def test_wired_header_required():
    with pytest.raises(FormatError):
        parse_wired("(1,0)(5,2)(1,0)\n")
    with pytest.raises(FormatError):
        parse_wired("links nosuchgraph\n")


def test_wired_with_graph_file(tmp_path):
    (tmp_path / "tri.graph").write_text("graph tri 3\nedge 0 1\nedge 1 2\nedge 0 2\n")
    (tmp_path / "x.wired").write_text("links tri.graph k33\n")
    wc = read_wired(tmp_path / "x.wired")
    assert [g.n for g in wc.arrangement.links] == [3, 6]


def test_presentation_round_trip(v_fixtures):
    for wc in v_fixtures[:5]:
        p = wired_to_presentation(wc)
        text = format_presentation(p)
        back = parse_presentation(text)
        assert back.faces == p.faces and back.vertices == p.vertices
        assert format_presentation(back) == text
    b2 = corpus.get("b2-45").presentation()
    assert parse_presentation(format_presentation(b2)).vertices == b2.vertices


def test_presentation_errors():
    with pytest.raises(FormatError):
        parse_presentation("1 2 3\n")
    with pytest.raises(FormatError):
        parse_presentation("edges 3\n1 2 4\n")
    with pytest.raises(FormatError):
        parse_presentation("edges 3\n1 2 3\nvertex 1 0 1\n")
    with pytest.raises(FormatError):
        parse_presentation("edges 3\n1 2\n")


def test_typed_triangle_errors():
    with pytest.raises(FormatError):
        parse_typed_triangles("tri 1 2 3 0 1\n")
    with pytest.raises(FormatError):
        parse_typed_triangles("tri 1 2 3 0 1 2\ntri 3 4 5 0 1 3\n")


def test_word_list_parsing():
    p = parse_word_list("[[1,1,2],\n [2,2,1]]")
    assert p.faces == [(1, 1, 2), (2, 2, 1)]
    with pytest.raises(FormatError):
        parse_word_list("[[1,2],[3,4,5]]")


def test_detect_format():
    assert detect_format("links mk16\n") == "wired"
    assert detect_format("# c\nedges 3\n") == "presentation"
    assert detect_format("tri 1 2 3 0 1 2") == "typed-triangle"
    assert detect_format("[[1,2,3]]") == "words"
    with pytest.raises(FormatError):
        detect_format("hello")
    with pytest.raises(FormatError):
        detect_format("")


def test_read_any_presentation_on_fixtures():
    for fid in ("V01", "b2-45", "mk-192"):
        p = read_any_presentation(corpus.get(fid).path)
        assert len(p.faces) in (8, 45, 192)


# -- command line ----------------------------------------------------------

def test_graph_info(capsys):
    code, out, _ = run(capsys, "graph-info", "mk16")
    assert code == 0
    assert out.strip() == "vertices=16 edges=24 regular=3 girth=6 aut=96"
    code, out, _ = run(capsys, "graph-info", "gq22")
    assert "girth=8" in out and "aut=1440" in out
    code, out, _ = run(capsys, "graph-info", "k33")
    assert "girth=4" in out


def test_graph_info_unknown(capsys):
    code, _, err = run(capsys, "graph-info", "nope")
    assert code == 2 and "error" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "canonical", "/no/such/file")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_fixtures_check(capsys):
    code, out, _ = run(capsys, "fixtures", "--check")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 30
    assert all(line.endswith(" ok") for line in lines)
    code, out, _ = run(capsys, "fixtures")
    assert code == 0 and "b2-45 typed-triangle" in out


def test_verify_b2(capsys):
    code, out, _ = run(capsys, "verify", "fixtures/b2-45", "--targets", "k33,gq22")
    assert code == 0
    assert "counts=k33:5,gq22:2" in out and "pass=yes" in out


def test_verify_negative(capsys):
    code, out, _ = run(capsys, "verify", "V01", "--targets", "k33")
    assert code == 1 and "pass=no" in out


def test_isomorphic_and_canonical(capsys, tmp_path, v1):
    from wiredcx.isomorphism import relabel

    moved = tmp_path / "moved.wired"
    moved.write_text(format_wired(relabel(v1, [(i + 2) % 16 for i in range(16)])))
    code, out, _ = run(capsys, "isomorphic", "V01", str(moved), "--witness")
    assert code == 0 and "isomorphic=yes" in out and "witness=" in out
    code, out, _ = run(capsys, "isomorphic", "V01", "V02")
    assert code == 1 and out.strip() == "isomorphic=no"
    _, k1, _ = run(capsys, "canonical", "V01")
    _, k2, _ = run(capsys, "canonical", str(moved))
    assert k1 == k2 and len(k1.strip()) == 8 * 3 * 2 * 4 * 2


def test_incomplete_input_rejected(capsys, tmp_path, v1):
    short = tmp_path / "short.wired"
    short.write_text(format_wired(v1, v1.faces[:-1]))
    assert run(capsys, "canonical", str(short))[0] == 2
    assert run(capsys, "orientable", str(short))[0] == 2


def test_convert(capsys, tmp_path):
    code, out, _ = run(capsys, "convert", "--wired", "conv-8", "--words")
    assert code == 0
    assert out.strip() == "[[1,1,2],[3,1,4],[2,5,4],[2,6,7],[3,3,8],[6,4,5],[6,5,8],[7,7,8]]"
    target = tmp_path / "conv.pres"
    assert run(capsys, "convert", "--wired", "conv-8", "--out", str(target))[0] == 0
    p = parse_presentation(target.read_text())
    assert p.format_words() == out.strip()


def test_infer_vertices_cli(capsys):
    code, out, _ = run(capsys, "infer-vertices", "mk-192")
    assert code == 0 and out.splitlines()[0] == "vertices=24"
    code, out, _ = run(capsys, "infer-vertices", "b2-45")
    assert out.splitlines()[0] == "vertices=7"


def test_orientable_cli(capsys):
    assert run(capsys, "orientable", "V02")[:2] == (0, "orientable=yes\n")
    assert run(capsys, "orientable", "V01")[:2] == (1, "orientable=no\n")
    assert run(capsys, "orientable", "V02", "--strict")[0] == 1


def _stats(out: str) -> dict[str, str]:
    return dict(line.split("=", 1) for line in out.strip().splitlines())


def test_enumerate_cli(capsys, tmp_path):
    out_dir = tmp_path / "classes"
    stats_file = tmp_path / "stats.txt"
    code, out, _ = run(capsys, "enumerate", "--links", "cycle:6,cycle:6", "--out", str(out_dir), "--stats", str(stats_file))
    assert code == 0
    stats = _stats(out)
    assert stats["solutions"] == "301" and stats["classes"] == "11" and stats["truncated"] == "no"
    assert _stats(stats_file.read_text())["classes"] == "11"
    files = sorted(out_dir.iterdir())
    assert len(files) == 11
    for f in files:
        wc = read_wired(f)
        assert wc.is_complete()
        assert format_wired(wc) == f.read_text()


def test_enumerate_cli_is_deterministic(capsys, tmp_path):
    texts = []
    for name in ("a", "b"):
        run(capsys, "enumerate", "--links", "cycle:6,k33", "--dedup", "off", "--out", str(tmp_path / name))
        texts.append([p.read_bytes() for p in sorted((tmp_path / name).iterdir())])
    assert texts[0] == texts[1] and len(texts[0]) > 0


def test_enumerate_cli_options(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--links", "cycle:6", "--dedup", "off", "--max-solutions", "2")
    assert _stats(out)["truncated"] == "yes"
    code, out, _ = run(capsys, "enumerate", "--links", "cycle:3,cycle:6", "--pattern", "1,1,1")
    assert code == 0 and _stats(out)["faces_generated"] == "22"
    assert run(capsys, "enumerate", "--links", "cycle:6", "--pattern", "0,0")[0] == 2
    seed = tmp_path / "seed.wired"
    seed.write_text("links mk16\n(1,0)(5,2)(1,0)\n")
    code, out, _ = run(capsys, "enumerate", "--links", "mk16", "--seed-file", str(seed), "--jobs", "2")
    assert code == 0 and int(_stats(out)["classes"]) >= 1
    bad = tmp_path / "bad.wired"
    bad.write_text("links mk16\n(0,1)(1,0)(0,1)\n")
    assert run(capsys, "enumerate", "--links", "mk16", "--seed-file", str(bad))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wiredcx", "graph-info", "cycle:7"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "vertices=7 edges=7 regular=2 girth=7 aut=14"

from __future__ import annotations

import io
import re

import pytest

from bipolarpaths.cli import main
from bipolarpaths.formats import load_any
from bipolarpaths.render import export_dot, render_triple
from bipolarpaths.encode import PathTriple
from bipolarpaths.errors import Intersecting
from bipolarpaths.schnyder import alpha, validate_schnyder
from bipolarpaths.separating import to_separating

from conftest import E3_PATHS, FIXTURES, fixture_text


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_comments(text: str) -> str:
    return "".join(line + "\n" for line in text.splitlines() if not line.startswith("#"))


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--imax", "2", "--jmax", "2")
    assert code == 0
    rows = out.splitlines()
    assert "1\t1\t4\t4" in rows and "2\t2\t50\t50" in rows
    assert len(rows) == 9
    code, out, _ = run(capsys, "count", "--imax", "1", "--jmax", "1", "--brute")
    assert "1\t1\t4\t4\t4" in out.splitlines()


def test_decode_trivial_triple(capsys, monkeypatch, tmp_path):
    path = tmp_path / "t.triple"
    path.write_text("triple v1\ntype 0 0\nupper\nmiddle\nlower\n")
    code, out, _ = run(capsys, "decode", str(path))
    assert code == 0
    assert out == strip_comments(fixture_text("e1.orientation"))
    monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
    assert run(capsys, "decode", "-")[1] == out


def test_encode_running_example(capsys):
    code, out, _ = run(capsys, "encode", str(FIXTURES / "e3.orientation"))
    assert code == 0
    assert out == strip_comments(fixture_text("e3.triple"))
    assert re.search(r"^upper RRUURRURR$", out, re.M)


def test_decode_then_encode(capsys, tmp_path):
    _, orientation, _ = run(capsys, "decode", str(FIXTURES / "e3.triple"))
    path = tmp_path / "o"
    path.write_text(orientation)
    assert run(capsys, "encode", str(path))[1] == strip_comments(fixture_text("e3.triple"))


def test_roundtrip_command(capsys):
    code, out, _ = run(capsys, "roundtrip", "--max-sum", "3")
    assert code == 0
    assert out.count("ok") == 2


def test_sample_is_reproducible(capsys):
    first = run(capsys, "sample", "--i", "3", "--j", "2", "--seed", "17")[1]
    second = run(capsys, "sample", "--i", "3", "--j", "2", "--seed", "17")[1]
    assert first == second and first.startswith("triple v1\ntype 3 2\n")
    code, orientation, _ = run(capsys, "sample", "--i", "3", "--j", "2", "--seed", "17", "--orientation")
    assert code == 0 and orientation.startswith("map v1")


def test_schnyder_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "schnyder-encode", str(FIXTURES / "wood1.wood"))
    assert code == 0 and out == "dyckpair v1\nn 1\nlower UD\nupper UD\n"
    code, wood_text, _ = run(capsys, "schnyder-decode", str(FIXTURES / "pair3.dyckpair"))
    assert code == 0
    assert validate_schnyder(load_any(wood_text)) == 3
    path = tmp_path / "w"
    path.write_text(wood_text)
    assert run(capsys, "schnyder-encode", str(path))[1] == strip_comments(fixture_text("pair3.dyckpair"))


def test_verify_reports(capsys, tmp_path):
    for name in ("e1.orientation", "e3.orientation", "e3.triple", "wood1.wood", "pair3.dyckpair"):
        code, out, _ = run(capsys, "verify", str(FIXTURES / name))
        assert code == 0 and "FAIL" not in out
    bad = tmp_path / "bad"
    bad.write_text("map v1 2 1\nalpha 1 2\nvertex 1\nvertex 2\npoles 1 0\ntails 1\n")
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "FAIL\tbipolar\tExtraSource" in out


def test_errors_exit_with_class_name(capsys, tmp_path):
    upper, middle, lower = E3_PATHS
    path = tmp_path / "x.triple"
    path.write_text(f"triple v1\ntype 6 3\nupper {upper}\nmiddle {lower}\nlower {middle}\n")
    code, _, err = run(capsys, "decode", str(path))
    assert code == 1 and "Intersecting" in err
    code, _, err = run(capsys, "encode", str(tmp_path / "missing"))
    assert code == 1 and "FormatError" in err


def test_render_commands(capsys):
    code, out, _ = run(capsys, "render", str(FIXTURES / "e3.triple"))
    assert code == 0 and out.count("<polyline") == 3
    code, out, _ = run(capsys, "render", str(FIXTURES / "e1.orientation"))
    assert code == 0 and out.startswith("digraph")


def test_svg_output():
    empty = render_triple(PathTriple.from_steps("", "", ""))
    assert "<polyline" not in empty and empty.count("<circle") == 6
    assert "(-1,1)" in empty and "(1,-1)" in empty
    svg = render_triple(PathTriple.from_steps(*E3_PATHS))
    assert "(5,4)" in svg and "(6,3)" in svg and "(7,2)" in svg
    assert svg == render_triple(PathTriple.from_steps(*E3_PATHS))
    upper, middle, lower = E3_PATHS
    with pytest.raises(Intersecting):
        render_triple(PathTriple.from_steps(upper, lower, middle))


def test_dot_output(e1, e2, wood1):
    dot = export_dot(e1)
    assert dot.count("->") == 1 and dot.count("[pole=") == 2
    dot = export_dot(to_separating(e2))
    assert dot.count("->") == 6
    assert dot.count('color="blue"') == 3 and dot.count('color="red"') == 3
    assert dot.count('class="black"') == 2 and dot.count('class="white"') == 3
    dot = export_dot(alpha(wood1))
    assert dot.count('class="black"') == 3 and dot.count('class="white"') == 3
    wood_dot = export_dot(wood1)
    assert wood_dot.count('color="green"') == 1 and wood_dot.count("dir=none") == 3

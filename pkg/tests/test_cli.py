import io
import json
import subprocess
import sys

import pytest

from petalkit.cli import main
from petalkit.grid import minimal_torus_grid
from petalkit.invariants import torus_alexander


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_petal_gen_golden(capsys):
    code, out = run(capsys, ["petal-gen", "--r", "3"])
    assert code == 0
    assert out == '{"levels":[1,7,3,6,2,5,9,4,8]}\n'


def test_theorem_golden(capsys):
    code, out = run(capsys, ["theorem", "--r", "5"])
    assert code == 0
    assert out == '{"lower":13,"upper":13,"verified":true}\n'


def test_verify_lemma_report(capsys):
    code, out = run(capsys, ["verify-lemma", "--n", "2", "--json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["command"] == "verify-lemma"
    assert rep["inputs"] == {"n": 2}
    assert rep["checks"] and all(c["pass"] for c in rep["checks"])
    assert rep["outputs"]["verified"] is True


def test_lower_bound(capsys):
    assert run(capsys, ["lower-bound", "--alpha", "8"]) == (0, '{"alpha":8,"lower":9}\n')
    assert run(capsys, ["lower-bound", "--torus", "5", "7"]) == (0, '{"alpha":12,"lower":13}\n')
    code, out = run(capsys, ["lower-bound", "--alpha", "2"])
    assert code == 2 and "error" in json.loads(out)


def test_alexander_from_each_source(capsys, monkeypatch, tmp_path):
    want = torus_alexander(3, 5).to_json("t")
    braid = {"strands": 3, "letters": [[1, 1], [2, 1], [1, 1]] * 2 + [[1, 1], [2, 1]] * 2}
    grid = minimal_torus_grid(3, 5).to_json()
    petal = {"levels": [1, 7, 3, 6, 2, 5, 9, 4, 8]}
    for source, data in (("braid", braid), ("grid", grid), ("petal", petal)):
        code, out = run(capsys, ["alexander", source], json.dumps(data), monkeypatch)
        assert code == 0
        assert json.loads(out) == want
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    code, out = run(capsys, ["alexander", "grid", "--in", str(path)])
    assert code == 0 and json.loads(out) == want


def test_alexander_from_pd(capsys, monkeypatch):
    pd = {"crossings": [[1, 4, 2, 5, "-"], [3, 6, 4, 1, "-"], [5, 2, 6, 3, "-"]]}
    code, out = run(capsys, ["alexander", "pd"], json.dumps(pd), monkeypatch)
    assert code == 0
    assert json.loads(out) == {"var": "t", "terms": [[0, 1], [1, -1], [2, 1]]}


def test_jones_and_crossing_cap(capsys, monkeypatch):
    trefoil = json.dumps({"strands": 2, "letters": [[1, 1]] * 3})
    code, out = run(capsys, ["jones", "braid"], trefoil, monkeypatch)
    assert code == 0
    assert json.loads(out) == {"var": "A", "terms": [[-16, -1], [-12, 1], [-4, 1]]}
    code, out = run(capsys, ["jones", "braid", "--max-crossings", "2"], trefoil, monkeypatch)
    assert code == 1
    assert json.loads(out)["error"]["type"] == "CrossingCapExceeded"


def test_malformed_input_exits_2(capsys, monkeypatch):
    for source, text in (
        ("grid", "not json"),
        ("grid", "[1, 2]"),
        ("grid", '{"size": 2, "x": [1, 2], "o": [1, 2]}'),
        ("braid", '{"strands": 3, "letters": [[5, 1]]}'),
        ("petal", '{"levels": [1, 2, 3, 4]}'),
        ("pd", '{"crossings": [[1, 2, 3, 4, "+"]]}'),
    ):
        code, out = run(capsys, ["alexander", source], text, monkeypatch)
        assert code == 2, (source, text)
        assert set(json.loads(out)["error"]) == {"type", "message"}


def test_bad_flags_exit_2(capsys):
    assert main(["petal-gen", "--r", "4"]) == 2
    assert main(["petal-gen"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["verify-lemma", "--n", "0"]) == 2
    capsys.readouterr()


def test_link_braid_is_a_failed_check(capsys, monkeypatch):
    code, out = run(capsys, ["alexander", "braid"], '{"strands": 2, "letters": [[1, 1], [1, 1]]}', monkeypatch)
    assert code == 1
    assert json.loads(out)["error"]["type"] == "NotAKnotError"


def test_render_to_file_and_stdout(capsys, monkeypatch, tmp_path):
    petal = json.dumps({"levels": [1, 4, 2, 5, 3]})
    target = tmp_path / "rose.svg"
    code, out = run(capsys, ["render", "petal", "--out", str(target)], petal, monkeypatch)
    assert code == 0
    svg = target.read_text()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert json.loads(out) == {"svg": str(target), "bytes": len(svg.encode())}
    code, out = run(capsys, ["render", "petal"], petal, monkeypatch)
    assert json.loads(out)["svg"] == svg
    for source, data in (
        ("grid", minimal_torus_grid(2, 3).to_json()),
        ("braid", {"strands": 3, "letters": [[1, 1], [2, -1]]}),
    ):
        code, out = run(capsys, ["render", source], json.dumps(data), monkeypatch)
        svg = json.loads(out)["svg"]
        assert code == 0
        assert svg.startswith("<svg") and ("<line" in svg or "<path" in svg)
    code, out = run(capsys, ["render", "petal", "--as-grid"], petal, monkeypatch)
    assert code == 0 and "<svg" in json.loads(out)["svg"]
    code, out = run(capsys, ["render", "pd"], '{"crossings": []}', monkeypatch)
    assert code == 2


def test_out_flag_for_json_commands(capsys, tmp_path):
    target = tmp_path / "perm.json"
    assert main(["petal-gen", "--r", "5", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text()) == {"levels": [1, 10, 4, 9, 3, 8, 2, 7, 13, 6, 12, 5, 11]}


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["theorem", "--r", "3", "--json"], None),
        (["render", "grid"], json.dumps(minimal_torus_grid(3, 5).to_json())),
        (["render", "petal"], '{"levels": [1, 7, 3, 6, 2, 5, 9, 4, 8]}'),
    ],
)
def test_repeated_runs_are_byte_identical(argv, stdin):
    cmd = [sys.executable, "-m", "petalkit", *argv]
    outs = [subprocess.run(cmd, input=stdin, capture_output=True, text=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]


def test_svg_files_are_byte_identical(tmp_path):
    data = json.dumps(minimal_torus_grid(3, 5).to_json())
    blobs = []
    for k in range(2):
        target = tmp_path / f"g{k}.svg"
        subprocess.run(
            [sys.executable, "-m", "petalkit", "render", "grid", "--out", str(target)],
            input=data, capture_output=True, text=True, check=True,
        )
        blobs.append(target.read_bytes())
    assert blobs[0] == blobs[1]

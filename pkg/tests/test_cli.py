import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from circlegroup.cli import main


def _write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_localize_identity(tmp_path, capsys):
    src = _write(tmp_path / "id.json", {"mean": 0.0, "cos": [], "sin": []})
    code, out = _run(capsys, "localize", "--input", src)
    assert code == 0
    assert out["stats"]["residual"] == 0.0 and out["stats"]["length"] == 3
    assert out["schema_version"] == 1 and out["config"]["modes"] == 128


def test_localize_with_grid_dump(tmp_path, capsys):
    src = _write(tmp_path / "d.json", {"mean": 0.01, "cos": [0.01], "sin": [0.005]})
    grid = tmp_path / "grid.csv"
    code, out = _run(capsys, "localize", "--input", src, "--grid-csv", str(grid))
    assert code == 0 and out["supports_ok"] and out["stats"]["residual"] < 1e-8
    rows = list(csv.reader(grid.open()))
    assert rows[0] == ["x", "phi", "dphi"] and len(rows) == 1025


def test_rotation_word_cli(capsys):
    code, out = _run(capsys, "rotation-word", "--alpha", "3.14159265")
    assert code == 0
    assert [f["kind"] for f in out["word"]] == ["S", "T", "S"]
    assert np.allclose([f["param"] for f in out["word"]], [-1, 1, -1], atol=1e-8)


def test_dilation_and_iwasawa(tmp_path, capsys):
    code, out = _run(capsys, "dilation-word", "--tau", "1.386294361119890")
    assert code == 0 and out["residual"] < 1e-12
    src = _write(tmp_path / "g.json", {"m": [[1.0, 0.0], [1.0, 1.0]]})
    code, out = _run(capsys, "iwasawa", "--input", src)
    assert out["iwasawa"]["p"] == pytest.approx(0.5) and out["residual"] < 1e-12
    code, out = _run(capsys, "ts-word", "--input", src)
    assert code == 0 and out["residual"] < 1e-10


def test_moebius_word_cli(tmp_path, capsys):
    src = _write(tmp_path / "g.json", {"m": [[1.0, 0.5], [0.0, 1.0]]})
    out_path = tmp_path / "out.json"
    assert main(["moebius-word", "--input", src, "--output", str(out_path)]) == 0
    report = json.loads(out_path.read_text())
    assert report["stats"]["residual"] < 1e-6 and "word" not in report


def test_slice_cli(tmp_path, capsys):
    src = _write(tmp_path / "r.json", {"mean": 3.0})
    code, out = _run(capsys, "slice", "--input", src)
    assert code == 0 and out["count"] == 64 and out["residual"] < 1e-12


def test_cover_cocycle_bott(tmp_path, capsys):
    half = {"m": [[0.0, 1.0], [-1.0, 0.0]], "lift0": np.pi}
    code, out = _run(capsys, "cover", "--input", _write(tmp_path / "c.json", [half, half]))
    assert out["cover"]["lift0"] == pytest.approx(2 * np.pi)
    assert np.allclose(out["trivialization"], -np.eye(2))
    r = {"m": [[np.cos(3 * np.pi / 4), np.sin(3 * np.pi / 4)], [-np.sin(3 * np.pi / 4), np.cos(3 * np.pi / 4)]]}
    code, out = _run(capsys, "cocycle", "--input", _write(tmp_path / "z.json", [r, r, r]))
    assert out["table"][0][1] == -1.0 and out["identity_defect"] == 0.0
    diffeos = [{"mean": 0.0, "cos": [0.2]}, {"mean": 0.0, "sin": [0.2]}, {"mean": 0.1, "cos": [0.0, 0.05]}]
    code, out = _run(capsys, "bott", "--input", _write(tmp_path / "b.json", diffeos))
    assert code == 0 and out["identity_defect"] < 1e-8


def test_exit_codes(tmp_path, capsys):
    code, out = _run(capsys, "localize", "--input", str(tmp_path / "missing.json"))
    assert code == 1 and out["error"]["type"] == "UsageError"
    code, out = _run(capsys, "localize", "--input", _write(tmp_path / "bad.json", {"mean": 0.0, "cos": [3.0]}))
    assert code == 1 and out["error"]["type"] == "NotADiffeomorphism"
    code, out = _run(capsys, "localize", "--input", _write(tmp_path / "far.json", {"mean": 1.0}))
    assert code == 1 and out["error"]["type"] == "OutsideNeighborhood"
    code, out = _run(capsys, "moebius-word", "--input", _write(tmp_path / "big.json", {"m": [[1.0, 500.0], [0.0, 1.0]]}))
    assert code == 2 and out["error"]["type"] == "ModeOverflow"
    code, out = _run(capsys, "rotation-word")
    assert code == 1
    code, out = _run(capsys, "iwasawa", "--input", str(tmp_path / "g.json"), "--safety", "2")
    assert code == 1


def test_config_overrides(tmp_path, capsys):
    cfg = _write(tmp_path / "cfg.json", {"tail_tol": 1e-11})
    code, out = _run(capsys, "dilation-word", "--tau", "0", "--config", cfg, "--modes", "64", "--margin", "0.2")
    assert out["config"]["tail_tol"] == 1e-11 and out["config"]["modes"] == 64 and out["config"]["margin_fraction"] == 0.2
    code, out = _run(capsys, "dilation-word", "--tau", "0", "--config", _write(tmp_path / "x.json", {"nope": 1}))
    assert code == 1


def test_check_suite_subset(capsys):
    code, out = _run(capsys, "check", "--suite", "moebius", "--seed", "3")
    assert code == 0 and out["passed"] and all(r["passed"] for r in out["results"])


@pytest.mark.slow
def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "circlegroup", "rotation-word", "--alpha", "1.0"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["length"] == 3

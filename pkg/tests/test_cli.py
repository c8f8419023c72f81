import json
import os
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from g2hecke.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_json_row_counts(capsys):
    code, out, _ = run(capsys, "tables", "--family", "long-depth-zero", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert len(doc["tables"][0]["rows"]) == 7


def test_tables_all_families(capsys):
    code, out, _ = run(capsys, "tables", "--family", "all", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [len(t["rows"]) for t in doc["tables"]] == [7, 6, 4, 7]


def test_tables_text_mode(capsys):
    code, out, _ = run(capsys, "tables", "--family", "short-positive", "--format", "text")
    assert code == EXIT_OK
    assert "T_alpha,pi'" in out


def test_json_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, "tables", "--format", "json")
    _, out2, _ = run(capsys, "tables", "--format", "json")
    assert out1 == out2
    _, chk1, _ = run(capsys, "check", "--part", "extquot", "--format", "json", "--seed", "7")
    _, chk2, _ = run(capsys, "check", "--part", "extquot", "--format", "json", "--seed", "7")
    assert chk1 == chk2


def test_check_green_suite(capsys):
    code, out, _ = run(capsys, "check", "--part", "tables", "--part", "blocks")
    assert code == EXIT_OK
    assert "0 failures" in out


def test_check_fails_on_tampered_golden(tmp_path, capsys):
    src = resources.files("g2hecke").joinpath("data/tables")
    for fam in ("long_depth_zero", "long_positive", "short_depth_zero", "short_positive"):
        shutil.copy(str(src / f"{fam}.json"), tmp_path / f"{fam}.json")
    doc = json.loads((tmp_path / "long_depth_zero.json").read_text())
    doc["rows"][0]["classification"]["W_O"] = "trivial"
    (tmp_path / "long_depth_zero.json").write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", "--part", "tables", "--golden-dir", str(tmp_path))
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in out


def test_mu_text(capsys):
    code, out, _ = run(capsys, "mu", "--case", "long-IV")
    assert code == EXIT_OK
    assert "W_O: trivial" in out
    assert "mu = c" in out
    code, out, _ = run(capsys, "mu", "--case", "long-I", "--format", "json")
    doc = json.loads(out)
    assert doc["labels"] == {"lambda": 3, "lambda_star": 1}
    assert doc["W_O"] == "order-2"


def test_hecke_subcommand(capsys):
    code, out, _ = run(capsys, "hecke", "--weights", "2,2", "--degree-bound", "2")
    assert code == EXIT_OK
    assert "[ok] quadratic" in out
    code, _, err = run(capsys, "hecke", "--weights", "nope")
    assert code == EXIT_USAGE


def test_extquot_subcommand(capsys):
    code, out, _ = run(capsys, "extquot", "--torsion-level", "3", "--gamma", "inversion", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 3 and doc["crossed_product_count"] == 3


def test_extquot_model_file(tmp_path, capsys):
    model = {
        "points": [0, 1, 2, 3],
        "translation": {"0": 1, "1": 2, "2": 3, "3": 0},
        "gamma": {"0": 0, "1": 3, "2": 2, "3": 1},
        "cocycles": {},
    }
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model))
    code, out, _ = run(capsys, "extquot", "--model", str(path), "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    # fixed points 0 and 2 contribute two characters each, the free orbit {1,3} one
    assert doc["count"] == 5
    assert doc["crossed_product_count"] == 5


def test_config_file_overrides_flags(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("family = short-depth-zero\nformat = json\n")
    code, out, _ = run(capsys, "--config", str(cfg), "tables", "--family", "long-positive", "--format", "text")
    assert code == EXIT_OK
    doc = json.loads(out)  # json because config overrides the flag
    assert doc["tables"][0]["family"] == "short-depth-zero"


def test_config_errors(tmp_path, capsys):
    code, _, err = run(capsys, "--config", str(tmp_path / "missing.cfg"), "tables")
    assert code == EXIT_USAGE
    bad = tmp_path / "bad.cfg"
    bad.write_text("no equals sign here\n")
    code, _, err = run(capsys, "--config", str(bad), "tables")
    assert code == EXIT_USAGE
    unknown = tmp_path / "unknown.cfg"
    unknown.write_text("mystery = 1\n")
    code, _, err = run(capsys, "--config", str(unknown), "tables")
    assert code == EXIT_USAGE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["tables", "--family", "bogus"])
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    src = str(Path(__file__).resolve().parent.parent / "src")
    env = dict(os.environ)
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "g2hecke", "mu", "--case", "short-I"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == EXIT_OK
    assert "W_O: order-2" in proc.stdout


def test_allowed_lusztig_override(tmp_path, capsys):
    allowed = tmp_path / "allowed.json"
    allowed.write_text(json.dumps({"allowed_pairs": [[9, 9]]}))
    code, out, _ = run(
        capsys, "check", "--part", "blocks", "--allowed-lusztig", str(allowed)
    )
    assert code == EXIT_CHECK_FAILED
    assert "lusztig False" in out

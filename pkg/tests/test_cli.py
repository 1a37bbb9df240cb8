import json
import subprocess
import sys

import pytest

from psitable.catalog import list_entries
from psitable.cli import main

EG = 0.5772156649015329


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) == len(list_entries())
    assert lines[0].split()[0] == list_entries()[0]
    assert "Gradshteyn" in out


def test_list_filter(capsys):
    code, out, _ = run(capsys, "list", "--filter", "4.241.*")
    assert code == 0 and all(l.startswith("4.241.") for l in out.splitlines())


def test_show_includes_erratum(capsys):
    code, out, _ = run(capsys, "show", "3.311.10")
    assert code == 0
    assert "section:" in out and "note:" in out and "sixth-edition" in out


def test_show_json(capsys):
    code, out, _ = run(capsys, "show", "3.442.3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["id"] == "3.442.3" and doc["notes"]


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "3.427.2", "--format", "json")
    rec = json.loads(out)["records"][0]
    assert code == 0 and rec["verdict"] == "pass"
    assert rec["closed"] == pytest.approx(EG, rel=1e-14)


def test_verify_with_params(capsys):
    code, out, _ = run(capsys, "verify", "3.311.8", "--param", "b=2", "--param", "mu=0.3")
    assert code == 0 and "PASS" in out


def test_verify_control_is_expected_failure(capsys):
    code, out, _ = run(capsys, "verify", "3.311.10-sixth-edition", "--param", "p=1", "--param", "q=2")
    assert code == 0 and "FAIL [control]" in out


def test_verify_all_filter(capsys):
    code, out, _ = run(capsys, "verify-all", "--filter", "4.241.*", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    # 4.241.6 is not part of the catalog, so ten ids match
    assert len({r["id"] for r in doc["records"]}) == 10
    assert doc["totals"]["fail"] == 0


def test_verify_all_csv_to_file(capsys, tmp_path):
    path = tmp_path / "report.csv"
    code, out, _ = run(capsys, "verify-all", "--filter", "3.2*", "--format", "csv", "--output", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0].startswith("id,") and len(lines) > 1


def test_identical_runs_identical_bytes(capsys):
    args = ("verify-all", "--filter", "3.31*", "--format", "json", "--seed", "11")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    a, b = json.loads(first), json.loads(second)
    a["meta"].pop("wall_time")
    b["meta"].pop("wall_time")
    assert a == b


def test_tolerance_flags_recorded(capsys):
    code, out, _ = run(capsys, "verify", "3.463", "--rel-tol", "1e-6", "--abs-floor", "1e-9", "--format", "json")
    rec = json.loads(out)["records"][0]
    assert rec["rel_tol"] == 1e-6 and rec["abs_floor"] == 1e-9


def test_unexpected_failure_exit_code(capsys):
    # an absurd tolerance turns ordinary rounding into a verdict failure
    code, _, _ = run(capsys, "verify", "4.241.11", "--rel-tol", "1e-300", "--abs-floor", "1e-300")
    assert code == 1


def test_invalid_param_is_skipped_and_unexpected(capsys):
    code, out, _ = run(capsys, "verify", "3.231.1", "--param", "p=1.5")
    assert code == 1 and "SKIPPED" in out


def test_properties(capsys):
    code, out, _ = run(capsys, "properties")
    assert code == 0 and "vanishing-integral" in out


def test_export(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    assert main(["export", "--output", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert [e["id"] for e in doc["entries"]] == list_entries()


@pytest.mark.parametrize(
    "argv, code",
    [
        (["show", "9.999"], 2),
        (["verify", "nope"], 2),
        (["verify-all", "--filter", "zzz*"], 2),
        ([], 64),
        (["frobnicate"], 64),
        (["verify-all", "--samples", "0"], 64),
        (["verify-all", "--rel-tol", "-1"], 64),
        (["verify", "3.463", "--param", "oops"], 64),
        (["verify-all", "--format", "xml"], 64),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "psitable", "verify", "3.435.3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "PASS" in proc.stdout

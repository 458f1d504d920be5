from __future__ import annotations

import json
import subprocess
import sys

import pytest

from toruschar.cli import main, render_table


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kclass_trefoil(capsys):
    code, out, _ = run(capsys, "kclass", "--m", "2", "--n", "3", "--rank", "3", "--group", "sl")
    assert code == 0
    assert out.strip() == "3L^2-5L+4"


def test_census_table_7_4(capsys):
    code, out, _ = run(capsys, "census", "--m", "7", "--n", "4", "--rank", "3", "--group", "sl", "--format", "table")
    assert code == 0
    summary = out.strip().splitlines()[-2]
    assert summary == "1 TotallyReducible, 3 PartialType1, 3 PartialType2, 15 IrreducibleDim4, 63 IrreducibleDim2"


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--m", "2", "--n", "3", "--rank", "3", "--group", "pgl", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["group"] == "PGL"
    assert data["kclass"] == {"coeffs": [2, -3, 3]}
    assert [s["kind"] for s in data["strata"]] == ["TotallyReducible", "PartialType2", "IrreducibleDim2"]


def test_recover_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "kclass", "--m", "5", "--n", "8", "--rank", "3", "--group", "sl", "--format", "json")
    f = tmp_path / "k.json"
    f.write_text(out)
    code, out, _ = run(capsys, "recover", "--kclass-file", str(f))
    assert code == 0 and out.strip() == "(5,8)"
    f.write_text(json.dumps({"coeffs": [0, 0, 1]}))
    code, out, _ = run(capsys, "recover", "--kclass-file", str(f), "--format", "json")
    assert code == 1 and "error" in json.loads(out)


def test_verify_writes_report(capsys, tmp_path):
    out_file = tmp_path / "sub" / "report.json"
    code, out, _ = run(capsys, "verify", "--grid", "6", "--rank", "2,3", "--budget", "100000", "--out", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["ok"] and data["summary"]["fail"] == 0
    names = {c["name"] for c in data["checks"]}
    assert {"max_dim_count", "dim2_count", "n_identities", "stratum_sum_pgl", "gl_relation",
            "recover_roundtrip", "line_count", "alexander"} <= names
    pairs = [(c["m"], c["n"]) for c in data["checks"]]
    assert pairs == sorted(pairs)
    assert not list(out_file.parent.glob("*.tmp"))


def test_verify_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "--grid", "5", "--out", str(a))
    run(capsys, "verify", "--grid", "5", "--out", str(b))
    assert a.read_text() == b.read_text()


def test_verify_failure_exit_code(capsys, monkeypatch):
    from toruschar import kclass as kc

    monkeypatch.setattr(kc, "recover_mn", lambda c: (0, 0))
    code, out, _ = run(capsys, "verify", "--grid", "4", "--rank", "3")
    assert code == 1
    assert "FAIL recover_roundtrip" in out


def test_budget_too_small_is_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--grid", "5", "--budget", "10")
    assert code == 0 and "skipped" in out and " 0 skipped" not in out


def test_alexander_and_curves(capsys):
    assert run(capsys, "alexander", "--m", "2", "--n", "3")[1].strip() == "t^2-t+1"
    code, out, _ = run(capsys, "curves", "--m", "3", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert len(data["curves"]) == 8
    code, out, _ = run(capsys, "curves", "--m", "3", "--n", "5", "--k", "3", "--format", "json")
    assert code == 2 and "InvalidK" in json.loads(out)["error"]


def test_quotient_basis(capsys):
    code, out, _ = run(capsys, "quotient-basis", "--weights", "1,2,2", "--r", "3")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3 and lines[0].startswith("u1 = ")
    code, out, _ = run(capsys, "quotient-basis", "--weights", "1,2", "--r", "3", "--format", "json")
    assert json.loads(out)["verified"] is True
    code, _, err = run(capsys, "quotient-basis", "--weights", "1,x", "--r", "3")
    assert code == 2 and "usage" in err


def test_rep_check(capsys):
    code, out, _ = run(capsys, "rep-check", "--m", "3", "--n", "4", "--seed", "7", "--samples", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["seed"] == 7
    assert {r["kind"] for r in data["labels"]} == {"dim4", "dim2", "rank2"}


def test_lines(capsys):
    code, out, _ = run(capsys, "lines", "--m", "3", "--n", "4")
    assert code == 0 and out.strip() == "lhs=45 rhs=45 roots=45"


def test_usage_errors(capsys):
    assert run(capsys, "census", "--m", "2")[0] == 2
    assert run(capsys, "kclass", "--m", "2", "--n", "4", "--rank", "3", "--group", "sl")[0] == 2
    assert run(capsys, "kclass", "--m", "2", "--n", "3", "--rank", "5", "--group", "sl")[0] == 2
    code, out, _ = run(capsys, "kclass", "--m", "1", "--n", "3", "--rank", "3", "--group", "sl", "--format", "json")
    assert code == 2 and "UnknotError" in json.loads(out)["error"]


def test_config_file_flag(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("budget = 10\n")
    code, out, _ = run(capsys, "--config", str(cfg), "verify", "--grid", "4")
    assert "skipped" in out and " 0 skipped" not in out


def test_render_table():
    t = render_table(("a", "bb"), [(1, 2), (333, 4)])
    assert t.splitlines()[1] == "| a   | bb |"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "toruschar", "kclass", "--m", "2", "--n", "3", "--rank", "2", "--group", "gl"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "2L^2-3L+1"

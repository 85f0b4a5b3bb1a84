import json
import os
import subprocess
import sys

import pytest

from resbinar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_failing_law(capsys):
    code, out, _ = run(capsys, "check", "A1", "--law", "lj")
    assert code == 1
    assert out.strip() == "lj: Fails: x=b y=a z=b (lhs=top, rhs=a)"


def test_check_holding_law_and_expr(capsys):
    code, out, _ = run(capsys, "check", "A1", "--law", "fm", "--expr", "x*y = y*x")
    assert code == 0
    assert out.count("Holds") == 2


def test_check_errors(capsys):
    assert run(capsys, "check", "A1", "--law", "nope")[0] == 2
    assert run(capsys, "check", "A1", "--expr", "x * * y")[0] == 2
    assert run(capsys, "check", "no/such/file.alg", "--law", "fm")[0] == 2
    assert run(capsys, "check", "A1")[0] == 2


def test_laws_and_list(capsys):
    code, out, _ = run(capsys, "laws", "A7")
    assert code == 0 and "profile {-} lp=yes rp=yes" in out
    code, out, _ = run(capsys, "laws", "--list")
    assert code == 0 and "rule {jr,ml} => lj" in out


def test_residuals(capsys, tmp_path):
    target = tmp_path / "a1.alg"
    code, out, _ = run(capsys, "residuals", "A1", "--out", str(target))
    assert code == 0 and "ldiv" in out
    data = json.loads(target.read_text())
    assert data["ldiv"][2] == ["a", "a", "a", "top"]


def test_frame(capsys):
    code, out, _ = run(capsys, "frame", "A1")
    assert code == 0
    assert "P0 = {a,top}" in out and "P1 = {b,top}" in out
    assert "lj: frame fails, algebra fails" in out
    code, out, _ = run(capsys, "frame", "A1", "--variant", "literal")
    assert code in (0, 1)


def test_frame_non_distributive(capsys, tmp_path):
    m3 = {"name": "m3", "elements": ["bot", "a", "b", "c", "top"],
          "covers": [["bot", "a"], ["bot", "b"], ["bot", "c"],
                     ["a", "top"], ["b", "top"], ["c", "top"]],
          "mult": [["bot"] * 5 for _ in range(5)]}
    path = tmp_path / "m3.alg"
    path.write_text(json.dumps(m3))
    assert run(capsys, "frame", str(path))[0] == 2


def test_search_writes_models(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--size", "4", "--distributive", "--satisfies",
                       "fm,mf,rm,ml", "--fails", "lj", "--out", str(tmp_path))
    assert code == 0 and "found" in out
    assert sorted(p.name for p in tmp_path.iterdir())[0] == "model001.alg"


def test_search_budget_and_config_errors(capsys):
    assert run(capsys, "search", "--size", "5", "--budget", "0")[0] == 2
    assert run(capsys, "search", "--size", "4", "--satisfies", "fm", "--fails", "fm")[0] == 2


def test_explore_and_poset(capsys, tmp_path):
    code, out, _ = run(capsys, "explore", "--size", "3")
    assert code == 0 and out.count("exhausted, none found") == 6
    dot = tmp_path / "p.dot"
    code, out, _ = run(capsys, "poset", "--dot", str(dot))
    assert code == 0 and "nodes: 29" in out and dot.read_text().startswith("digraph")
    code, out, _ = run(capsys, "poset", "--commutative")
    assert "nodes: 7" in out


def test_bundle_export(capsys, tmp_path):
    code, out, _ = run(capsys, "bundle", "export", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [f"A{i}.alg" for i in range(1, 8)]
    code, out, _ = run(capsys, "check", str(tmp_path / "A1.alg"), "--law", "fm")
    assert code == 0


def test_corrupted_bundle_fails_verify(capsys, tmp_path):
    run(capsys, "bundle", "export", str(tmp_path))
    path = tmp_path / "A2.alg"
    data = json.loads(path.read_text())
    data["mult"][2] = ["bot", "bot", "b", "b"]
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify-paper", "--max-size", "3", "--bundle-dir", str(tmp_path))
    assert code == 1
    assert "ITEM bundle-integrity FAIL" in out


def test_console_entry_point():
    env = dict(os.environ)
    out = subprocess.run([sys.executable, "-m", "resbinar", "check", "A7", "--law", "lp"],
                         capture_output=True, text=True, env=env)
    assert out.returncode == 0
    assert out.stdout.startswith("lp: Holds")

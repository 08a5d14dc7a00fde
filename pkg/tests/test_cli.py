import json
import subprocess
import sys

import pytest

from vermahowe.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    code, out, _ = call(capsys, "dim", "--n", "4", "--l", "2")
    assert code == 0
    assert out.splitlines()[-1].split() == ["4", "2", "6"]
    code, out, _ = call(capsys, "dim", "--n", "3", "--json")
    doc = json.loads(out)
    assert [r["dim"] for r in doc["rows"]] == [1, 2, 3, 4, 5]


def test_matrix_identity(capsys):
    code, out, _ = call(capsys, "matrix", "--n", "2", "--l", "0", "--word", "s1 s1")
    doc = json.loads(out)
    assert code == 0 and doc["entries"] == [["1"]]


def test_matrix_specialized_with_params(tmp_path, capsys):
    params = tmp_path / "p.txt"
    params.write_text("# point\nv = 3/2\nU1 = 5/7\n")
    code, out, _ = call(capsys, "matrix", "--n", "2", "--l", "1", "--word", "s1", "--colors", "1,1",
                        "--params", str(params))
    doc = json.loads(out)
    assert code == 0 and doc["entries"] == [["-49/25"]] and doc["point"]["U1"] == "5/7"
    # only the colors in use are parameters
    params.write_text("v = 3/2\nU1 = 5/7\nU2 = 11\n")
    code, _, err = call(capsys, "matrix", "--n", "2", "--l", "1", "--word", "s1", "--colors", "1,1",
                        "--params", str(params))
    assert code == 2 and "U2" in err


def test_matrix_colors_file(tmp_path, capsys):
    f = tmp_path / "colors.txt"
    f.write_text("1\n1\n2\n")
    code, out, _ = call(capsys, "matrix", "--n", "3", "--l", "1", "--word", "s1", "--colors-file", str(f))
    assert code == 0 and json.loads(out)["colors"] == [1, 1, 2]


def test_handlebody_option(capsys):
    code, out, _ = call(capsys, "matrix", "--n", "3", "--l", "1", "--word", "s2", "--handlebody", "1")
    assert code == 0 and json.loads(out)["colors"] == [1, 2, 2]


def test_simplicity(capsys):
    code, out, _ = call(capsys, "simplicity", "--n", "3", "--l", "2", "--partition", "[1][2][3]",
                        "--trials", "3", "--seed", "7")
    assert code == 0 and out.strip().endswith("verdict: simple certified")


@pytest.mark.parametrize("argv", [
    ["matrix", "--n", "3", "--l", "1", "--word", "s3"],
    ["matrix", "--n", "3", "--l", "1", "--word", "s1"],
    ["matrix", "--n", "3", "--l", "1", "--word", "s1", "--colors", "1,2"],
    ["matrix", "--n", "2", "--l", "1", "--word", "s1 s1", "--colors-file", "/nonexistent"],
    ["simplicity", "--n", "3", "--l", "1", "--partition", "[1,2"],
    ["dim", "--n", "9"],
    ["dim", "--n", "3", "--l", "6"],
    ["dim"],
    ["verify", "nonsense"],
])
def test_bad_input_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_force_lifts_guardrail(capsys):
    code, out, _ = call(capsys, "dim", "--n", "2", "--l", "6", "--force")
    assert code == 0 and out.splitlines()[-1].split() == ["2", "6", "1"]


def test_bad_params_file(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("v 2\n")
    code, _, err = call(capsys, "verify", "yang-baxter", "--params", str(p), "--l", "1", "--deg", "1")
    assert code == 2 and "key = value" in err


def test_failed_check_exit_1(capsys, monkeypatch):
    from vermahowe import cli, qgroup

    def broken(n, sample, K, colors=None):
        rep = qgroup.CheckReport("forced")
        rep.record("x", sample[0], {0: 1})
        return rep

    monkeypatch.setattr(cli.qgroup, "commuting_actions_report", broken)
    code, out, err = call(capsys, "verify", "commuting-actions", "--n", "2", "--samples", "2")
    assert code == 1 and "FAIL" in out and "failure manifest" in err


@pytest.mark.parametrize("check", ["braid-relations", "yang-baxter", "commuting-actions", "casimir",
                                   "infbraid", "duality"])
def test_verify_prints_property(capsys, check):
    extra = {"commuting-actions": ["--n", "2", "--samples", "5"], "casimir": ["--n", "2", "--c-max", "1"],
             "infbraid": ["--n", "3", "--samples", "5"], "duality": ["--n", "3", "--t-max", "3"],
             "braid-relations": ["--l", "1"], "yang-baxter": ["--l", "1", "--deg", "1"]}[check]
    code, out, _ = call(capsys, "verify", check, *extra)
    assert code == 0 and out.startswith("property: ") and out.strip().endswith("PASS")


def test_env_seed(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("VERMAHOWE_SEED", "17")
    code, out, _ = call(capsys, "simplicity", "--n", "2", "--l", "1", "--trials", "1", "--json")
    assert json.loads(out)["trials"][0]["seed"] == 17
    monkeypatch.setenv("VERMAHOWE_SEED", "x")
    code, _, _ = call(capsys, "dim", "--n", "2")
    assert code == 2


def test_output_file_and_entry_point(tmp_path):
    out = tmp_path / "doc.json"
    res = subprocess.run([sys.executable, "-m", "vermahowe.cli", "dim", "--n", "3", "--l", "1", "-o", str(out)],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(out.read_text())["rows"][0]["dim"] == 2

import json
import subprocess
import sys


def run_cli(*args, check=True):
    proc = subprocess.run(
        [sys.executable, "-m", "glhecke", *args],
        capture_output=True,
        text=True,
    )
    if check and proc.returncode != 0:
        raise AssertionError(f"cli failed: {proc.returncode}\n{proc.stderr}")
    return proc


def test_enumerate_hecke_csv():
    out = run_cli("enumerate", "--lambda", "1,0", "--side", "hecke", "--format", "csv").stdout
    assert out.splitlines() == [
        "segments,k,central_character",
        '{1};{0},2,"1,0"',
        '"{0,1}",2,"0,1"',
    ]


def test_enumerate_real_rows():
    out = run_cli(
        "enumerate", "--lambda", "2,1,1,0", "--side", "real", "--min-level", "4",
        "--format", "csv",
    ).stdout
    rows = out.splitlines()[1:]
    assert len(rows) == 6  # five level-4 classes plus one of level 5
    out_hecke = run_cli(
        "enumerate", "--lambda", "2,1,1,0", "--side", "hecke", "--format", "csv"
    ).stdout
    assert len(out_hecke.splitlines()[1:]) == 5


def test_enumerate_deterministic_bytes():
    args = ("enumerate", "--lambda", "3,2,1,0", "--side", "real", "--format", "json")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_enumerate_rejects_bad_lambda():
    proc = run_cli("enumerate", "--lambda", "1,x", "--side", "real", check=False)
    assert proc.returncode != 0


def test_gamma_and_zero():
    out = json.loads(
        run_cli("gamma", "--factors", "gl2(2,1/2);gl2(2,-1/2)", "--k", "4").stdout
    )
    assert out["hecke"] == {
        "segments": [{"start": "0", "len": 2}, {"start": "-1", "len": 2}]
    }
    assert out["central_character"] == ["0", "1", "-1", "0"]
    out = json.loads(run_cli("gamma", "--factors", "gl2(4,0)", "--k", "3").stdout)
    assert out == {"k": 3, "level": 4, "result": "zero"}
    proc = run_cli("gamma", "--factors", "gl2(4,0)", "--k", "5", check=False)
    assert proc.returncode != 0


def test_dim_and_oracle():
    out = json.loads(run_cli("dim", "--factors", "gl2(2,1/2);gl2(2,-1/2)", "--k", "4").stdout)
    assert out["dim"] == 6
    out = json.loads(
        run_cli("oracle", "--factors", "gl2(2,1/2);gl2(2,-1/2)", "--k", "4").stdout
    )
    assert out["multiplicity"] == 6


def test_oracle_dump_csv():
    out = run_cli("oracle", "--s", "1", "--m", "0", "--k", "3").stdout
    lines = out.splitlines()
    assert lines[0] == "tuple,multiplicity"
    assert set(lines[1:]) == {"V(1),3", "V(3),1"}


def test_module_dump_and_quotient():
    out = json.loads(run_cli("module", "--steinberg", "4", "--quotient").stdout)
    assert out["dim"] == 1
    assert out["quotient_dim"] == 1
    assert out["central_character"] == ["-3/2", "-1/2", "1/2", "3/2"]
    out = json.loads(run_cli("module", "--segments", "{1/2};{-1/2}", "--quotient").stdout)
    assert out["dim"] == 2
    assert out["quotient_dim"] == 1
    out = json.loads(run_cli("module", "--segments", "({0,1},{-1,0})").stdout)
    assert out["dim"] == 6


def test_quotient_command():
    out = json.loads(run_cli("quotient", "--segments", "{3};{1}").stdout)
    assert out == {"std_dim": 2, "quotient_dim": 2}


def test_module_rejects_malformed_spec():
    proc = run_cli("module", "--segments", "{0,2}", check=False)
    assert proc.returncode != 0
    assert "segment" in proc.stderr


def test_psi_json():
    out = json.loads(
        run_cli("psi", "--lambda", "2,1,0", "--segments", "{0,1,2}").stdout
    )
    assert out["blocks"] == [1, 1, 1]
    assert out["flattening"]["arcs"] == [[1, 3]]
    assert out["class_size"] == 1


def test_psi_text():
    out = run_cli(
        "psi", "--lambda", "2,1,0", "--segments", "{0,1,2}", "--format", "text"
    ).stdout
    assert "flattening: 1 + 1" in out


def test_verify_exit_codes():
    proc = run_cli("verify", "--suite", "relations", "--max-k", "3")
    report = json.loads(proc.stdout)
    assert report["ok"] is True
    # literal bijection check fails honestly at a weight with an
    # off-support level-n class
    proc = run_cli("verify", "--suite", "bijection", "--lambda", "2,0,0", check=False)
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["failures"][0]["off_support"]
    proc = run_cli("verify", "--suite", "bijection", "--lambda", "2,1,0")
    assert json.loads(proc.stdout)["ok"] is True


def test_out_file_written_atomically(tmp_path):
    target = tmp_path / "rows.csv"
    run_cli(
        "enumerate", "--lambda", "1,0", "--side", "hecke", "--format", "csv",
        "--out", str(target),
    )
    assert target.read_text().startswith("segments,k,central_character")
    assert list(tmp_path.iterdir()) == [target]

import json
import subprocess
import sys

from jacktorus.cli import main

RUN = [sys.executable, "-m", "jacktorus.cli"]


def run_cli(*args):
    return subprocess.run([*RUN, *args], capture_output=True, text=True)


def test_count_matches_closed_form(capsys):
    code = main(["count", "--N", "4", "--n", "3"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["count"] == 92
    assert doc["command"] == "count"
    assert set(doc) == {"command", "config", "version", "results"}


def test_tableaux_report(capsys):
    code = main(["--shape", "3,1", "tableaux"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["count"] == 3
    contents = {tuple(t["content"]) for t in doc["results"]["tableaux"]}
    assert contents == {(2, 1, -1, 0), (2, -1, 1, 0), (-1, 2, 1, 0)}


def test_rep_subcommand(capsys):
    code = main(["--shape", "2,1", "rep", "--word", "2,1,3"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["matrix"] == [["1/2", "3/4"], ["1", "-1/2"]]


def test_nsjp_dump(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/4", "nsjp", "--alpha", "1,0,0", "--tableau", "0"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["jumps"] == 1
    assert doc["results"]["steps"] == 2
    assert len(doc["results"]["spectral"]) == 3


def test_nsjp_laurent_dump(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/4", "nsjp", "--alpha=-1,0,1", "--tableau", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    exps = [tuple(rec["exponent"]) for rec in doc["results"]["poly"]]
    assert all(sum(e) == 0 for e in exps)
    assert min(min(e) for e in exps) < 0


def test_gram_subcommand(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/4", "gram", "--max-degree", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["offdiagonal_nonzero"] == 0
    assert doc["results"]["norms_match"] is True


def test_coeffs_persists_store(tmp_path, capsys):
    store = tmp_path / "s.json"
    code = main(["--shape", "2,1", "--kappa", "1/4", "coeffs", "--grade", "2", "--store", str(store)])
    capsys.readouterr()
    assert code == 0 and store.exists()
    code = main(["--shape", "2,1", "--kappa", "1/4", "coeffs", "--grade", "3", "--store", str(store)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["sealed_grade"] == 3


def test_pole_excluded_exit_code():
    out = run_cli("--shape", "3,1", "--kappa=-1/2", "coeffs", "--grade", "1")
    assert out.returncode == 1
    doc = json.loads(out.stdout)
    assert doc["error"]["type"] == "PoleExcluded"


def test_usage_error_exit_code():
    out = run_cli("frobnicate")
    assert out.returncode == 2


def test_kernel_and_identity(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/5", "kernel", "--max-order", "2", "--samples", "6"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0 and doc["results"]["passed"]
    code = main(["identity", "--N", "3", "--max-order", "4", "--samples", "5"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0 and doc["results"]["passed"]


def test_diffsys_subcommand(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/4", "diffsys", "--points", "3"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["euler_and_integrability_exact"] is True
    assert doc["results"]["gamma"] == "0"


def test_diffsys_loop_stays_clear_for_four_variables(capsys):
    # regression: the loop base point must keep pairwise separation for any N
    code = main(["--shape", "3,1", "--kappa", "1/4", "diffsys", "--points", "2", "--loop-steps", "2000"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["results"]["loop_defect"] < 1e-6


def test_verify_green(capsys):
    code = main(["--shape", "2,1", "--kappa", "1/4", "verify", "--max-degree", "2"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert all(c["passed"] for c in doc["results"]["checks"])


def test_reports_are_byte_identical():
    args = ("--shape", "2,1", "--kappa", "1/5", "kernel", "--max-order", "2", "--samples", "5")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"shape": "3,1", "kappa": "1/4", "seed": 11}))
    code = main(["--config", str(cfg), "tableaux"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0 and doc["results"]["count"] == 3
    # flag overrides the config shape
    code = main(["--config", str(cfg), "--shape", "2,1", "tableaux"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["count"] == 2


def test_out_file_written(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["--out", str(out), "count", "--N", "2", "--n", "5"])
    capsys.readouterr()
    assert code == 0
    assert json.loads(out.read_text())["results"]["count"] == 2

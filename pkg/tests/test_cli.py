import json
import subprocess

import sympow.cli as cli
from sympow.cli import run
from sympow.verify import VerifyReport


def test_betti_json():
    code, text, out = run(["betti", "--genus", "2", "--k", "2"])
    assert code == 0 and out is None
    payload = json.loads(text)
    assert [h["rank"] for h in payload["homology"]] == [1, 4, 7, 4, 1]
    assert payload["method"] == "betti-count"
    assert payload["euler"] == 1


def test_cover_homology_generic():
    code, text, _ = run(["cover-homology", "--genus", "2", "--k", "2",
                         "--method", "generic", "--trials", "5", "--seed", "1"])
    assert code == 0
    payload = json.loads(text)
    assert [h["rank"] for h in payload["homology"]] == [0, 0, 1, 0, 0]
    assert payload["prime"] == 1000003 and payload["trials"] == 5 and payload["seed"] == 1


def test_cover_homology_snf():
    code, text, _ = run(["cover-homology", "--genus", "2", "--k", "2",
                         "--method", "snf", "--N", "2"])
    assert code == 0
    payload = json.loads(text)
    assert payload["method"] == "integer-snf"
    assert payload["N"] == 2
    assert [h["rank"] for h in payload["homology"]] == [1, 4, 22, 4, 1]
    assert payload["euler"] == 16


def test_wedge_homology():
    code, text, _ = run(["wedge-homology", "--arity", "4", "--k", "2",
                         "--method", "generic", "--seed", "2"])
    assert code == 0
    payload = json.loads(text)
    assert [h["rank"] for h in payload["homology"]] == [0, 0, 3]
    assert payload["case"] == "wedge" and payload["g"] == 4


def test_quotient_homology_positions():
    code, text, _ = run(["quotient-homology", "--genus", "2", "--k", "2", "--seed", "1"])
    assert code == 0
    payload = json.loads(text)
    by_degree = {h["degree"]: h["rank"] for h in payload["homology"]}
    assert by_degree == {0: 0, 1: 0, 2: 3}


def test_verify_suite_exit_zero():
    code, text, _ = run(["verify", "--suite", "lemma-cohomology", "--genus", "2", "--seed", "7"])
    assert code == 0
    payload = json.loads(text)
    assert payload["pass"] is True
    assert {c["name"] for c in payload["checks"]} >= {
        "sigma-boundary-identities", "lambda-sigma-nonzero-finite-cover"}


def test_verify_failure_exit_one(monkeypatch):
    failing = VerifyReport("stub", {})
    failing.add("stub-check", False, "synthetic failure")
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [failing])
    code, text, _ = run(["verify", "--suite", "dga", "--genus", "2"])
    assert code == 1
    assert json.loads(text)["pass"] is False


def test_usage_errors_exit_two():
    code, text, _ = run(["betti", "--genus", "0", "--k", "2"])
    assert code == 2 and "usage error" in text
    code, text, _ = run(["wedge-homology", "--arity", "2", "--k", "5"])
    assert code == 2
    code, text, _ = run(["cover-homology", "--k", "2"])
    assert code == 2  # missing --genus
    code, _, _ = run(["no-such-command"])
    assert code == 2
    code, _, _ = run(["betti", "--genus", "2"])
    assert code == 2  # missing --k


def test_formats():
    code, text, _ = run(["betti", "--genus", "1", "--k", "1", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[0] == "degree,rank,torsion"
    assert text.splitlines()[1] == "0,1,"
    code, text, _ = run(["betti", "--genus", "1", "--k", "1", "--format", "text"])
    assert code == 0 and "euler = 0" in text
    code, text, _ = run(["verify", "--suite", "lemma-torus", "--arity", "4", "--k", "2",
                         "--format", "csv", "--seed", "1"])
    assert code == 0
    assert text.splitlines()[0] == "suite,check,pass,detail"


def test_export_text_and_out_file(tmp_path):
    code, text, out = run(["export", "--genus", "1", "--k", "1", "--case", "cover",
                           "--out", str(tmp_path / "c.txt")])
    assert code == 0 and out == str(tmp_path / "c.txt")
    assert text.startswith("SYMPOW-COMPLEX v1 case=cover g=1 k=1")
    code, text, _ = run(["export", "--arity", "2", "--k", "2", "--case", "wedge",
                         "--format", "json"])
    payload = json.loads(text)
    assert payload["case"] == "wedge" and [m["rank"] for m in payload["modules"]] == [1, 2, 1]
    code, text, _ = run(["export", "--genus", "2", "--k", "2", "--case", "q"])
    assert code == 0 and "case=q g=2 k=2" in text.splitlines()[0]


def test_determinism_across_runs_and_threads():
    argv = ["cover-homology", "--genus", "2", "--k", "2", "--method", "generic",
            "--trials", "4", "--seed", "3"]
    runs = [run(argv + ["--threads", str(t)])[1] for t in (1, 2, 8)]
    runs.append(run(argv)[1])
    assert len(set(runs)) == 1
    argv = ["verify", "--suite", "theorem-main", "--genus", "2", "--k", "2", "--seed", "5"]
    assert run(argv)[1] == run(argv)[1]


def test_console_script_entry_point(tmp_path):
    # the installed script writes --out files and honors the exit contract
    out = tmp_path / "report.json"
    proc = subprocess.run(
        ["sympow", "betti", "--genus", "1", "--k", "2", "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    payload = json.loads(out.read_text())
    assert [h["rank"] for h in payload["homology"]] == [1, 2, 2, 2, 1]
    proc = subprocess.run(["sympow", "betti", "--genus", "-3", "--k", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2

import csv
import io
import json
import math

import pytest

from schurprep.cli import EXIT_CAP, EXIT_INVARIANT, EXIT_OK, EXIT_VALIDATION, main


def task_file(tmp_path, **doc):
    path = tmp_path / "task.json"
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_map_boson_row(tmp_path, capsys):
    t = task_file(tmp_path, d=3, N=3, statistics="boson", terms=[{"occupations": [2, 1, 0], "re": 1.0}])
    code, out, _ = run(capsys, "map", t)
    assert code == EXIT_OK
    assert "GT (3,0;2)" in out
    code, out, _ = run(capsys, "map", t, "--json")
    doc = json.loads(out)
    assert doc["terms"][0]["gt"] == "(3,0;2)"
    assert doc["terms"][0]["lambda"] == [3, 0, 0]


def test_map_empty_terms(tmp_path, capsys):
    t = task_file(tmp_path, d=3, N=3, statistics="boson", terms=[])
    code, _, err = run(capsys, "map", t)
    assert code == EXIT_VALIDATION and "terms" in err


def test_map_fermion_overfull(tmp_path, capsys):
    t = task_file(tmp_path, d=2, N=3, statistics="fermion", terms=[{"occupations": [2, 1], "re": 1.0}])
    code, _, err = run(capsys, "map", t)
    assert code == EXIT_VALIDATION and err


def test_map_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{")
    code, _, _ = run(capsys, "map", str(path))
    assert code == EXIT_VALIDATION


def test_prepare_slater(tmp_path, capsys):
    t = task_file(tmp_path, d=3, N=3, statistics="fermion", terms=[{"occupations": [1, 1, 1], "re": 1.0}])
    code, out, _ = run(capsys, "prepare", t, "--show")
    assert code == EXIT_OK
    assert "nonzero=6" in out
    amps = [line.split()[1] for line in out.splitlines()[1:]]
    assert all(abs(abs(float(a)) - 1 / math.sqrt(6)) < 1e-11 for a in amps)


def test_prepare_boson_export(tmp_path, capsys):
    t = task_file(tmp_path, d=3, N=3, statistics="boson", terms=[{"occupations": [0, 0, 3], "re": 1.0}])
    dest = tmp_path / "state.csv"
    code, _, _ = run(capsys, "prepare", t, "--export", str(dest))
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(dest.read_text())))
    assert rows == [["index", "re", "im"], ["222", "1", "0"]]
    dest_json = tmp_path / "state.json"
    assert run(capsys, "prepare", t, "--export", str(dest_json))[0] == EXIT_OK
    assert json.loads(dest_json.read_text())["amplitudes"][0]["index"] == "222"


def test_prepare_over_cap(tmp_path, capsys):
    t = task_file(tmp_path, d=3, N=3, statistics="boson", terms=[{"occupations": [0, 0, 3], "re": 1.0}])
    code, _, err = run(capsys, "prepare", t, "--cap", "20")
    assert code == EXIT_CAP and "cap" in err


def test_selftest_reports_every_check(tmp_path, capsys):
    report = tmp_path / "golden.json"
    code, out, _ = run(capsys, "selftest", "--json", str(report))
    doc = json.loads(report.read_text())
    assert doc["total"] == 27
    assert "Schur-Weyl dimension identity" in out
    assert "CG cascade vs GT chain" in out
    # exit status tracks the reference-table outcome
    assert code == (EXIT_OK if doc["passed"] == 27 else EXIT_INVARIANT)


def test_estimate_fixture(tmp_path, capsys):
    code, out, _ = run(capsys, "estimate", "--d", "50", "--N", "10", "--L", "50", "--eps", "1e-4", "--mode", "oaa")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["prep_te"] == 162
    assert doc["r_star"] == 6
    assert doc["te_block"] == 3397
    assert doc["te_schur_inverse"] == 373679074481
    assert doc["te_total"] == doc["te_block"] + doc["te_schur_inverse"]
    assert doc["Q_peak"] == max(doc["Q_block"], doc["Q_schur"])


def test_estimate_modes_differ_only_in_block_fields(capsys):
    _, a, _ = run(capsys, "estimate", "--d", "5", "--N", "4", "--L", "200", "--mode", "RUS")
    _, b, _ = run(capsys, "estimate", "--d", "5", "--N", "4", "--L", "200", "--mode", "OAA")
    a, b = json.loads(a), json.loads(b)
    differ = {k for k in a if a[k] != b[k]}
    assert differ <= {"mode", "attempts", "r_star", "reflection_te", "exact_amplification_needed",
                      "te_block", "te_total", "Q_block", "Q_peak"}
    assert a["per_attempt_te"] == b["per_attempt_te"]


def test_estimate_bad_epsilon(capsys):
    code, _, err = run(capsys, "estimate", "--d", "3", "--N", "3", "--L", "50", "--eps", "0.5")
    assert code == EXIT_VALIDATION and "epsilon" in err


def test_estimate_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"b_r": 9, "epsilon_prep": 1e-6}))
    _, out, _ = run(capsys, "estimate", "--d", "3", "--N", "3", "--L", "50", "--config", str(cfg))
    doc = json.loads(out)
    assert doc["prep_R"] == 20
    cfg.write_text(json.dumps({"nope": 1}))
    assert run(capsys, "estimate", "--d", "3", "--N", "3", "--L", "50", "--config", str(cfg))[0] == EXIT_VALIDATION


def test_sweep_single_point(capsys):
    code, out, _ = run(capsys, "sweep", "--d", "3", "--N", "3", "--L", "50", "--eps", "1e-4", "--mode", "OAA")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and rows[0]["te_schur_inverse"] == "4383158"


def test_sweep_crossover_and_determinism(tmp_path, capsys):
    dest = tmp_path / "fig.csv"
    argv = ["sweep", "--d", "50", "--N", "10", "--L", "1000,100000,10000000,1000000000,100000000000",
            "--eps", "1e-4", "--crossover", "--out", str(dest)]
    code, _, err = run(capsys, *argv)
    assert code == EXIT_OK
    first = dest.read_bytes()
    assert "crossover OAA" in err and "L*=10462363649" in err
    rows = list(csv.DictReader(io.StringIO(first.decode())))
    assert len(rows) == 10
    oaa = [r for r in rows if r["mode"] == "OAA"]
    line = int(oaa[0]["te_schur_inverse"])
    assert int(oaa[0]["te_block"]) < line < int(oaa[-1]["te_block"])
    run(capsys, *argv)
    assert dest.read_bytes() == first


def test_sweep_rejects_unsorted_axis(capsys):
    code, _, err = run(capsys, "sweep", "--L", "100,50")
    assert code == EXIT_VALIDATION and "increasing" in err


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        main(["frobnicate"])

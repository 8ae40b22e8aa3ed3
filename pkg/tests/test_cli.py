import csv
import io
import json
import subprocess
import sys

import pytest

from gcs_overlap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_overlap_su2_example(capsys):
    code, out, _ = run(capsys, "overlap", "--algebra", "su2", "--rep", "j=1/2", "--tau", "0,0", "--tau-prime", "1,0")
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == {"tau", "tau_prime", "value_re", "value_im", "magnitude", "terms_used", "tail_estimate"}
    assert rec["magnitude"] == pytest.approx(0.7071067811865476, abs=1e-12)


def test_overlap_equal_points(capsys):
    code, out, _ = run(capsys, "overlap", "--algebra", "su11", "--rep", "k=3/2",
                       "--tau", "0.3,-0.2", "--tau-prime", "0.3,-0.2")
    assert code == 0 and json.loads(out)["magnitude"] == pytest.approx(1.0, abs=1e-14)


def test_overlap_domain_error(capsys):
    code, _, err = run(capsys, "overlap", "--algebra", "su11", "--rep", "k=1/2", "--tau", "0,0", "--tau-prime", "0,1")
    assert code == 2
    assert "disk" in err


def test_overlap_projective_infinity(capsys):
    code, _, err = run(capsys, "overlap", "--algebra", "su2", "--rep", "j=1", "--omega", "0,0",
                       "--omega-prime", "1.5707963267948966,0")
    assert code == 2 and "infinity" in err


def test_overlap_non_convergence(capsys):
    code, _, err = run(capsys, "overlap", "--algebra", "su11", "--rep", "two-mode n0=0",
                       "--tau", "0.99,0", "--tau-prime", "0.99,0", "--max-terms", "100")
    assert code == 3 and "100 terms" in err


def test_overlap_missing_point_is_usage_error(capsys):
    code, _, err = run(capsys, "overlap", "--algebra", "su2", "--rep", "j=1", "--tau", "0,0")
    assert code == 2 and "usage" in err


def test_overlap_csv(capsys):
    code, out, _ = run(capsys, "overlap", "--algebra", "su11", "--rep", "one-mode-even",
                       "--omega", "0.5,0", "--omega-prime", "0.5,1", "--format", "csv")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert 0 < float(rows[0]["magnitude"]) < 1


def test_virasoro_and_hwv_reps(capsys):
    code, out, _ = run(capsys, "overlap", "--algebra", "virasoro", "--rep", "k=2 c=12 h=1",
                       "--tau", "0.2,0", "--tau-prime", "0.1,0.3")
    assert code == 0
    code2, out2, _ = run(capsys, "overlap", "--algebra", "su11", "--rep", "h'=1.25",
                         "--tau", "0.2,0", "--tau-prime", "0.1,0.3")
    assert json.loads(out)["value_re"] == json.loads(out2)["value_re"]


def test_json_round_trip_through_config(capsys, tmp_path):
    _, first, _ = run(capsys, "overlap", "--algebra", "su11", "--rep", "k=1/2",
                      "--omega", "0.7,0.3", "--omega-prime", "1.1,-2")
    rec = json.loads(first)
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"algebra": "su11", "rep": "k=1/2", "tau": rec["tau"], "tau_prime": rec["tau_prime"]}))
    _, second, _ = run(capsys, "overlap", "--config", str(cfg))
    assert json.loads(second) == rec


def test_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"algebra": "su2", "rep": "j=5", "tau": "0,0", "tau_prime": "1,0"}))
    _, out, _ = run(capsys, "overlap", "--config", str(cfg), "--rep", "j=1")
    assert json.loads(out)["magnitude"] == pytest.approx(0.5, abs=1e-15)


def test_custom_record_aliases_builtin(capsys):
    record = json.dumps({"alpha_plus": 1, "alpha_minus": -1, "beta": 2,
                         "extremal": "LowestWeight", "nu0": -1.5, "label": "custom"})
    points = ["--tau", "0.3,0.4", "--tau-prime=-1,2"]
    _, builtin, _ = run(capsys, "overlap", "--algebra", "su2", "--rep", "j=3/2", *points)
    _, custom, _ = run(capsys, "overlap", "--algebra", record, *points)
    assert builtin == custom


def test_sweep_su2(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "Su2J", "--params", "1,2,4,8", "--tau", "0,0", "--tau-prime", "1,0")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["parameter", "magnitude", "log_magnitude"]
    assert [float(r["magnitude"]) for r in rows] == pytest.approx([0.5, 0.25, 0.0625, 0.00390625], abs=1e-12)


def test_sweep_empty_params(capsys):
    code, _, err = run(capsys, "sweep", "--family", "Su2J", "--params", "")
    assert code == 2 and "usage" in err


def test_threshold(capsys):
    code, out, _ = run(capsys, "threshold", "--k", "1", "--h-prime-t", "4.5", "--c-range", "0,100,5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5 and {r["h_boundary"] for r in rows} == {"4.5"}
    _, out2, _ = run(capsys, "threshold", "--k", "2", "--h-prime-t", "10", "--c-range", "24,24,1")
    assert "24.0,17.0" in out2


def test_threshold_requires_k(capsys):
    code, _, _ = run(capsys, "threshold", "--h-prime-t", "1")
    assert code == 2


def test_no_command(capsys):
    assert run(capsys)[0] == 2


def test_verify_fails_at_small_truncation(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "--truncation", "10", "--out", str(out))
    assert code == 1
    assert "verification failed" in err
    report = json.loads(out.read_text())
    assert not report["passed"]
    failing = [c for c in report["checks"] if not c["passed"]]
    assert any("tail mass" in c["detail"] for c in failing)


def test_determinism(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"sweep{i}.csv"
        run(capsys, "sweep", "--family", "VirasoroC", "--params", "1,2,5", "--k", "2", "--h", "0.5",
            "--tau", "0,0", "--tau-prime", "0.3,0.1", "--out", str(path))
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gcs_overlap", "overlap", "--algebra", "su2", "--rep", "j=1",
                           "--tau", "0,0", "--tau-prime", "1,0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["magnitude"] == 0.5

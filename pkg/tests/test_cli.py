"""End-to-end runs of the psl2cov command line via python -m."""

import json
import subprocess
import sys


def run_cli(*args: str):
    return subprocess.run([sys.executable, "-m", "psl2cov", *args],
                          capture_output=True, text=True)


def test_table_text():
    r = run_cli("table", "--q", "8")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "PSL(2,8)  order 504  case even  conductor 63"
    assert lines[1].split()[:3] == ["class", "I", "N"]
    assert lines[2].split()[:3] == ["size", "1", "63"]
    st = next(l for l in lines if l.startswith("st "))
    assert st.split()[1:3] == ["8", "."]  # zeros print as dots


def test_table_json_schema():
    r = run_cli("table", "--q", "9", "--format", "json", "--reproducible")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["schema_version"] == "1.0"
    assert doc["kind"] == "table"
    assert "generated_at" not in doc
    payload = doc["payload"]
    assert payload["order"] == 360
    assert len(payload["classes"]) == len(payload["characters"]) == 7
    for ch in payload["characters"]:
        for v in ch["values"]:
            assert set(v) == {"conductor", "terms", "approx"}
            assert all(isinstance(e, int) and isinstance(c, int)
                       for e, c in v["terms"])
            assert len(v["approx"]) == 2


def test_table_timestamp_present_by_default():
    r = run_cli("table", "--q", "5", "--format", "json")
    assert "generated_at" in json.loads(r.stdout)


def test_table_rejects_non_prime_power():
    r = run_cli("table", "--q", "12")
    assert r.returncode == 2
    assert "prime power" in r.stderr


def test_decompose_json():
    r = run_cli("decompose", "--q", "8", "--char", "dd:3", "--power", "3",
                "--format", "json", "--reproducible")
    assert r.returncode == 0
    payload = json.loads(r.stdout)["payload"]
    assert payload["multiplicities"]["triv"] == 0
    assert payload["multiplicities"]["st"] == 6
    assert payload["complete"] is False


def test_decompose_unknown_label():
    r = run_cli("decompose", "--q", "8", "--char", "dd:9")
    assert r.returncode == 2
    assert "unknown character label" in r.stderr


def test_decompose_rejects_power_zero():
    r = run_cli("decompose", "--q", "8", "--char", "st", "--power", "0")
    assert r.returncode == 2


def test_covering_json():
    r = run_cli("covering", "--q", "11", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)["payload"]
    assert payload["covering_number"] == 4
    assert payload["theorem_expected"] == 3
    assert payload["matches_theorem"] is False
    by_label = {e["label"]: e for e in payload["characters"]}
    assert by_label["half-:1"] == {"label": "half-:1", "e": 4, "t": 3}


def test_covering_small_q_has_no_theorem_value():
    payload = json.loads(run_cli("covering", "--q", "5", "--format",
                                 "json").stdout)["payload"]
    assert payload["covering_number"] == 3
    assert payload["theorem_expected"] is None
    assert payload["matches_theorem"] is None


def test_covering_cap_exit_code():
    r = run_cli("covering", "--q", "7", "--tmax", "3")
    assert r.returncode == 3
    assert "do not cover" in r.stderr


def test_verify_exit_zero_despite_findings():
    r = run_cli("verify", "--q", "19")
    assert r.returncode == 0
    assert "6 mismatch" in r.stdout
    assert "result: OK" in r.stdout


def test_verify_oracle_runs_are_byte_identical():
    a = run_cli("verify", "--q", "13", "--oracle", "--format", "json",
                "--reproducible")
    b = run_cli("verify", "--q", "13", "--oracle", "--format", "json",
                "--reproducible")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["payload"]["oracle"]["ok"] is True


def test_verify_oracle_skips_above_cap():
    r = run_cli("verify", "--q", "64", "--oracle", "--format", "json",
                "--reproducible")
    assert r.returncode == 0
    oracle = json.loads(r.stdout)["payload"]["oracle"]
    assert oracle == {"ran": False,
                      "reason": oracle["reason"]}
    assert oracle["reason"].startswith("CapExceeded")


def test_sweep_csv():
    r = run_cli("sweep", "--q-min", "4", "--q-max", "13", "--jobs", "1")
    assert r.returncode == 0
    rows = r.stdout.splitlines()
    assert rows[0] == "q,case,covering_number,theorem_expected,match"
    assert rows[1] == "4,even,3,,na"
    assert "7,3mod4,6,,na" in rows
    assert "8,even,4,4,true" in rows
    assert "11,3mod4,4,3,false" in rows
    assert "13,1mod4,3,3,true" in rows
    assert len(rows) == 8  # header + the seven prime powers in 4..13


def test_sweep_error_row_and_cap_exit():
    # e(half-:1) = 6 at q = 7, so tmax 5 caps there but covers q = 8
    r = run_cli("sweep", "--q-min", "7", "--q-max", "8", "--tmax", "5",
                "--jobs", "1")
    assert r.returncode == 3
    rows = r.stdout.splitlines()
    assert rows[1] == "7,ERROR,,,"
    assert rows[2] == "8,even,4,4,true"


def test_sweep_rejects_bad_range():
    assert run_cli("sweep", "--q-min", "9", "--q-max", "8").returncode == 2
    assert run_cli("sweep", "--q-min", "2", "--q-max", "8").returncode == 2


def test_sweep_parallel_matches_serial(tmp_path):
    serial = run_cli("sweep", "--q-min", "8", "--q-max", "31", "--jobs", "1")
    out = tmp_path / "rows.csv"
    parallel = run_cli("sweep", "--q-min", "8", "--q-max", "31", "--jobs", "3",
                       "--out", str(out))
    assert serial.returncode == parallel.returncode == 0
    assert parallel.stdout == ""
    assert out.read_text() == serial.stdout


def test_sweep_json_rows():
    r = run_cli("sweep", "--q-min", "8", "--q-max", "11", "--format", "json",
                "--reproducible", "--jobs", "1")
    doc = json.loads(r.stdout)
    assert doc["kind"] == "sweep"
    rows = doc["payload"]["rows"]
    assert [row["q"] for row in rows] == [8, 9, 11]
    assert rows[2]["match"] is False


def test_usage_error_exit_code():
    assert run_cli("table").returncode == 2  # argparse: missing --q
    assert run_cli().returncode == 2  # no subcommand

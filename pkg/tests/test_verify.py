"""The per-q verification payload and its oracle/env plumbing."""

import json

import pytest

from psl2cov.tables import character_table, group_params
from psl2cov.verify import resolve_oracle_cap, run_verification, structural_checks

CHECK_NAMES = ["class_size_sum", "class_count", "degree_identity",
               "row_orthogonality", "column_orthogonality", "lemma_closed_forms"]


def test_structural_checks_across_cases():
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25):
        checks = structural_checks(character_table(group_params(q)))
        assert [c["name"] for c in checks] == CHECK_NAMES[:-1]
        assert all(c["ok"] for c in checks), (q, checks)


def test_payload_q13_with_oracle():
    payload = run_verification(13, with_oracle=True)
    assert payload["ok"] is True
    assert payload["q"] == 13 and payload["case"] == "1mod4"
    assert payload["order"] == 1092
    assert [c["name"] for c in payload["checks"]] == CHECK_NAMES
    assert all(c["ok"] for c in payload["checks"])
    claims = payload["claims"]
    assert (claims["total"], claims["match"],
            claims["mismatch"], claims["not_applicable"]) == (75, 73, 2, 0)
    wheres = {f["where"] for f in claims["findings"]}
    assert wheres == {"1mod4:grid:(half+:2)^3:half+:1",
                      "1mod4:grid:(half+:2)^3:half+:2"}
    for f in claims["findings"]:
        assert f["status"] == "mismatch"
        assert f["claimed"] != f["computed"]
    oracle = payload["oracle"]
    assert oracle["ran"] and oracle["ok"]
    assert oracle["group_size"] == 1092
    assert len(oracle["classes"]) == 9
    assert len(oracle["second_orthogonality"]) == 9


def test_mismatch_findings_do_not_fail_the_run():
    payload = run_verification(11)
    assert payload["claims"]["mismatch"] == 4
    assert payload["ok"] is True
    assert payload["oracle"] is None


def test_oracle_skipped_above_cap():
    payload = run_verification(64, with_oracle=True)
    assert payload["ok"] is True
    oracle = payload["oracle"]
    assert oracle["ran"] is False
    assert oracle["reason"].startswith("CapExceeded")


def test_payload_is_json_ready():
    for q in (8, 13):
        payload = run_verification(q, with_oracle=True)
        assert json.loads(json.dumps(payload)) == payload


def test_resolve_oracle_cap(monkeypatch):
    monkeypatch.delenv("PSL2COV_ORACLE_CAP", raising=False)
    assert resolve_oracle_cap() == 32
    assert resolve_oracle_cap(17) == 17
    monkeypatch.setenv("PSL2COV_ORACLE_CAP", "64")
    assert resolve_oracle_cap() == 64
    assert resolve_oracle_cap(9) == 9  # the explicit argument wins
    monkeypatch.setenv("PSL2COV_ORACLE_CAP", "many")
    with pytest.raises(ValueError):
        resolve_oracle_cap()


def test_env_cap_reaches_the_oracle(monkeypatch):
    monkeypatch.setenv("PSL2COV_ORACLE_CAP", "7")
    payload = run_verification(8, with_oracle=True)
    assert payload["oracle"]["ran"] is False
    assert payload["oracle"]["reason"].startswith("CapExceeded")

"""Aggregated verification for one q: structural checks, lemma closed forms,
reference-value comparison, and (optionally) the explicit-group oracle.

The report separates two failure notions.  Internal-consistency checks
(orthogonality, size sums, lemma equivalence, oracle agreement) make the
report not-ok when they fail: they mean the implementation is wrong.
Reference-value mismatches are findings, reported with both values but never
failing the report: when the tables disagree with an exact computation that
the oracle corroborates, the printed value is the bug.
"""

from __future__ import annotations

import os

from .covering import ClassFunction, compare_claims, inner_product
from .oracle import DEFAULT_CAP, CapExceeded, MatchFailure, run_oracle
from .rootsums import lemma_sweep
from .tables import CharacterTable, character_table, group_params


def resolve_oracle_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get("PSL2COV_ORACLE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"PSL2COV_ORACLE_CAP must be an integer, got {raw!r}") from None


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _row_orthogonality(table: CharacterTable) -> dict:
    chars = table.characters
    pairs = 0
    for i, a in enumerate(chars):
        fa = ClassFunction(a.values)
        for b in chars[i:]:
            want = 1 if a.label == b.label else 0
            got = inner_product(fa, b.label, table)
            pairs += 1
            if got != want:
                return _check("row_orthogonality", False,
                              f"<{a.label},{b.label}> = {got}, expected {want}")
    return _check("row_orthogonality", True, f"{pairs} pairs exact")


def _column_orthogonality(table: CharacterTable) -> dict:
    n = table.params.conductor
    order = table.params.order
    names = table.class_names
    count = len(names)
    pairs = 0
    for i in range(count):
        for j in range(i, count):
            total = 0
            for ch in table.characters:
                total = total + ch.values[i] * ch.values[j].conjugate()
            got = total.as_integer()
            want = order // table.sizes[i] if i == j else 0
            pairs += 1
            if got != want:
                return _check("column_orthogonality", False,
                              f"classes {names[i]},{names[j]}: sum {got}, "
                              f"expected {want}")
    return _check("column_orthogonality", True, f"{pairs} pairs exact")


def structural_checks(table: CharacterTable) -> list[dict]:
    params = table.params
    size_sum = sum(table.sizes)
    degree_sum = sum(ch.degree**2 for ch in table.characters)
    checks = [
        _check("class_size_sum", size_sum == params.order,
               f"{size_sum} vs |G| = {params.order}"),
        _check("class_count", len(table.classes) == params.num_classes,
               f"{len(table.classes)} vs {params.num_classes}"),
        _check("degree_identity", degree_sum == params.order,
               f"sum of squares {degree_sum} vs |G| = {params.order}"),
        _row_orthogonality(table),
        _column_orthogonality(table),
    ]
    return checks


def run_verification(q: int, with_oracle: bool = False,
                     oracle_cap: int | None = None,
                     lemma_t_max: int = 12) -> dict:
    """Full verification payload for one q (JSON-ready dict)."""
    params = group_params(q)
    table = character_table(params)
    checks = structural_checks(table)

    sweep = lemma_sweep(q, lemma_t_max)
    checks.append(_check(
        "lemma_closed_forms", sweep.ok,
        f"{sweep.checked} sums compared up to t={lemma_t_max}, "
        f"{len(sweep.counterexamples)} counterexamples"))

    outcomes = compare_claims(table)
    findings = [
        {
            "status": o.status,
            "where": o.claim.where,
            "formula": o.claim.formula,
            "claimed": o.claim.claimed,
            "computed": o.computed,
            "note": o.claim.note,
        }
        for o in outcomes if o.status != "match"
    ]
    claims = {
        "total": len(outcomes),
        "match": sum(o.status == "match" for o in outcomes),
        "mismatch": sum(o.status == "mismatch" for o in outcomes),
        "not_applicable": sum(o.status == "not_applicable" for o in outcomes),
        "findings": findings,
    }

    oracle: dict | None = None
    if with_oracle:
        cap = resolve_oracle_cap(oracle_cap)
        try:
            report = run_oracle(q, table=table, cap=cap)
        except CapExceeded as e:
            oracle = {"ran": False, "reason": f"CapExceeded: {e}"}
        except MatchFailure as e:
            oracle = {"ran": True, "ok": False, "reason": str(e)}
        else:
            oracle = {
                "ran": True,
                "ok": True,
                "group_size": report.group_size,
                "field_modulus": list(report.field_modulus),
                "classes": [
                    {"name": mc.name, "size": mc.size,
                     "element_order": mc.element_order}
                    for mc in report.classes
                ],
                "second_orthogonality": [
                    {"class": name, "centralizer": cent}
                    for name, cent in report.second_orthogonality
                ],
            }

    ok = all(c["ok"] for c in checks)
    if oracle is not None and oracle["ran"] and not oracle["ok"]:
        ok = False
    return {
        "q": q,
        "case": params.case,
        "order": params.order,
        "conductor": params.conductor,
        "checks": checks,
        "claims": claims,
        "oracle": oracle,
        "ok": ok,
    }

"""Command-line surface: tables, decompositions, covering numbers,
verification, and multi-q sweeps.

Exit codes: 0 success, 2 usage/input error, 3 exponent cap exceeded,
4 verification failure.  JSON documents carry schema_version and a
generated_at timestamp (suppressed by --reproducible); CSV sweeps use the
fixed header q,case,covering_number,theorem_expected,match.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from .covering import (
    DEFAULT_TMAX,
    ExponentCapExceeded,
    covering_report,
    decompose,
    pointwise_power,
)
from .cyclotomic import Cyclotomic
from .tables import CharacterTable, NotAPrimePower, character_table, group_params, prime_power
from .verify import run_verification

SCHEMA_VERSION = "1.0"


def _emit(kind: str, payload, args) -> None:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    if not args.reproducible:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    doc["payload"] = payload
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def _value_json(v: Cyclotomic) -> dict:
    canon = v.canonical()
    a = v.approx()
    return {
        "conductor": v.n,
        "terms": [[e, canon[e]] for e in sorted(canon)],
        "approx": [a.real, a.imag],
    }


def _value_text(v: Cyclotomic) -> str:
    i = v.as_integer()
    if i == 0:
        return "."
    return str(i) if i is not None else v.text()


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _table_payload(table: CharacterTable) -> dict:
    p = table.params
    return {
        "q": p.q,
        "case": p.case,
        "order": p.order,
        "conductor": p.conductor,
        "classes": [{"name": c.name, "size": c.size} for c in table.classes],
        "characters": [
            {"label": ch.label, "degree": ch.degree,
             "values": [_value_json(v) for v in ch.values]}
            for ch in table.characters
        ],
    }


def _table_text(table: CharacterTable) -> str:
    p = table.params
    rows = [["class", *table.class_names],
            ["size", *(str(c.size) for c in table.classes)]]
    for ch in table.characters:
        rows.append([ch.label, *(_value_text(v) for v in ch.values)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [f"PSL(2,{p.q})  order {p.order}  case {p.case}  conductor {p.conductor}"]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def cmd_table(args) -> int:
    table = character_table(group_params(args.q))
    if args.format == "json":
        _emit("table", _table_payload(table), args)
    else:
        print(_table_text(table))
    return 0


# ---------------------------------------------------------------------------
# decompose
# ---------------------------------------------------------------------------


def cmd_decompose(args) -> int:
    if args.power < 1:
        print("error: --power must be at least 1", file=sys.stderr)
        return 2
    table = character_table(group_params(args.q))
    try:
        ch = table.character(args.char)
    except KeyError:
        print(f"error: unknown character label {args.char!r} at q={args.q} "
              f"(known: {', '.join(table.labels())})", file=sys.stderr)
        return 2
    dec = decompose(pointwise_power(ch, args.power), table)
    payload = {
        "q": args.q,
        "base": ch.label,
        "power": args.power,
        "multiplicities": dec.multiplicities,
        "complete": dec.complete,
    }
    if args.format == "json":
        _emit("decomposition", payload, args)
    else:
        lines = [f"({ch.label})^{args.power} at q={args.q}"]
        width = max(len(l) for l in dec.multiplicities)
        lines += [f"  {label.ljust(width)}  {m}"
                  for label, m in dec.multiplicities.items()]
        lines.append(f"complete: {'true' if dec.complete else 'false'}")
        print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# covering
# ---------------------------------------------------------------------------


def cmd_covering(args) -> int:
    table = character_table(group_params(args.q))
    report = covering_report(table, args.tmax)
    payload = {
        "q": report.q,
        "case": report.case,
        "tmax": report.tmax,
        "characters": [{"label": e.label, "e": e.e, "t": e.t}
                       for e in report.entries],
        "covering_number": report.covering_number,
        "theorem_expected": report.theorem_expected,
        "matches_theorem": report.matches_theorem,
    }
    if args.format == "json":
        _emit("covering-report", payload, args)
    else:
        lines = [f"covering numbers for PSL(2,{report.q}) (tmax {report.tmax})"]
        width = max(len(e.label) for e in report.entries)
        lines += [f"  {e.label.ljust(width)}  e={e.e}  t={e.t}"
                  for e in report.entries]
        lines.append(f"covering_number: {report.covering_number}")
        lines.append("theorem_expected: "
                     + ("n/a" if report.theorem_expected is None
                        else str(report.theorem_expected)))
        lines.append("matches_theorem: "
                     + ("n/a" if report.matches_theorem is None
                        else str(report.matches_theorem).lower()))
        print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_text(payload: dict) -> str:
    lines = [f"verification for q={payload['q']} "
             f"({payload['case']}, order {payload['order']})",
             "checks:"]
    for c in payload["checks"]:
        mark = "ok " if c["ok"] else "FAIL"
        lines.append(f"  {mark} {c['name']}: {c['detail']}")
    cl = payload["claims"]
    lines.append(f"claims: {cl['total']} compared, {cl['match']} match, "
                 f"{cl['mismatch']} mismatch, {cl['not_applicable']} not applicable")
    for f in cl["findings"]:
        tail = f" ({f['note']})" if f["note"] else ""
        if f["status"] == "mismatch":
            lines.append(f"  mismatch {f['where']} {f['formula']}: "
                         f"claimed {f['claimed']}, computed {f['computed']}{tail}")
        else:
            lines.append(f"  not applicable {f['where']}: "
                         f"claimed {f['claimed']}{tail}")
    o = payload["oracle"]
    if o is None:
        lines.append("oracle: not requested")
    elif not o["ran"]:
        lines.append(f"oracle: skipped ({o['reason']})")
    elif o["ok"]:
        lines.append(f"oracle: ok (group {o['group_size']}, "
                     f"{len(o['classes'])} classes matched, "
                     "second orthogonality exact)")
    else:
        lines.append(f"oracle: FAIL ({o['reason']})")
    lines.append("result: " + ("OK" if payload["ok"] else "FAILED"))
    return "\n".join(lines)


def cmd_verify(args) -> int:
    payload = run_verification(args.q, with_oracle=args.oracle)
    if args.format == "json":
        _emit("verification-report", payload, args)
    else:
        print(_verify_text(payload))
    return 0 if payload["ok"] else 4


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _sweep_worker(task: tuple[int, int]) -> dict:
    q, tmax = task
    try:
        rep = covering_report(character_table(group_params(q)), tmax)
    except ExponentCapExceeded as e:
        return {"q": q, "status": "cap", "error": str(e)}
    except Exception as e:  # per-q isolation: one bad q must not kill the sweep
        return {"q": q, "status": "error", "error": f"{type(e).__name__}: {e}"}
    return {"q": q, "status": "ok", "case": rep.case,
            "covering_number": rep.covering_number,
            "theorem_expected": rep.theorem_expected,
            "match": rep.matches_theorem}


def _csv_row(r: dict) -> list:
    if r["status"] != "ok":
        return [r["q"], "ERROR", "", "", ""]
    return [
        r["q"],
        r["case"],
        r["covering_number"],
        "" if r["theorem_expected"] is None else r["theorem_expected"],
        "na" if r["match"] is None else str(r["match"]).lower(),
    ]


def cmd_sweep(args) -> int:
    if not 4 <= args.q_min <= args.q_max:
        print("error: need 4 <= --q-min <= --q-max", file=sys.stderr)
        return 2
    qs = [q for q in range(args.q_min, args.q_max + 1) if prime_power(q)]
    tasks = [(q, args.tmax) for q in qs]
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_sweep_worker, tasks))
    else:
        results = [_sweep_worker(t) for t in tasks]

    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        if args.format == "json":
            rows = [{k: v for k, v in r.items() if k != "status"} for r in results]
            doc = {"schema_version": SCHEMA_VERSION, "kind": "sweep"}
            if not args.reproducible:
                doc["generated_at"] = datetime.now(timezone.utc).isoformat(
                    timespec="seconds")
            doc["payload"] = {"q_min": args.q_min, "q_max": args.q_max,
                              "tmax": args.tmax, "rows": rows}
            out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["q", "case", "covering_number",
                             "theorem_expected", "match"])
            for r in results:
                writer.writerow(_csv_row(r))
    finally:
        if out is not sys.stdout:
            out.close()

    statuses = {r["status"] for r in results}
    if "cap" in statuses:
        return 3
    if "error" in statuses:
        return 4
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psl2cov",
        description="Exact character tables of PSL(2,q), tensor-power "
                    "decompositions, and character covering numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text; sweep renders text as CSV)")
    common.add_argument("--reproducible", action="store_true",
                        help="omit the generated_at timestamp from JSON output")

    p = sub.add_parser("table", parents=[common],
                       help="print the character table of PSL(2,q)")
    p.add_argument("--q", type=int, required=True, help="prime power >= 4")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decompose", parents=[common],
                       help="decompose a power of an irreducible character")
    p.add_argument("--q", type=int, required=True, help="prime power >= 4")
    p.add_argument("--char", required=True, metavar="LABEL",
                   help="character label (triv, st, pp:k, dd:j, half+:1, ...)")
    p.add_argument("--power", type=int, default=2, help="tensor power (default 2)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("covering", parents=[common],
                       help="e and t numbers for every nontrivial character")
    p.add_argument("--q", type=int, required=True, help="prime power >= 4")
    p.add_argument("--tmax", type=int, default=DEFAULT_TMAX,
                   help=f"largest power tried (default {DEFAULT_TMAX})")
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("verify", parents=[common],
                       help="structural checks, lemma forms, reference claims")
    p.add_argument("--q", type=int, required=True, help="prime power >= 4")
    p.add_argument("--oracle", action="store_true",
                   help="also run the explicit matrix-group oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common],
                       help="covering numbers for every prime power in a range")
    p.add_argument("--q-min", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--tmax", type=int, default=DEFAULT_TMAX,
                   help=f"largest power tried (default {DEFAULT_TMAX})")
    p.add_argument("--out", metavar="PATH", help="write to a file instead of stdout")
    p.add_argument("--jobs", type=int, help="parallel workers (default: CPU count)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAPrimePower as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ExponentCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Report assembly, JSON schema and text rendering.

Reports are plain JSON-compatible dicts so they round-trip through
``json.dumps``/``json.loads`` unchanged.  Key order is fixed by
construction; nothing time-dependent is included unless timings are asked
for explicitly.
"""
from __future__ import annotations

from typing import Any

from .action import CoprimeAction, maximal_invariant_subgroups
from .corpus import CORPUS, CorpusEntry, build_entry
from .groups import PermGroup, Subgroup
from .lattice import LatticeIndex
from .structure import PrimeFactorization
from .theorem import (
    check_corollary,
    check_minimal_non_nilpotent,
    check_solvability_implication,
    check_theorem_A,
    check_unique_invariant_maximal_example,
    cross_validate,
    replay_witnesses,
)

SCHEMA_VERSION = 1


def subgroup_record(h: Subgroup) -> dict[str, Any]:
    return {"order": h.order, "generators": h.generator_strings()}


def group_record(group: PermGroup) -> dict[str, Any]:
    return {
        "name": group.name or "",
        "order": group.order,
        "degree": group.degree,
        "factorization": [[p, e] for p, e in PrimeFactorization.of(group.order).factors],
        "generators": [g.to_cycle_string() for g in group.generators],
    }


def check_record(result) -> dict[str, Any]:
    return {"name": result.name, "passed": result.passed, "premise": result.premise, "detail": result.detail}


def triple_report(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int, action_name: str = "") -> dict[str, Any]:
    """Everything known about one ``(G, A, p)`` triple."""
    cv = cross_validate(group, lat, act, prm)
    verdict, case = cv.hypothesis, cv.case
    replay = replay_witnesses(group, lat, act, prm, case)
    checks = [
        check_solvability_implication(group, lat, act, prm, verdict),
        check_corollary(group, lat, act, prm, verdict, case),
        check_minimal_non_nilpotent(group, lat, act, prm, case),
        check_theorem_A(group, lat, act),
    ]
    return {
        "schema": SCHEMA_VERSION,
        "kind": "check",
        "group": group_record(group),
        "action": {"name": action_name or ("trivial" if act.is_trivial() else ""), "order": act.order},
        "prime": prm,
        "hypothesis": {
            "holds": verdict.holds,
            "vacuous": verdict.vacuous,
            "relevant": [subgroup_record(h) for h in verdict.relevant],
            "offending": [subgroup_record(h) for h in verdict.offending],
        },
        "case": {
            "tag": int(case.case),
            "label": case.case.label,
            "witnesses": {k: subgroup_record(v) for k, v in sorted(case.witnesses.items())},
            "refutations": {str(k): v for k, v in sorted(case.refutations.items())},
            "matching": [int(c) for c in case.matching],
            "replay": "ok" if replay is None else replay,
        },
        "consistent": cv.consistent,
        "checks": [check_record(c) for c in checks],
    }


def pair_report(entry: CorpusEntry) -> dict[str, Any]:
    r = check_theorem_A(entry.group, entry.lattice, entry.action)
    return {"key": entry.key, **check_record(r)}


def census_entry(name: str, primes: list[int] | None) -> dict[str, Any]:
    """Triples and the pair-level check for one corpus entry (runs in a worker)."""
    entry = build_entry(name)
    rows = []
    for prm in entry.primes():
        if primes is not None and prm not in primes:
            continue
        rep = triple_report(entry.group, entry.lattice, entry.action, prm, entry.action_name)
        rows.append({
            "key": entry.key,
            "group": entry.name,
            "order": entry.group.order,
            "action": entry.action_name,
            "action_order": entry.action.order,
            "prime": prm,
            "holds": rep["hypothesis"]["holds"],
            "vacuous": rep["hypothesis"]["vacuous"],
            "case": rep["case"]["tag"],
            "matching": rep["case"]["matching"],
            "replay": rep["case"]["replay"],
            "consistent": rep["consistent"],
            "checks": {c["name"]: c["passed"] for c in rep["checks"]},
            "detail": rep if not rep["consistent"] else None,
        })
    return {"triples": rows, "pair": pair_report(entry)}


def run_census(max_order: int = 192, primes: list[int] | None = None, jobs: int = 1) -> dict[str, Any]:
    """Cross-validate every corpus triple with ``|G| <= max_order``."""
    names = [name for name, order, _ in CORPUS if order <= max_order]
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(census_entry, names, [primes] * len(names)))
    else:
        parts = [census_entry(n, primes) for n in names]
    triples = [row for part in parts for row in part["triples"]]
    pairs = [part["pair"] for part in parts]
    remark = check_record(check_unique_invariant_maximal_example()) if max_order >= 8 else None

    def row_ok(row):
        return row["consistent"] and row["replay"] == "ok" and all(row["checks"].values())

    failures = [row["key"] + f" p={row['prime']}" for row in triples if not row_ok(row)]
    failures += [p["key"] + " (theorem_A)" for p in pairs if not p["passed"]]
    if remark is not None and not remark["passed"]:
        failures.append("Q8 fixture")
    return {
        "schema": SCHEMA_VERSION,
        "kind": "census",
        "max_order": max_order,
        "primes": "all" if primes is None else primes,
        "triples": triples,
        "pairs": pairs,
        "remark_q8": remark,
        "summary": {
            "groups": len(parts),
            "triples": len(triples),
            "consistent": sum(1 for r in triples if r["consistent"]),
            "failures": failures,
            "all_passed": not failures,
        },
    }


def lattice_rows(group: PermGroup, lat: LatticeIndex, act: CoprimeAction | None = None) -> list[dict[str, Any]]:
    from .action import is_invariant
    from .lattice import is_normal

    whole = group.whole
    maxes = set()
    if act is not None:
        maxes = {h.bits for h in maximal_invariant_subgroups(group, act, lat)}
    rows = []
    for k, h in enumerate(lat):
        row = {"index": k, "order": h.order, "generators": h.generator_strings(), "normal": is_normal(h, whole)}
        if act is not None:
            row["invariant"] = is_invariant(h, act)
            row["maximal_invariant"] = h.bits in maxes
        rows.append(row)
    return rows


# JSON schema for reports

_SUBGROUP = {
    "type": "object",
    "required": ["order", "generators"],
    "properties": {"order": {"type": "integer", "minimum": 1}, "generators": {"type": "array", "items": {"type": "string"}}},
    "additionalProperties": False,
}
_CHECK = {
    "type": "object",
    "required": ["name", "passed", "premise", "detail"],
    "properties": {
        "name": {"type": "string"},
        "passed": {"type": "boolean"},
        "premise": {"type": "boolean"},
        "detail": {"type": "string"},
    },
    "additionalProperties": False,
}
CHECK_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "schmidtcheck check report",
    "type": "object",
    "required": ["schema", "kind", "group", "action", "prime", "hypothesis", "case", "consistent", "checks"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "check"},
        "group": {
            "type": "object",
            "required": ["name", "order", "degree", "factorization", "generators"],
            "properties": {
                "name": {"type": "string"},
                "order": {"type": "integer", "minimum": 1},
                "degree": {"type": "integer", "minimum": 1},
                "factorization": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
                "generators": {"type": "array", "items": {"type": "string"}},
            },
        },
        "action": {
            "type": "object",
            "required": ["name", "order"],
            "properties": {"name": {"type": "string"}, "order": {"type": "integer", "minimum": 1}},
        },
        "prime": {"type": "integer", "minimum": 2},
        "hypothesis": {
            "type": "object",
            "required": ["holds", "vacuous", "relevant", "offending"],
            "properties": {
                "holds": {"type": "boolean"},
                "vacuous": {"type": "boolean"},
                "relevant": {"type": "array", "items": _SUBGROUP},
                "offending": {"type": "array", "items": _SUBGROUP},
            },
        },
        "case": {
            "type": "object",
            "required": ["tag", "label", "witnesses", "refutations", "matching", "replay"],
            "properties": {
                "tag": {"type": "integer", "minimum": 0, "maximum": 4},
                "label": {"type": "string"},
                "witnesses": {"type": "object", "additionalProperties": _SUBGROUP},
                "refutations": {"type": "object", "additionalProperties": {"type": "string"}},
                "matching": {"type": "array", "items": {"type": "integer"}},
                "replay": {"type": "string"},
            },
        },
        "consistent": {"type": "boolean"},
        "checks": {"type": "array", "items": _CHECK},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}
CENSUS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "schmidtcheck census report",
    "type": "object",
    "required": ["schema", "kind", "max_order", "primes", "triples", "pairs", "remark_q8", "summary"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "census"},
        "max_order": {"type": "integer"},
        "primes": {"oneOf": [{"const": "all"}, {"type": "array", "items": {"type": "integer"}}]},
        "triples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["key", "group", "order", "action", "action_order", "prime", "holds", "vacuous", "case", "consistent", "checks"],
                "properties": {
                    "case": {"type": "integer", "minimum": 0, "maximum": 4},
                    "consistent": {"type": "boolean"},
                    "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
                    "detail": {"oneOf": [{"type": "null"}, {"$ref": "#/$defs/check"}]},
                },
            },
        },
        "pairs": {"type": "array", "items": {"type": "object", "required": ["key", "name", "passed", "premise", "detail"]}},
        "remark_q8": {"oneOf": [{"type": "null"}, _CHECK]},
        "summary": {
            "type": "object",
            "required": ["groups", "triples", "consistent", "failures", "all_passed"],
            "properties": {"all_passed": {"type": "boolean"}, "failures": {"type": "array", "items": {"type": "string"}}},
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "$defs": {"check": CHECK_SCHEMA},
}


def render_check_text(rep: dict[str, Any]) -> str:
    g = rep["group"]
    fact = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in g["factorization"]) or "1"
    hyp = rep["hypothesis"]
    case = rep["case"]
    lines = [
        f"group      {g['name'] or '(unnamed)'}  order {g['order']} = {fact}  degree {g['degree']}",
        f"action     order {rep['action']['order']} {rep['action']['name']}".rstrip(),
        f"prime      p = {rep['prime']}",
        f"hypothesis {'holds' if hyp['holds'] else 'fails'}"
        + (" (vacuously)" if hyp["vacuous"] else "")
        + f"; {len(hyp['relevant'])} maximal A-invariant subgroup(s) of order divisible by p",
    ]
    for h in hyp["offending"]:
        lines.append(f"  non-nilpotent: order {h['order']} <{', '.join(h['generators'])}>")
    lines.append(f"case       {case['label']}")
    for name, h in case["witnesses"].items():
        gens = ", ".join(h["generators"]) or "()"
        lines.append(f"  {name:4} order {h['order']:4}  <{gens}>")
    if case["tag"] == 0:
        for k, why in case["refutations"].items():
            lines.append(f"  case ({k}) fails: {why}")
    if len(case["matching"]) > 1:
        lines.append(f"  (cases {case['matching']} all match; the first is reported)")
    lines.append(f"replay     {case['replay']}")
    lines.append(f"consistent {'yes' if rep['consistent'] else 'NO'}")
    for c in rep["checks"]:
        lines.append(f"check      {c['name']:12} {'pass' if c['passed'] else 'FAIL'}  {c['detail']}")
    for k, v in rep.get("timings", {}).items():
        lines.append(f"time       {k:12} {v:.3f}s")
    return "\n".join(lines)


def render_census_text(rep: dict[str, Any]) -> str:
    lines = [f"{'group':16} {'action':28} {'p':>3} {'hyp':5} {'case':>4} {'xval':5} {'solv':5} {'cor':5} {'schm':5}"]

    def mark(v):
        return "ok" if v else "FAIL"

    for r in rep["triples"]:
        c = r["checks"]
        lines.append(
            f"{r['group']:16} {r['action'][:28]:28} {r['prime']:>3} {('yes' if r['holds'] else 'no'):5} "
            f"{r['case']:>4} {mark(r['consistent']):5} {mark(c['solvability']):5} {mark(c['corollary']):5} {mark(c['schmidt']):5}"
        )
    for p in rep["pairs"]:
        if p["premise"] or not p["passed"]:
            lines.append(f"theorem A  {p['key']}: {'pass' if p['passed'] else 'FAIL'} ({p['detail']})")
    if rep["remark_q8"] is not None:
        r = rep["remark_q8"]
        lines.append(f"Q8 fixture: {'pass' if r['passed'] else 'FAIL'} ({r['detail']})")
    s = rep["summary"]
    lines.append(f"{s['triples']} triples over {s['groups']} groups, {s['consistent']} consistent, "
                 f"{'all checks passed' if s['all_passed'] else 'FAILURES: ' + '; '.join(s['failures'])}")
    for k, v in rep.get("timings", {}).items():
        lines.append(f"time {k}: {v:.2f}s")
    return "\n".join(lines)


__all__ = [
    "CENSUS_SCHEMA",
    "CHECK_SCHEMA",
    "census_entry",
    "lattice_rows",
    "render_census_text",
    "render_check_text",
    "run_census",
    "triple_report",
]

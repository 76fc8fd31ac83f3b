"""Assembly of verification reports over one or many drawings.

A report is a deterministic JSON document: one entry per input drawing,
each holding the validation outcome and one TheoremReport per requested
check, plus the face/crossing/triangle counts.  The same data can be
flattened to CSV, one row per (drawing, check).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

from .checks import (
    TheoremReport,
    check_natural_properties,
    check_segment_bound,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_vertex_deletion_claims,
    standard_counts,
)
from .drawing import GoodDrawing, validate_good
from .planemap import build_plane_map
from .triangles import all_side_partitions

CHECK_NAMES = ("t1", "t2", "t3", "segbound", "natural", "claims")

# Crossings in this representation always involve exactly two edges; inputs
# where three or more edges pass through one point are rejected up front.
INPUT_POLICY = "crossings involve exactly two edges; concurrent crossings are rejected"


def resolve_checks(names: tuple[str, ...], n: int, kind: str) -> tuple[str, ...]:
    """Expand "all" relative to what is meaningful for the input: the
    natural-structure check only runs by default on natural drawings, and
    vertex deletion needs n >= 4."""
    if "all" in names:
        out = ["t1", "t2", "t3", "segbound"]
        if kind == "natural":
            out.append("natural")
        if n >= 4:
            out.append("claims")
        return tuple(out)
    return names


def run_checks(d: GoodDrawing, checks: tuple[str, ...]) -> tuple[bool, dict]:
    """Validate one drawing and run the requested checks.

    Returns (all checks passed, entry dict).  When validation fails no
    checks run and the entry carries the violations.
    """
    report = validate_good(d)
    entry: dict = {"n": d.n}
    entry["validation"] = {
        "ok": report.ok,
        "violations": [{"rule": v.rule, "ids": _jsonable(v.ids), "message": v.message} for v in report.violations],
    }
    if not report.ok:
        entry["checks"] = {}
        return False, entry

    m = build_plane_map(d)
    entry["counts"] = standard_counts(m)
    partitions = all_side_partitions(m) if "t2" in checks else None
    results: dict[str, TheoremReport] = {}
    for name in checks:
        if name == "t1":
            results[name] = check_theorem1(m)
        elif name == "t2":
            results[name] = check_theorem2(m, partitions)
        elif name == "t3":
            results[name] = check_theorem3(m)
        elif name == "segbound":
            results[name] = check_segment_bound(m)
        elif name == "natural":
            results[name] = check_natural_properties(m)
        elif name == "claims":
            results[name] = check_vertex_deletion_claims(d, m)
        else:
            raise ValueError(f"unknown check {name!r}")
    entry["checks"] = {name: results[name].to_json() for name in checks}
    ok = all(r.passed for r in results.values())
    return ok, entry


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    return obj


@dataclass
class VerificationReport:
    command: str
    kind: str
    checks: tuple[str, ...]
    entries: list[dict]
    ok: bool
    invalid: bool

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "kind": self.kind,
            "checks": list(self.checks),
            "input_policy": INPUT_POLICY,
            "ok": self.ok,
            "invalid": sum(1 for e in self.entries if not e["validation"]["ok"]),
            "entries": self.entries,
        }

    def to_bytes(self) -> bytes:
        return (json.dumps(self.to_json(), indent=2) + "\n").encode("utf-8")

    @property
    def exit_status(self) -> int:
        if self.invalid:
            return 2
        return 0 if self.ok else 1


def verify_batch(drawings: list[tuple[dict, GoodDrawing]], checks: tuple[str, ...], kind: str) -> VerificationReport:
    """Run checks over (metadata, drawing) pairs.  Metadata (seed, source)
    is copied into each entry ahead of the results."""
    entries = []
    all_ok = True
    invalid = False
    for meta, d in drawings:
        names = resolve_checks(checks, d.n, kind)
        ok, entry = run_checks(d, names)
        full = dict(meta)
        full.update(entry)
        entries.append(full)
        all_ok = all_ok and ok
        if not full["validation"]["ok"]:
            invalid = True
    return VerificationReport(command="verify", kind=kind, checks=checks, entries=entries, ok=all_ok and not invalid, invalid=invalid)


def write_csv(report: VerificationReport, path: str) -> None:
    """One row per (drawing, check), plus a validation row per drawing."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["kind", "n", "seed", "check", "pass", "witnesses", "faces", "crossings", "triangles"])
        for entry in report.entries:
            seed = entry.get("seed", "")
            n = entry.get("n", "")
            counts = entry.get("counts", {})
            w.writerow(
                [
                    report.kind,
                    n,
                    seed,
                    "validation",
                    entry["validation"]["ok"],
                    len(entry["validation"]["violations"]),
                    counts.get("faces", ""),
                    counts.get("crossings", ""),
                    counts.get("triangles", ""),
                ]
            )
            for name, rep in entry["checks"].items():
                w.writerow(
                    [
                        report.kind,
                        n,
                        seed,
                        name,
                        rep["pass"],
                        len(rep["witnesses"]),
                        rep["counts"].get("faces", ""),
                        rep["counts"].get("crossings", ""),
                        rep["counts"].get("triangles", ""),
                    ]
                )

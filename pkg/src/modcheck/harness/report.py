"""Theorem reports and their JSON / text renderings.

JSON is the stable interface (schema version 1).  Wall time is kept on the
report objects but never serialized, so identical configs give identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..module import generating_set

SCHEMA_VERSION = 1

# witness records kept per report; totals still count every one
MAX_RECORDS = 25


@dataclass
class WitnessRecord:
    module: str
    criterion: str
    submodule: list = None
    endo: list = None
    element: list = None
    detail: str = ""

    def to_dict(self):
        return {
            "module": self.module,
            "submodule": self.submodule,
            "endo": self.endo,
            "element": self.element,
            "criterion": self.criterion,
            "detail": self.detail,
        }


def record(M, criterion, N=None, endo=None, element=None, detail=""):
    """Build a witness record from engine objects (``endo`` may be an Endomorphism or a matrix)."""
    sub = None
    if N is not None:
        sub = [list(N.parent.element(g)) for g in generating_set(N)]
    if endo is not None and hasattr(endo, "matrix"):
        endo = endo.matrix
    return WitnessRecord(
        module=str(M),
        criterion=criterion,
        submodule=sub,
        endo=[list(map(int, row)) for row in endo] if endo is not None else None,
        element=list(map(int, element)) if element is not None else None,
        detail=detail,
    )


@dataclass
class TheoremReport:
    theorem: str
    kind: str = "theorem"          # "search" when the report exists to find examples rather than violations
    checked: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    failures_total: int = 0
    findings_total: int = 0
    record_cap: int = MAX_RECORDS  # None keeps every finding
    skipped: bool = False
    skip_reason: str = ""
    wall_time: float = 0.0

    @property
    def exercised(self):
        return self.checked - self.vacuous

    @property
    def status(self):
        if self.skipped:
            return "skipped"
        return "fail" if self.failures_total else "pass"

    def fail(self, rec):
        self.failures_total += 1
        if len(self.failures) < MAX_RECORDS:
            self.failures.append(rec)

    def find(self, rec):
        self.findings_total += 1
        if self.record_cap is None or len(self.findings) < self.record_cap:
            self.findings.append(rec)

    def to_dict(self):
        out = {
            "theorem": self.theorem,
            "kind": self.kind,
            "status": self.status,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "failures_total": self.failures_total,
            "failures": [r.to_dict() for r in self.failures],
            "findings_total": self.findings_total,
            "findings": [r.to_dict() for r in self.findings],
        }
        if self.skipped:
            out["skip_reason"] = self.skip_reason
        return out


def run_failed(reports):
    """True iff some verifier recorded a failure; findings never fail a run."""
    return any(r.failures_total for r in reports)


def to_document(reports, config=None, corpus_summary=None):
    doc = {"version": SCHEMA_VERSION, "config": config or {}}
    if corpus_summary is not None:
        doc["corpus"] = corpus_summary
    doc["reports"] = [r.to_dict() for r in reports]
    return doc


def emit_report(reports, fmt="json", config=None, corpus_summary=None):
    """Render reports as bytes; ``fmt`` is ``"json"`` or ``"text"``."""
    if fmt == "json":
        doc = to_document(reports, config, corpus_summary)
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"{'theorem':<12} {'status':<8} {'checked':>8} {'vacuous':>8} {'fails':>6} {'finds':>6}"]
    for r in reports:
        lines.append(
            f"{r.theorem:<12} {r.status:<8} {r.checked:>8} {r.vacuous:>8} {r.failures_total:>6} {r.findings_total:>6}"
        )
        for rec in r.failures[:5]:
            lines.append(f"    FAIL [{rec.criterion}] {rec.module}  N={rec.submodule} f={rec.endo} m={rec.element} {rec.detail}")
        if r.skipped:
            lines.append(f"    skipped: {r.skip_reason}")
    return ("\n".join(lines) + "\n").encode("utf-8")

"""Verification reports: one structured report per catalog row, a
merged all-rows run with worker fan-out, and the delimited summary plus
rendered figures that the CLI writes for a full run."""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .amalgam import ROWS_BY_LABEL, verify_row
from .autgrp import certify_uniqueness
from .fpgroups import TABLE3, verify_presentation_s_le_3
from .amalgam import build_row
from .svalue import measure_row
from .witnesses import verify_assignment

SCHEMA = 1


class ReportError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    """One verified claim: what was expected, what was observed."""

    name: str
    expected: object
    observed: object
    ok: bool
    note: str = ""

    def to_dict(self):
        return {"name": self.name, "expected": self.expected,
                "observed": self.observed, "ok": self.ok,
                "note": self.note}


@dataclass(frozen=True)
class VerificationReport:
    label: str
    checks: tuple = ()
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self):
        return {"schema": SCHEMA, "label": self.label,
                "ok": self.ok, "checks": [c.to_dict() for c in self.checks],
                "notes": list(self.notes)}

    @classmethod
    def from_dict(cls, data):
        if data.get("schema") != SCHEMA:
            raise ReportError(f"unsupported schema {data.get('schema')!r}")
        checks = tuple(Check(c["name"], c["expected"], c["observed"],
                             c["ok"], c.get("note", ""))
                       for c in data["checks"])
        report = cls(data["label"], checks, tuple(data.get("notes", ())))
        if report.ok != data["ok"]:
            raise ReportError("overall status does not match the checks")
        return report


def _row_checks(label: str):
    row = ROWS_BY_LABEL[label]
    base = verify_row(label)
    checks = [
        Check("degree", (5, 2), (5, 2) if base["checks"]["degree"] else None,
              base["checks"]["degree"]),
        Check("orders", (5 * row.b_order, 2 * row.b_order, row.b_order),
              base["orders"], base["checks"]["orders"]),
        Check("primitive", True, base["checks"]["primitive"],
              base["checks"]["primitive"]),
        Check("b_primes", "subset of {2, 3}", sorted(
            p for p in (2, 3, 5, 7) if row.b_order % p == 0),
            base["checks"]["b_primes"],
            note="the factor 5 lives in |A1|, not |B|"),
    ]
    if "brute_oracle" in base["checks"]:
        checks.append(Check("brute_oracle", True,
                            base["checks"]["brute_oracle"],
                            base["checks"]["brute_oracle"],
                            note="subgroup-enumeration primitivity oracle"))
    for key in ("a1_type", "a2_type", "b_type"):
        if key in base["checks"]:
            checks.append(Check(key, True, base["checks"][key],
                                base["checks"][key]))
    return checks, base


def _uniqueness_checks(label: str):
    cert = certify_uniqueness(label)
    expected = {"Q1^4": 2, "Q3^1": 3}.get(label, 1)
    return [
        Check("double_cosets", expected, cert["double_cosets"],
              cert["double_cosets"] == expected),
        Check("primitive_classes", 1, cert["primitive_classes"],
              cert["primitive_classes"] == 1),
    ]


def _presentation_check(label: str):
    amalgam = build_row(label)
    out = verify_presentation_s_le_3(TABLE3[label], amalgam.b,
                                     amalgam.a1, amalgam.a2)
    observed = (out["b"]["order"], out["vertex"]["order"],
                out["edge"]["order"])
    return Check("presentation", tuple(out["orders"]["expected"]), observed,
                 out["ok"], note="coset enumeration plus isomorphism onto "
                 "the realized groups")


def _witness_check(label: str):
    out = verify_assignment(label)
    return Check("witness", out["completion_order"], out["generated_order"],
                 out["ok"], note="frozen assignment satisfies every "
                 "relator and generates the completion")


def _s_checks(label: str):
    row = ROWS_BY_LABEL[label]
    measured = measure_row(label)
    checks = [Check("s", row.s, measured["s"], measured["s_ok"],
                    note=f"guard={measured['guard']} "
                    f"source={measured['source']} "
                    f"n={measured['n_vertices']}")]
    local = measured.get("local")
    if local is not None:
        if row.family == 2:
            checks.append(Check("local_index", "!= 4", local["index"],
                                local["index"] != 4,
                                note="a 3-arc stabilizer index of 4 is "
                                "necessary for s = 3"))
        else:
            checks.append(Check(
                "local_index", 4, local["index"], local["index"] == 4,
                note="forward image order "
                f"{local['forward_image_order']}, "
                f"cyclic={local['forward_image_cyclic']}"))
    return checks


def build_report(label: str) -> VerificationReport:
    """Every machine check for one catalog row."""
    if label not in ROWS_BY_LABEL:
        raise ReportError(f"unknown row {label!r}")
    row = ROWS_BY_LABEL[label]
    checks, base = _row_checks(label)
    if not row.geometric:
        checks.extend(_uniqueness_checks(label))
        checks.append(_presentation_check(label))
    else:
        checks.append(_witness_check(label))
    checks.extend(_s_checks(label))
    return VerificationReport(label, tuple(checks), tuple(base["notes"]))


def default_workers() -> int:
    env = os.environ.get("AMALGAMLAB_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def build_all_reports(labels=None, workers: int | None = None):
    """Reports for many rows, fanned out across workers and merged in
    label order."""
    labels = list(labels) if labels is not None else list(ROWS_BY_LABEL)
    workers = workers or default_workers()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(build_report, labels))
    return reports


def reports_to_json(reports) -> str:
    return json.dumps({"schema": SCHEMA,
                       "reports": [r.to_dict() for r in reports]}, indent=2)


def write_csv(reports, path):
    """The delimited summary: one row per report."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["label", "s", "a1_order", "a2_order", "b_order",
                         "checks", "failed", "ok"])
        for report in reports:
            row = ROWS_BY_LABEL[report.label]
            failed = ";".join(c.name for c in report.checks if not c.ok)
            writer.writerow([report.label, row.s, 5 * row.b_order,
                             2 * row.b_order, row.b_order,
                             len(report.checks), failed, report.ok])


def render_figures(reports, directory):
    """Render the summary figures next to the delimited output.
    Returns the written paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [r.label for r in reports]
    rows = [ROWS_BY_LABEL[lbl] for lbl in labels]
    paths = []

    fig, ax = plt.subplots(figsize=(10, 4))
    colors = {1: "#4c72b0", 2: "#dd8452", 3: "#55a868", 4: "#c44e52",
              5: "#8172b3"}
    ax.bar(range(len(rows)), [row.b_order for row in rows],
           color=[colors[row.s] for row in rows])
    ax.set_yscale("log", base=2)
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("|B|")
    ax.set_title("edge-group orders across the catalog (colour = s)")
    fig.tight_layout()
    path = os.path.join(directory, "orders.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(10, 3.2))
    measured, expected = [], []
    for report in reports:
        s_check = next(c for c in report.checks if c.name == "s")
        measured.append(s_check.observed)
        expected.append(s_check.expected)
    ax.plot(range(len(labels)), expected, "o", label="catalog s",
            markersize=9, fillstyle="none", color="#333333")
    ax.plot(range(len(labels)), measured, ".", label="measured s",
            color="#c44e52")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
    ax.set_yticks([1, 2, 3, 4, 5])
    ax.set_ylabel("s")
    ax.legend(loc="upper left")
    ax.set_title("measured s-arc-transitivity per row")
    fig.tight_layout()
    path = os.path.join(directory, "svalues.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)
    return paths


def write_run(reports, directory):
    """A full report run: JSON, CSV and figures in one directory."""
    os.makedirs(directory, exist_ok=True)
    json_path = os.path.join(directory, "report.json")
    with open(json_path, "w") as handle:
        handle.write(reports_to_json(reports))
    csv_path = os.path.join(directory, "report.csv")
    write_csv(reports, csv_path)
    return [json_path, csv_path] + render_figures(reports, directory)

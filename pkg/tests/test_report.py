"""Report assembly, serialization round-trips, CSV and figure output."""

import csv
import json
import os

import pytest

from amalgamlab.report import (
    SCHEMA,
    ReportError,
    VerificationReport,
    build_all_reports,
    build_report,
    reports_to_json,
    write_csv,
    write_run,
)

FAST = ["Q1^1", "Q2^7", "Q3^1", "Q4^1"]


class TestBuildReport:
    @pytest.mark.parametrize("label", FAST)
    def test_all_checks_pass(self, label):
        report = build_report(label)
        assert report.ok, [c.name for c in report.checks if not c.ok]

    def test_unknown_label(self):
        with pytest.raises(ReportError):
            build_report("Q9^9")

    def test_q3_1_uniqueness_fields(self):
        report = build_report("Q3^1")
        by_name = {c.name: c for c in report.checks}
        assert by_name["double_cosets"].observed == 3
        assert by_name["primitive_classes"].observed == 1

    def test_q4_1_has_witness(self):
        report = build_report("Q4^1")
        names = [c.name for c in report.checks]
        assert "witness" in names
        assert "presentation" not in names

    def test_presentation_check_orders(self):
        report = build_report("Q2^7")
        check = next(c for c in report.checks if c.name == "presentation")
        assert tuple(check.observed) == (12, 60, 24)


class TestSerialization:
    def test_round_trip(self):
        report = build_report("Q1^1")
        data = json.loads(json.dumps(report.to_dict()))
        assert VerificationReport.from_dict(data).to_dict() == data

    def test_schema_guard(self):
        data = build_report("Q1^1").to_dict()
        data["schema"] = 99
        with pytest.raises(ReportError):
            VerificationReport.from_dict(data)

    def test_status_consistency_guard(self):
        data = build_report("Q1^1").to_dict()
        data["ok"] = False
        with pytest.raises(ReportError):
            VerificationReport.from_dict(data)

    def test_json_document(self):
        doc = json.loads(reports_to_json([build_report("Q1^2")]))
        assert doc["schema"] == SCHEMA
        assert len(doc["reports"]) == 1


class TestOutputs:
    def test_csv(self, tmp_path):
        reports = [build_report(lbl) for lbl in ("Q1^1", "Q1^2")]
        path = tmp_path / "summary.csv"
        write_csv(reports, path)
        with open(path) as handle:
            rows = list(csv.DictReader(handle))
        assert [r["label"] for r in rows] == ["Q1^1", "Q1^2"]
        assert rows[0]["ok"] == "True"

    def test_write_run_renders_figures(self, tmp_path):
        reports = [build_report(lbl) for lbl in FAST]
        paths = write_run(reports, str(tmp_path))
        names = sorted(os.path.basename(p) for p in paths)
        assert names == ["orders.png", "report.csv", "report.json",
                         "svalues.png"]
        for path in paths:
            assert os.path.getsize(path) > 0

    def test_parallel_matches_serial(self):
        labels = ["Q1^1", "Q1^4"]
        serial = [build_report(lbl).to_dict() for lbl in labels]
        parallel = [r.to_dict() for r in
                    build_all_reports(labels, workers=2)]
        assert serial == parallel

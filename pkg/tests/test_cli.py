"""The command-line surface: outputs and the exit-code contract."""

import json

import pytest

from amalgamlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestCatalog:
    def test_list_all(self, capsys):
        code, out = run(capsys, "catalog", "list")
        assert code == 0
        assert "25 rows" in out
        assert "Q2^6" in out and "M16" in out

    def test_filter_s4(self, capsys):
        code, out = run(capsys, "catalog", "list", "--filter", "s=4")
        assert code == 0
        assert "6 rows" in out

    def test_json(self, capsys):
        code, out = run(capsys, "catalog", "list", "--json")
        rows = json.loads(out)
        assert len(rows) == 25
        q26 = next(r for r in rows if r["label"] == "Q2^6")
        assert q26["b_order"] == 8

    def test_bad_filter(self, capsys):
        code, _ = run(capsys, "catalog", "list", "--filter", "bogus")
        assert code == 2


class TestVerify:
    def test_single_row(self, capsys):
        code, out = run(capsys, "verify", "Q1^1")
        assert code == 0
        assert "Q1^1" in out and "ok" in out

    def test_unknown_label(self, capsys):
        code, _ = run(capsys, "verify", "Q7^7")
        assert code == 2

    def test_json_output(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, _ = run(capsys, "verify", "Q1^2", "--json", str(target))
        assert code == 0
        doc = json.loads(target.read_text())
        assert doc["schema"] == 1
        assert doc["reports"][0]["label"] == "Q1^2"
        assert doc["reports"][0]["ok"]

    def test_q3_1_report_fields(self, capsys, tmp_path):
        target = tmp_path / "q31.json"
        code, _ = run(capsys, "verify", "Q3^1", "--json", str(target))
        assert code == 0
        doc = json.loads(target.read_text())
        checks = {c["name"]: c for c in doc["reports"][0]["checks"]}
        assert checks["double_cosets"]["observed"] == 3
        assert checks["primitive_classes"]["observed"] == 1


class TestGraph:
    def test_emit(self, capsys, tmp_path):
        target = tmp_path / "edges.txt"
        code, out = run(capsys, "graph", "Q4^1", "--emit", str(target))
        assert code == 0
        assert "vertices: 42" in out
        lines = target.read_text().splitlines()
        assert len(lines) == 105  # 5 * 42 / 2
        u, v = lines[0].split()
        assert int(u) == 0


class TestEnumerate:
    def test_q1_2(self, capsys):
        code, out = run(capsys, "enumerate-completions", "Q1^2",
                        "--limit", "1")
        assert code == 0
        assert "order" in out and "vertices" in out


class TestPresentation:
    def test_q2_3_check(self, capsys):
        code, out = run(capsys, "presentation", "Q2^3", "--check")
        assert code == 0
        assert "(4, 20, 8)" in out

    def test_print_only(self, capsys):
        code, out = run(capsys, "presentation", "Q3^1")
        assert code == 0
        assert "gens:" in out and "rel" in out

    def test_q4_check(self, capsys):
        code, out = run(capsys, "presentation", "Q4^1", "--check")
        assert code == 0
        assert "witness" in out

    def test_quiet(self, capsys):
        code, out = run(capsys, "--quiet", "presentation", "Q2^3",
                        "--check")
        assert code == 0
        assert out == ""


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

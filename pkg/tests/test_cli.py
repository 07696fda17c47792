"""End-to-end CLI behavior via in-process main() calls."""

import json
from pathlib import Path

import jsonschema
import pytest

import binshift.cli as cli
from binshift.cli import SCHEMAS, main
from binshift.families import SegmentRow
from binshift.verify import PropertyResult, SuiteReport

GOLDEN_SEGMENTS = Path(__file__).parent / "golden" / "table2_segments.csv"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTransform:
    def test_family_plain(self, capsys):
        code, out, err = run_cli(capsys, "transform", "--family", "fibonacci", "-r", "1")
        assert code == 0 and err == ""
        assert out == "0 1 3 8 21 55 144 377 987 2584\n"

    def test_family_oeis_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "transform", "--family", "fibonacci", "-r", "1", "--format", "oeis"
        )
        assert code == 0
        assert out == "0, 1, 3, 8, 21, 55, 144, 377, 987, 2584\n"

    def test_inline_negative_shift(self, capsys):
        code, out, _ = run_cli(capsys, "transform", "--inline", "0,1,3,8,21", "-r=-1")
        assert code == 0
        assert out == "0 1 1 2 3\n"

    def test_inline_rational_shift(self, capsys):
        code, out, _ = run_cli(capsys, "transform", "--inline", "1,0,0,0", "-r", "1/2")
        assert code == 0
        assert out == "1 1/2 1/4 1/8\n"

    def test_shift_zero_default(self, capsys):
        code, out, _ = run_cli(capsys, "transform", "--inline", "5,6,7")
        assert code == 0
        assert out == "5 6 7\n"

    def test_length_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "transform", "--family", "mersenne", "-r", "1", "-n", "4"
        )
        assert code == 0
        assert out == "0 1 5 19 65\n"

    def test_json_matches_schema(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "transform", "--family", "lucas", "-r", "1/2", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["transform"])
        assert doc["source"] == "lucas"
        assert doc["shift"] == "1/2"
        assert doc["domain"] == "rat"
        # exactly integral values serialize as numbers, others exactly
        assert doc["values"][:3] == [2, 2, "9/2"]

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "transform", "--inline", "0,1", "--format", "csv"
        )
        assert code == 0
        assert out == "n,value\n0,0\n1,1\n"

    def test_unknown_family_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "transform", "--family", "tribonacci")
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_bad_inline_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "transform", "--inline", "1,,2")
        assert code == 2 and "error:" in err

    def test_inline_too_short_for_length(self, capsys):
        code, _, err = run_cli(capsys, "transform", "--inline", "0,1", "-n", "5")
        assert code == 2 and "error:" in err

    def test_negative_length_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "transform", "--family", "pell", "-n=-1"
        )
        assert code == 2 and "error:" in err

    def test_source_is_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["transform", "-r", "1"])
        assert exc.value.code == 2


class TestShiftPoly:
    def test_plain(self, capsys):
        code, out, _ = run_cli(capsys, "shift-poly", "1,-1,-1", "-r", "1")
        assert code == 0
        assert out == "X^2 - 3*X + 1\n"

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "shift-poly", "1,-3,2", "-r", "1", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["shift-poly"])
        assert doc == {
            "shift": "1",
            "input": [1, -3, 2],
            "coefficients": [1, -5, 6],
            "text": "X^2 - 5*X + 6",
        }

    def test_rational_shift(self, capsys):
        code, out, _ = run_cli(capsys, "shift-poly", "1,0", "-r", "1/2")
        assert code == 0
        assert out == "X - 1/2\n"

    def test_non_monic_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "shift-poly", "2,1", "-r", "1")
        assert code == 2
        assert err.startswith("error:")

    def test_constant_rejected(self, capsys):
        code, _, err = run_cli(capsys, "shift-poly", "1", "-r", "1")
        assert code == 2 and "error:" in err


class TestTable:
    def test_segments_csv_matches_golden_file(self, capsys):
        code, out, _ = run_cli(capsys, "table", "segments", "--format", "csv")
        assert code == 0
        assert out == GOLDEN_SEGMENTS.read_text()

    def test_segments_json(self, capsys):
        code, out, _ = run_cli(capsys, "table", "segments", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["table-segments"])
        assert len(doc["rows"]) == 10
        assert all(row["matches_reference"] for row in doc["rows"])

    def test_recurrences_plain(self, capsys):
        code, out, _ = run_cli(capsys, "table", "recurrences")
        assert code == 0
        assert "(2r+1)*b(n-1)" in out
        assert "(r^2+r-1)*b(n-2)" in out
        assert "MISMATCH" not in out

    def test_recurrences_json(self, capsys):
        code, out, _ = run_cli(capsys, "table", "recurrences", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["table-recurrences"])
        lucas = next(r for r in doc["rows"] if r["family"] == "lucas")
        assert lucas["init"] == [2, "1 + 2*r"]

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        fake = [SegmentRow("fibonacci", 1, (0,), (1,), False)]
        monkeypatch.setattr(cli, "table_initial_segments", lambda: fake)
        code, out, _ = run_cli(capsys, "table", "segments")
        assert code == 1
        assert "MISMATCH" in out


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "semigroup", "--cases", "10", "--seed", "5"
        )
        assert code == 0 and err == ""
        assert out.startswith("suite semigroup (seed 5, 10 cases)\n")
        assert "all 5 properties passed" in out
        assert "FAIL" not in out

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "rootshift", "--cases", "8")
        _, second, _ = run_cli(capsys, "verify", "rootshift", "--cases", "8")
        assert first == second

    def test_json_matches_schema(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "identities", "--cases", "6", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["verify"])
        assert doc["ok"] is True
        assert doc["suite"] == "identities"

    def test_failure_exits_1(self, capsys, monkeypatch):
        report = SuiteReport(
            "semigroup",
            0,
            10,
            [PropertyResult("linearity", 10, False, "case 3: mismatch")],
        )
        monkeypatch.setattr(cli, "run_suite", lambda *a, **k: report)
        code, out, _ = run_cli(capsys, "verify", "semigroup")
        assert code == 1
        assert "FAIL linearity" in out
        assert "1 of 1 properties failed" in out

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "bogus"])
        assert exc.value.code == 2


class TestFamily:
    def test_plain_listing(self, capsys):
        code, out, _ = run_cli(capsys, "family")
        assert code == 0
        assert "fibonacci" in out and "A000045" in out
        assert "X^2 - X - 1" in out
        assert "wpoly" in out

    def test_json_matches_schema(self, capsys):
        code, out, _ = run_cli(capsys, "family", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMAS["family"])
        assert len(doc["families"]) == 6
        wpoly = next(f for f in doc["families"] if f["name"] == "wpoly")
        assert wpoly["oeis"] is None
        assert wpoly["domain"] == "poly(x)"

    def test_csv_header(self, capsys):
        code, out, _ = run_cli(capsys, "family", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "name,oeis,poly,init0,init1"


class TestUsageErrors:
    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_format_choice(self):
        with pytest.raises(SystemExit) as exc:
            main(["family", "--format", "yaml"])
        assert exc.value.code == 2

    def test_bad_shift_literal(self, capsys):
        code, _, err = run_cli(capsys, "transform", "--inline", "1,2", "-r", "x")
        assert code == 2 and "cannot parse shift" in err

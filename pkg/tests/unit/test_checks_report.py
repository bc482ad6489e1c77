import csv
import io
import json
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path

from delannoy_schroder.core.checks.config import RunConfig
from delannoy_schroder.core.checks.errors import ReportWriteError
from delannoy_schroder.core.checks.models import (
    CheckResult,
    CheckStatus,
    OutputFormat,
    Suite,
    Summary,
)
from delannoy_schroder.core.checks.report import (
    CSV_COLUMNS,
    Report,
    emit_report,
    to_csv,
    to_json,
    to_text,
)


def _report(results: list[CheckResult]) -> Report:
    return Report(
        schema_version=1,
        tool_version="0.1.0",
        config=RunConfig(ids=["C_1_15"]),
        results=results,
        summary=Summary.from_results(results),
    )


PASS_RESULT = CheckResult(
    suite=Suite.CONGRUENCES,
    id="C_1_15",
    params={"p": 3},
    status=CheckStatus.PASS,
    witness="both sides 1 (mod 3)",
)

COMMA_RESULT = CheckResult(
    suite=Suite.IDENTITIES,
    id="EQ_2_7",
    params={"n": 2, "m": 1},
    status=CheckStatus.FAIL,
    witness="lhs=1, rhs=2",
)


class TestReport(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.report module."""

    def test_json_schema_fields(self):
        """Test the top-level field names of the json report."""
        data = json.loads(to_json(_report([PASS_RESULT])))
        self.assertEqual(
            list(data),
            ["schema_version", "tool_version", "config", "results", "summary", "elapsed_ms"],
        )
        self.assertEqual(data["results"][0]["status"], "pass")
        self.assertEqual(data["config"]["ids"], ["C_1_15"])

    def test_empty_json(self):
        """Test that an empty result set gives results [] and zero counts."""
        data = json.loads(to_json(_report([])))
        self.assertEqual(data["results"], [])
        self.assertEqual(data["summary"]["total"], 0)
        self.assertTrue(all(v == 0 for v in data["summary"]["counts"].values()))

    def test_json_deterministic(self):
        """Test that equal reports render to identical bytes."""
        self.assertEqual(to_json(_report([PASS_RESULT])), to_json(_report([PASS_RESULT])))

    def test_csv_one_row(self):
        """Test the csv header and a single data row."""
        lines = to_csv(_report([PASS_RESULT])).splitlines()
        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertEqual(lines[0], "suite,id,params,status,witness,elapsed_ms")
        self.assertEqual(len(lines), 2)
        self.assertEqual(lines[1], "congruences,C_1_15,p=3,pass,both sides 1 (mod 3),0")

    def test_csv_quotes_commas(self):
        """Test that witnesses containing commas are quoted and params sorted by key."""
        text = to_csv(_report([COMMA_RESULT]))
        self.assertIn('"lhs=1, rhs=2"', text)
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(rows[0]["witness"], "lhs=1, rhs=2")
        self.assertEqual(rows[0]["params"], "m=1;n=2")

    def test_csv_empty(self):
        """Test that an empty report still has the header."""
        self.assertEqual(to_csv(_report([])).strip(), "suite,id,params,status,witness,elapsed_ms")

    def test_text(self):
        """Test the text summary with failures."""
        text = to_text(_report([PASS_RESULT, COMMA_RESULT]))
        self.assertIn("C_1_15", text)
        self.assertIn("Summary: 2 checks (pass: 1, fail: 1)", text)
        self.assertIn("Proved-statement failures: 1", text)
        self.assertIn("No checks selected", to_text(_report([])))

    def test_emit_to_file(self):
        """Test writing a report to a path."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "report.csv"
            emit_report(_report([PASS_RESULT]), OutputFormat.CSV, path)
            self.assertEqual(path.read_text(encoding="utf-8"), to_csv(_report([PASS_RESULT])))

    def test_emit_to_stdout(self):
        """Test that no path means standard output."""
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            emit_report(_report([PASS_RESULT]), "json")
        self.assertEqual(buffer.getvalue(), to_json(_report([PASS_RESULT])))

    def test_emit_unwritable(self):
        """Test that an I/O failure raises ReportWriteError."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "missing" / "report.json"
            with self.assertRaises(ReportWriteError):
                emit_report(_report([PASS_RESULT]), OutputFormat.JSON, path)


if __name__ == "__main__":
    unittest.main()

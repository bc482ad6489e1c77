import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import replace
from pathlib import Path
from unittest.mock import patch

import yaml

from delannoy_schroder.core.checks.__main__ import main, parse_args
from delannoy_schroder.core.checks.models import OutputFormat, Suite
from delannoy_schroder.core.checks.registry import get_catalog
from delannoy_schroder.core.checks.verdicts import Verdict
from delannoy_schroder.core.exact.errors import ConsistencyError


def _inconsistent(n: int) -> Verdict:
    raise ConsistencyError("two constructions of D_1 disagree")


class TestParseArgs(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.__main__ module."""

    def test_verify_single_identity(self):
        """Test a verify command selecting one identity."""
        cfg = parse_args(["verify", "--suite", "identities", "--ids", "EQ_1_7", "--n-max", "50"])
        self.assertEqual(cfg.command, "verify")
        self.assertEqual(cfg.suites, [Suite.IDENTITIES])
        self.assertEqual(cfg.ids, ["EQ_1_7"])
        self.assertEqual(cfg.n_max, 50)

    def test_verify_ranges_and_repeats(self):
        """Test repeated suites and grids with a prime range."""
        cfg = parse_args(
            [
                "verify",
                "--suite", "identities",
                "--suite", "congruences,conjectures",
                "--primes", "3..31",
                "--grid", "x=-2..2",
                "--grid", "b=1..2",
                "--jobs", "3",
                "--format", "csv",
                "--strict-conjectures",
            ]
        )  # fmt: skip
        self.assertEqual(cfg.suites, [Suite.IDENTITIES, Suite.CONGRUENCES, Suite.CONJECTURES])
        self.assertEqual(cfg.primes, (3, 31))
        self.assertEqual(cfg.grid, {"x": (-2, 2), "b": (1, 2)})
        self.assertEqual(cfg.jobs, 3)
        self.assertEqual(cfg.format, OutputFormat.CSV)
        self.assertTrue(cfg.strict_conjectures)

    def test_bigprime(self):
        """Test that the bigprime command selects the large-prime suite."""
        cfg = parse_args(["bigprime", "--p", "588811"])
        self.assertEqual(cfg.command, "bigprime")
        self.assertEqual(cfg.suites, [Suite.BIGPRIME])
        self.assertEqual(cfg.p, 588811)
        self.assertIsNone(cfg.y)

    def test_bigprime_config_file(self):
        """Test that the large-prime check reads a YAML config with flags taking precedence."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bigprime.yaml"
            path.write_text(yaml.safe_dump({"p": 5, "y": 3, "format": "json"}), encoding="utf-8")
            cfg = parse_args(["bigprime", "--config", str(path), "--p", "7"])
        self.assertEqual(cfg.command, "bigprime")
        self.assertEqual(cfg.suites, [Suite.BIGPRIME])
        self.assertEqual(cfg.p, 7)
        self.assertEqual(cfg.y, 3)
        self.assertEqual(cfg.format, OutputFormat.JSON)

    def test_unknown_suite_exits_2(self):
        """Test that an unknown suite is a usage error."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                parse_args(["verify", "--suite", "nonsense"])
        self.assertEqual(ctx.exception.code, 2)

    def test_bad_range_exits_2(self):
        """Test that a malformed grid is a usage error."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                parse_args(["verify", "--grid", "x=2..1"])
        self.assertEqual(ctx.exception.code, 2)

    def test_missing_command_exits_2(self):
        """Test that a command is required."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                parse_args([])
        self.assertEqual(ctx.exception.code, 2)

    def test_config_file_with_flag_precedence(self):
        """Test that flags override values from the config file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "run.json"
            path.write_text(json.dumps({"ids": "EQ_2_4", "n-max": 9, "format": "json"}), encoding="utf-8")
            cfg = parse_args(["verify", "--config", str(path), "--n-max", "4"])
        self.assertEqual(cfg.ids, ["EQ_2_4"])
        self.assertEqual(cfg.n_max, 4)
        self.assertEqual(cfg.format, OutputFormat.JSON)

    def test_missing_config_file_exits_2(self):
        """Test that an unreadable config file is a usage error."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                parse_args(["verify", "--config", "/nonexistent/run.yaml"])
        self.assertEqual(ctx.exception.code, 2)


class TestMain(unittest.IsolatedAsyncioTestCase):
    """Tests for the exit-code contract of main."""

    async def test_verify_writes_json(self):
        """Test a passing run written to a file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "report.json"
            code = await main(
                [
                    "verify",
                    "--suite", "congruences",
                    "--ids", "C_1_15",
                    "--primes", "3..7",
                    "--format", "json",
                    "--out", str(path),
                ]
            )  # fmt: skip
            data = json.loads(path.read_text(encoding="utf-8"))
        self.assertEqual(code, 0)
        self.assertEqual([r["params"]["p"] for r in data["results"]], [3, 5, 7])
        self.assertEqual(data["summary"]["counts"]["pass"], 3)

    async def test_unknown_id_exits_2(self):
        """Test that an unknown check id exits with code 2."""
        self.assertEqual(await main(["verify", "--ids", "EQ_0_0"]), 2)

    async def test_bigprime_composite_exits_2(self):
        """Test that a composite p for the large-prime check exits with code 2."""
        self.assertEqual(await main(["bigprime", "--p", "9"]), 2)

    async def test_bigprime_failure_exits_1(self):
        """Test that the large-prime check failing at p = 5 exits with code 1."""
        with redirect_stdout(io.StringIO()) as out:
            code = await main(["bigprime", "--p", "5", "--y", "2"])
        self.assertEqual(code, 1)
        self.assertIn("REMARK_1_2", out.getvalue())

    async def test_unwritable_report_exits_3(self):
        """Test that an I/O failure writing the report exits with code 3."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "missing" / "report.csv"
            code = await main(
                ["verify", "--ids", "EQ_S2S", "--suite", "identities", "--n-max", "2", "--out", str(path)]
            )
        self.assertEqual(code, 3)

    async def test_consistency_failure_exits_4(self):
        """Test that an internal consistency failure exits with code 4 and no report."""
        catalog = get_catalog()
        broken = replace(catalog["EQ_2_2"], func=_inconsistent)
        with patch.dict(catalog, {"EQ_2_2": broken}):
            with self.assertLogs("delannoy_schroder", level="ERROR") as logs:
                with redirect_stdout(io.StringIO()) as out:
                    code = await main(
                        ["verify", "--suite", "identities", "--ids", "EQ_2_2", "--n-max", "1", "--jobs", "1"]
                    )
        self.assertEqual(code, 4)
        self.assertEqual(out.getvalue(), "")
        self.assertTrue(any("consistency failure" in line for line in logs.output))

    async def test_list(self):
        """Test that list prints every catalog id."""
        with redirect_stdout(io.StringIO()) as out:
            code = await main(["list"])
        self.assertEqual(code, 0)
        text = out.getvalue()
        for entry_id in ("EQ_1_7", "C_1_12", "CONJ_4_9", "REMARK_1_2"):
            self.assertIn(entry_id, text)


if __name__ == "__main__":
    unittest.main()

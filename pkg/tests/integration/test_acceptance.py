"""Full-range runs of every suite, as in a release acceptance run.

These take minutes; DELANNOY_JOBS sets the worker count.
"""

import unittest

from delannoy_schroder.core.checks.config import RunConfig
from delannoy_schroder.core.checks.models import CheckStatus, Suite
from delannoy_schroder.core.checks.registry import get_catalog
from delannoy_schroder.core.checks.report import to_json
from delannoy_schroder.core.checks.runner import exit_code, run_suite
from delannoy_schroder.core.config.config import DEFAULT_JOBS
from delannoy_schroder.core.exact.primes import odd_primes
from delannoy_schroder.toolkits.congruences.bigprime import REMARK_PRIME, REMARK_Y
from delannoy_schroder.toolkits.congruences.executor import (
    scan_congruences,
    verify_bigprime,
)
from delannoy_schroder.toolkits.identities.executor import verify_identity


class TestAcceptance(unittest.IsolatedAsyncioTestCase):
    """Acceptance runs over the default parameter ranges."""

    async def test_default_suites_cover_catalog(self):
        """Test that the default run passes and reaches every entry but the large-prime one."""
        report = await run_suite(RunConfig(jobs=DEFAULT_JOBS))
        failures = [str(r) for r in report.results if r.status == CheckStatus.FAIL]
        self.assertEqual(failures, [])
        self.assertEqual(exit_code(report, strict_conjectures=True), 0)
        covered = {r.id for r in report.results} | {"REMARK_1_2"}
        self.assertEqual(covered, set(get_catalog()))
        for r in report.results:
            if r.suite == Suite.CONJECTURES:
                self.assertNotEqual(r.status, CheckStatus.FAIL, str(r))
            else:
                self.assertIn(r.status, (CheckStatus.PASS, CheckStatus.SKIP), str(r))

    async def test_extended_primes(self):
        """Test the entries flagged for the longer prime range."""
        cfg = RunConfig(
            suites=[Suite.CONGRUENCES],
            ids=["C_1_12", "C_1_15", "C_WOLST"],
            extended=True,
            jobs=DEFAULT_JOBS,
        )
        report = await run_suite(cfg)
        self.assertEqual(report.summary.proved_failures, 0)
        self.assertEqual(max(r.params["p"] for r in report.results), 499)

    async def test_report_independent_of_jobs(self):
        """Test byte-identical json for one and four workers."""
        cfg = {"suites": [Suite.CONGRUENCES], "ids": ["C_1_10", "C_3_8"], "primes": (3, 31)}
        serial = await run_suite(RunConfig(jobs=1, **cfg))
        parallel = await run_suite(RunConfig(jobs=4, **cfg))
        self.assertEqual(to_json(serial), to_json(parallel))


class TestInvariants(unittest.TestCase):
    """Invariants stated over full ranges."""

    def test_c_1_10_branches_partition(self):
        """Test that each grid x lands in exactly one branch."""
        for r in scan_congruences(["C_1_10"], primes=(3, 31)):
            grid_part = r.witness.split(";")[0]
            branches = [b for b in ("x = 0, -1 branch", "generic branch") if b in grid_part]
            self.assertEqual(len(branches), 1, r.witness)

    def test_lemma_recurrence_all_primes(self):
        """Test the u_j recurrence for every p < 60 and j < p."""
        for p in odd_primes(3, 60):
            for j in range(p):
                result = verify_identity("EQ_L25_REC", {"p": p, "j": j})
                self.assertEqual(result.status, CheckStatus.PASS, result.witness)


class TestBigprime(unittest.TestCase):
    """The large-prime remark at its stated prime."""

    def test_remark_prime(self):
        """Test both halves at p = 588811, y = 2."""
        result = verify_bigprime(REMARK_PRIME, REMARK_Y)
        self.assertEqual(result.status, CheckStatus.PASS, result.witness)
        self.assertIn("q_p(2) vs 1/3", result.witness)
        self.assertIn("W_p(2)", result.witness)


if __name__ == "__main__":
    unittest.main()

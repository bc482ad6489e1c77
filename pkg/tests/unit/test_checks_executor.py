import unittest
from dataclasses import replace
from fractions import Fraction

from delannoy_schroder.core.checks.errors import (
    MissingParamError,
    PredicateViolatedError,
    UnknownIdError,
)
from delannoy_schroder.core.checks.executor import (
    evaluate,
    expand_cells,
    lookup,
    parameter_ranges,
    validate_params,
)
from delannoy_schroder.core.checks.models import (
    CheckResult,
    CheckStatus,
    Suite,
    Summary,
    format_params,
)
from delannoy_schroder.core.checks.registry import get_catalog, select_entries
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    combine,
    compare,
    compare_mod,
    render,
    skip,
)
from delannoy_schroder.core.config.config import EXTENDED_PRIME_BOUND
from delannoy_schroder.core.exact.errors import ConsistencyError


def _raises(n: int) -> Verdict:
    raise ZeroDivisionError("division by zero")


def _inconsistent(n: int) -> Verdict:
    raise ConsistencyError("squares and cross forms of D_3 disagree")


class TestVerdicts(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.verdicts module."""

    def test_compare(self):
        """Test exact comparison witnesses."""
        self.assertEqual(compare(4, 4).witness, "both sides 4")
        failed = compare(3, 4, "sum")
        self.assertEqual(failed.status, CheckStatus.FAIL)
        self.assertEqual(failed.witness, "sum: lhs=3 rhs=4")

    def test_compare_mod_reduces_fractions(self):
        """Test that 1/3 is read as 2 modulo 5."""
        verdict = compare_mod(7, Fraction(1, 3), 5, 1)
        self.assertEqual(verdict.status, CheckStatus.PASS)
        self.assertEqual(verdict.witness, "both sides 2 (mod 5)")

    def test_combine(self):
        """Test that failures win and skips alone stay skips."""
        ok, bad = compare(1, 1, "a"), compare(1, 2, "b")
        self.assertEqual(combine([ok, bad]).status, CheckStatus.FAIL)
        self.assertEqual(combine([ok, bad]).witness, "b: lhs=1 rhs=2")
        self.assertEqual(combine([skip("x"), skip("y")]).status, CheckStatus.SKIP)
        self.assertEqual(combine([ok, skip("y")]).witness, "a: both sides 1")
        self.assertEqual(combine([]).status, CheckStatus.SKIP)

    def test_render_shortens(self):
        """Test that very long values are elided in the middle."""
        text = render(10**1000)
        self.assertIn("...", text)
        self.assertIn("(1001 chars)", text)
        self.assertEqual(render(12), "12")


class TestModels(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.models module."""

    def test_format_params_sorted(self):
        """Test k1=v1;k2=v2 rendering sorted by key."""
        self.assertEqual(format_params({"x": -1, "p": 5}), "p=5;x=-1")
        self.assertEqual(format_params({}), "")

    def test_summary_counts(self):
        """Test that conjecture failures are counted apart from proved ones."""
        results = [
            CheckResult(suite=Suite.IDENTITIES, id="A", params={}, status=CheckStatus.PASS),
            CheckResult(suite=Suite.CONGRUENCES, id="B", params={}, status=CheckStatus.FAIL),
            CheckResult(suite=Suite.CONJECTURES, id="C", params={}, status=CheckStatus.FAIL),
            CheckResult(suite=Suite.CONJECTURES, id="D", params={}, status=CheckStatus.EVIDENCE),
        ]
        summary = Summary.from_results(results)
        self.assertEqual(summary.total, 4)
        self.assertEqual(summary.counts["fail"], 2)
        self.assertEqual(summary.counts["evidence"], 1)
        self.assertEqual(summary.proved_failures, 1)
        self.assertEqual(summary.conjecture_failures, 1)

    def test_empty_summary(self):
        """Test that an empty result list gives zero counts."""
        summary = Summary.from_results([])
        self.assertEqual(summary.total, 0)
        self.assertTrue(all(v == 0 for v in summary.counts.values()))
        self.assertEqual(str(summary), "0 checks (none)")

    def test_sort_key(self):
        """Test ordering by suite, id and params."""
        a = CheckResult(suite=Suite.CONGRUENCES, id="C_1_15", params={"p": 7}, status="pass")
        b = CheckResult(suite=Suite.CONGRUENCES, id="C_1_15", params={"p": 5}, status="pass")
        c = CheckResult(suite=Suite.CONGRUENCES, id="C_1_12", params={"p": 7}, status="pass")
        self.assertEqual(sorted([a, b, c], key=CheckResult.sort_key), [c, b, a])


class TestExecutor(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.executor module."""

    def test_lookup_unknown(self):
        """Test that lookup names the unknown id."""
        with self.assertRaises(UnknownIdError) as ctx:
            lookup(get_catalog(), "NOPE")
        self.assertIn("NOPE", str(ctx.exception))

    def test_validate_params(self):
        """Test missing, extra and composite-prime parameters."""
        entry = get_catalog()["C_1_14"]
        self.assertEqual(validate_params(entry, {"p": 5, "x": 2}), {"p": 5, "x": 2})
        with self.assertRaises(MissingParamError):
            validate_params(entry, {"p": 5})
        with self.assertRaises(PredicateViolatedError):
            validate_params(entry, {"p": 5, "x": 2, "y": 1})
        with self.assertRaises(PredicateViolatedError):
            validate_params(entry, {"p": 15, "x": 2})

    def test_exception_becomes_fail(self):
        """Test that an evaluator exception is a failed result with its type."""
        entry = replace(get_catalog()["EQ_1_7"], func=_raises)
        result = evaluate(entry, {"n": 3})
        self.assertEqual(result.status, CheckStatus.FAIL)
        self.assertEqual(result.witness, "ZeroDivisionError: division by zero")

    def test_consistency_error_propagates(self):
        """Test that an internal consistency failure is raised, not reported as a fail."""
        entry = replace(get_catalog()["EQ_2_2"], func=_inconsistent)
        with self.assertLogs("delannoy_schroder.core.checks.executor", level="ERROR"):
            with self.assertRaises(ConsistencyError) as ctx:
                evaluate(entry, {"n": 3})
        self.assertIn("disagree", str(ctx.exception))

    def test_elapsed_only_with_timings(self):
        """Test that elapsed time stays zero unless timings are requested."""
        entry = get_catalog()["EQ_2_4"]
        self.assertEqual(evaluate(entry, {"n": 4}).elapsed_ms, 0)
        self.assertGreaterEqual(evaluate(entry, {"n": 4}, timings=True).elapsed_ms, 0)

    def test_parameter_ranges_overrides(self):
        """Test n_max capping, prime range and grid overrides."""
        entry = get_catalog()["C_1_10"]
        self.assertEqual(
            parameter_ranges(entry, primes=(5, 11), grid={"x": (0, 2), "z": (1, 1)}),
            {"p": (5, 11), "x": (0, 2)},
        )
        self.assertEqual(parameter_ranges(get_catalog()["EQ_2_7"], n_max=5), {"m": (1, 5), "n": (1, 5)})

    def test_extended_primes(self):
        """Test that only flagged entries take the extended prime bound."""
        catalog = get_catalog()
        flagged = [e for e in catalog.values() if e.extended_primes]
        self.assertTrue(flagged)
        for entry in flagged:
            self.assertEqual(
                parameter_ranges(entry, extended=True)["p"][1], EXTENDED_PRIME_BOUND - 1
            )
        unflagged = next(e for e in catalog.values() if "p" in e.parameters and not e.extended_primes)
        self.assertEqual(
            parameter_ranges(unflagged, extended=True)["p"], unflagged.parameters["p"]
        )

    def test_expand_cells_order_and_filter(self):
        """Test key-sorted lexicographic cells with the m <= n filter."""
        cells = expand_cells(get_catalog()["EQ_2_7"], n_max=3)
        self.assertEqual(
            cells,
            [
                {"m": 1, "n": 1},
                {"m": 1, "n": 2},
                {"m": 1, "n": 3},
                {"m": 2, "n": 2},
                {"m": 2, "n": 3},
                {"m": 3, "n": 3},
            ],
        )

    def test_expand_cells_odd_primes(self):
        """Test that the prime key ranges over odd primes only."""
        cells = expand_cells(get_catalog()["C_1_15"], primes=(2, 20))
        self.assertEqual([c["p"] for c in cells], [3, 5, 7, 11, 13, 17, 19])


class TestRegistry(unittest.TestCase):
    """Tests for delannoy_schroder.core.checks.registry module."""

    def test_ids_unique_across_suites(self):
        """Test that every suite contributes and ids map to their own entries."""
        catalog = get_catalog()
        for key, entry in catalog.items():
            self.assertEqual(key, entry.id)
        self.assertEqual({e.suite for e in catalog.values()}, set(Suite))

    def test_select_entries(self):
        """Test suite and id filtering with (suite, id) ordering."""
        entries = select_entries([Suite.CONGRUENCES, Suite.IDENTITIES], ["EQ_1_7", "C_1_15"])
        self.assertEqual([e.id for e in entries], ["C_1_15", "EQ_1_7"])
        self.assertEqual(select_entries([Suite.CONJECTURES], ["EQ_1_7"]), [])
        with self.assertRaises(UnknownIdError):
            select_entries([Suite.IDENTITIES], ["EQ_0"])


if __name__ == "__main__":
    unittest.main()

"""Verdicts returned by check evaluators and helpers to build them."""

from dataclasses import dataclass
from fractions import Fraction

from delannoy_schroder.core.checks.models import CheckStatus
from delannoy_schroder.core.exact.padic import TrackedResidue, residue

WITNESS_LIMIT = 240


@dataclass(frozen=True)
class Verdict:
    """Status plus a witness string; the harness adds id, params and timing."""

    status: CheckStatus
    witness: str = ""

    @property
    def failed(self) -> bool:
        return self.status == CheckStatus.FAIL


def render(value) -> str:
    """Text rendering of a value, shortened in the middle when very long."""
    text = str(value)
    if len(text) <= WITNESS_LIMIT:
        return text
    half = WITNESS_LIMIT // 2
    return f"{text[:half]}...{text[-half:]} ({len(text)} chars)"


def compare(lhs, rhs, label: str = "") -> Verdict:
    """Exact equality of two values of any exact type."""
    prefix = f"{label}: " if label else ""
    if lhs == rhs:
        return Verdict(CheckStatus.PASS, f"{prefix}both sides {render(lhs)}")
    return Verdict(CheckStatus.FAIL, f"{prefix}lhs={render(lhs)} rhs={render(rhs)}")


def _reduce(value, p: int, k: int) -> int:
    if isinstance(value, TrackedResidue):
        return value.residue(k)
    return residue(Fraction(value), p**k)


def compare_mod(lhs, rhs, p: int, k: int, label: str = "") -> Verdict:
    """lhs == rhs modulo p^k; sides may be integers, rationals or tracked residues."""
    a, b = _reduce(lhs, p, k), _reduce(rhs, p, k)
    prefix = f"{label}: " if label else ""
    modulus = f"mod {p}" if k == 1 else f"mod {p}^{k}"
    if a == b:
        return Verdict(CheckStatus.PASS, f"{prefix}both sides {a} ({modulus})")
    return Verdict(CheckStatus.FAIL, f"{prefix}lhs={a} rhs={b} ({modulus})")


def check(condition: bool, witness: str) -> Verdict:
    return Verdict(CheckStatus.PASS if condition else CheckStatus.FAIL, witness)


def skip(reason: str) -> Verdict:
    return Verdict(CheckStatus.SKIP, reason)


def combine(verdicts: list[Verdict]) -> Verdict:
    """Conjunction of sub-checks: failing witnesses win, otherwise all are kept."""
    if not verdicts:
        return skip("no sub-checks applied")
    failed = [v for v in verdicts if v.failed]
    if failed:
        return Verdict(CheckStatus.FAIL, render("; ".join(v.witness for v in failed)))
    passed = [v for v in verdicts if v.status == CheckStatus.PASS]
    if not passed:
        return Verdict(CheckStatus.SKIP, render("; ".join(v.witness for v in verdicts)))
    return Verdict(CheckStatus.PASS, render("; ".join(v.witness for v in passed)))

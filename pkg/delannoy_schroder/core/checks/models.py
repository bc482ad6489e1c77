"""Shared models for identity, congruence and conjecture checks."""

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import BaseModel


class CheckStatus(str, Enum):
    """Outcome of one check cell."""

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"
    EVIDENCE = "evidence"
    INCONCLUSIVE = "inconclusive"


class Suite(str, Enum):
    """Catalog a check belongs to."""

    IDENTITIES = "identities"
    CONGRUENCES = "congruences"
    CONJECTURES = "conjectures"
    BIGPRIME = "bigprime"


class OutputFormat(str, Enum):
    """Report rendering."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def format_params(params: dict[str, int]) -> str:
    """Render parameters as k1=v1;k2=v2 sorted by key."""
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


class CheckResult(BaseModel):
    """Result of evaluating one catalog entry at one parameter cell."""

    suite: Suite
    id: str
    params: dict[str, int]
    status: CheckStatus
    witness: str = ""
    elapsed_ms: int = 0

    def sort_key(self) -> tuple:
        return (self.suite.value, self.id, tuple(sorted(self.params.items())))

    def __str__(self) -> str:
        out = f"[{self.status.value}] {self.id}({format_params(self.params)})"
        if self.witness:
            out += f": {self.witness}"
        return out


class Summary(BaseModel):
    """Counts per status plus the failures that decide the exit code."""

    total: int = 0
    counts: dict[str, int] = {s.value: 0 for s in CheckStatus}
    proved_failures: int = 0
    conjecture_failures: int = 0

    @classmethod
    def from_results(cls, results: list[CheckResult]) -> "Summary":
        counts = {s.value: 0 for s in CheckStatus}
        proved_failures = conjecture_failures = 0
        for r in results:
            counts[r.status.value] += 1
            if r.status == CheckStatus.FAIL:
                if r.suite == Suite.CONJECTURES:
                    conjecture_failures += 1
                else:
                    proved_failures += 1
        return cls(
            total=len(results),
            counts=counts,
            proved_failures=proved_failures,
            conjecture_failures=conjecture_failures,
        )

    def __str__(self) -> str:
        parts = ", ".join(f"{k}: {v}" for k, v in self.counts.items() if v)
        return f"{self.total} checks ({parts or 'none'})"


@dataclass
class CatalogEntry:
    """Registry entry binding a check id to its evaluator.

    `parameters` maps each parameter to its default inclusive range; the key
    "p" ranges over odd primes. `cell_filter` drops cells outside the entry's
    domain (for example m > n) before evaluation. Entries with `extended_primes`
    scan the longer prime range of --extended runs.
    """

    id: str
    suite: Suite
    reference: str
    func: Callable[..., Any]
    parameters: dict[str, tuple[int, int]]
    description: str = ""
    conjectural: bool = False
    cell_filter: Callable[[dict[str, int]], bool] | None = None
    applicability: str = ""
    extended_primes: bool = False

    @property
    def required_params(self) -> list[str]:
        return sorted(self.parameters)

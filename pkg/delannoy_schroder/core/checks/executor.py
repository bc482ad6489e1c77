"""Evaluation of catalog entries on parameter cells."""

import logging
import time
from itertools import product

from delannoy_schroder.core.checks.errors import (
    MissingParamError,
    PredicateViolatedError,
    UnknownIdError,
)
from delannoy_schroder.core.checks.models import CatalogEntry, CheckResult, CheckStatus
from delannoy_schroder.core.config.config import EXTENDED_PRIME_BOUND
from delannoy_schroder.core.exact.errors import ConsistencyError
from delannoy_schroder.core.exact.primes import is_prime, odd_primes

logger = logging.getLogger(__name__)

# Parameters capped by --n-max
SIZE_KEYS = ("n", "m", "k", "N")


def lookup(registry: dict[str, CatalogEntry], entry_id: str) -> CatalogEntry:
    if entry_id not in registry:
        raise UnknownIdError(
            f"Unknown check id: {entry_id}. Available: {sorted(registry)}"
        )
    return registry[entry_id]


def validate_params(entry: CatalogEntry, params: dict[str, int]) -> dict[str, int]:
    """Reject ill-formed cells."""
    cell = dict(params)
    missing = [k for k in entry.required_params if k not in cell]
    if missing:
        raise MissingParamError(f"{entry.id} requires parameters {missing}")
    extra = [k for k in cell if k not in entry.required_params]
    if extra:
        raise PredicateViolatedError(f"{entry.id} does not take parameters {extra}")
    if "p" in entry.parameters and (cell["p"] == 2 or not is_prime(cell["p"])):
        raise PredicateViolatedError(f"{entry.id} needs an odd prime p, got {cell['p']}")
    if entry.cell_filter is not None and not entry.cell_filter(cell):
        raise PredicateViolatedError(
            f"{entry.id} is defined for {entry.applicability}, got {cell}"
        )
    return cell


def evaluate(
    entry: CatalogEntry, cell: dict[str, int], timings: bool = False
) -> CheckResult:
    """Run one evaluator; an exception becomes a failed result.

    ConsistencyError propagates instead: two constructions of one object
    disagreeing is an implementation bug, not a counterexample.
    """
    start = time.perf_counter()
    try:
        verdict = entry.func(**cell)
        status, witness = verdict.status, verdict.witness
    except ConsistencyError:
        logger.error("%s(%s): internal consistency failure", entry.id, cell)
        raise
    except Exception as e:
        logger.debug("%s(%s) raised %s", entry.id, cell, e)
        status, witness = CheckStatus.FAIL, f"{type(e).__name__}: {e}"
    elapsed_ms = int((time.perf_counter() - start) * 1000) if timings else 0
    result = CheckResult(
        suite=entry.suite,
        id=entry.id,
        params=cell,
        status=status,
        witness=witness,
        elapsed_ms=elapsed_ms,
    )
    logger.debug("%s", result)
    return result


def verify(
    registry: dict[str, CatalogEntry], entry_id: str, params: dict[str, int]
) -> CheckResult:
    """Look up, validate and evaluate a single cell."""
    entry = lookup(registry, entry_id)
    return evaluate(entry, validate_params(entry, params))


def parameter_ranges(
    entry: CatalogEntry,
    n_max: int | None = None,
    primes: tuple[int, int] | None = None,
    grid: dict[str, tuple[int, int]] | None = None,
    extended: bool = False,
) -> dict[str, tuple[int, int]]:
    """Default inclusive ranges of an entry after the run's overrides."""
    ranges = dict(entry.parameters)
    if n_max is not None:
        for key in SIZE_KEYS:
            if key in ranges:
                lo, hi = ranges[key]
                ranges[key] = (min(lo, n_max), min(hi, n_max))
    if extended and entry.extended_primes and "p" in ranges:
        ranges["p"] = (ranges["p"][0], EXTENDED_PRIME_BOUND - 1)
    if primes is not None and "p" in ranges:
        ranges["p"] = primes
    for key, bounds in (grid or {}).items():
        if key in ranges:
            ranges[key] = bounds
    return ranges


def expand_cells(entry: CatalogEntry, **overrides) -> list[dict[str, int]]:
    """All parameter cells of an entry in key-sorted lexicographic order."""
    ranges = parameter_ranges(entry, **overrides)
    keys = sorted(ranges)
    values = []
    for key in keys:
        lo, hi = ranges[key]
        values.append(odd_primes(lo, hi + 1) if key == "p" else range(lo, hi + 1))
    cells = []
    for combo in product(*values):
        cell = dict(zip(keys, combo))
        if entry.cell_filter is None or entry.cell_filter(cell):
            cells.append(cell)
    return cells

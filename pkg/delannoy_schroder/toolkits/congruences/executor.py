"""Registry and entry points for the congruence checks."""

import logging

from delannoy_schroder.core.checks.executor import evaluate, expand_cells, lookup, verify
from delannoy_schroder.core.checks.models import CatalogEntry, CheckResult
from delannoy_schroder.toolkits.congruences.bigprime import BIGPRIME_CHECKS
from delannoy_schroder.toolkits.congruences.ops_background import BACKGROUND_CONGRUENCES
from delannoy_schroder.toolkits.congruences.ops_lemmas import LEMMA_CONGRUENCES
from delannoy_schroder.toolkits.congruences.ops_ds_sums import DS_SUM_CONGRUENCES
from delannoy_schroder.toolkits.congruences.ops_trinomial import TRINOMIAL_CONGRUENCES

logger = logging.getLogger(__name__)

_ALL_CONGRUENCES: dict[str, CatalogEntry] | None = None


def get_congruence_checks() -> dict[str, CatalogEntry]:
    """Get combined registry of all congruence checks."""
    global _ALL_CONGRUENCES
    if _ALL_CONGRUENCES is None:
        _ALL_CONGRUENCES = {}
        _ALL_CONGRUENCES.update(DS_SUM_CONGRUENCES)
        _ALL_CONGRUENCES.update(LEMMA_CONGRUENCES)
        _ALL_CONGRUENCES.update(TRINOMIAL_CONGRUENCES)
        _ALL_CONGRUENCES.update(BACKGROUND_CONGRUENCES)
    return _ALL_CONGRUENCES


def get_bigprime_checks() -> dict[str, CatalogEntry]:
    return BIGPRIME_CHECKS


def verify_congruence(id: str, p: int | None, params: dict[str, int]) -> CheckResult:
    """Evaluate one congruence at prime p; p is None for entries that take no prime."""
    cell = dict(params)
    if p is not None:
        cell["p"] = p
    return verify(get_congruence_checks(), id, cell)


def verify_bigprime(p: int, y: int) -> CheckResult:
    return verify(get_bigprime_checks(), "REMARK_1_2", {"p": p, "y": y})


def scan_congruences(
    ids: list[str],
    primes: tuple[int, int] | None = None,
    param_grid: dict[str, tuple[int, int]] | None = None,
) -> list[CheckResult]:
    """Every applicable cell of each id, in id then parameter order; failures never abort the scan."""
    checks = get_congruence_checks()
    results = []
    for entry_id in sorted(ids):
        entry = lookup(checks, entry_id)
        cells = expand_cells(entry, primes=primes, grid=param_grid)
        logger.info("Scanning %s over %d cells", entry_id, len(cells))
        results.extend(evaluate(entry, cell) for cell in cells)
    return results

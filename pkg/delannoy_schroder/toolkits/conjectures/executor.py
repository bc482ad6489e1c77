"""Registry and entry points for the conjecture checks."""

import logging
from dataclasses import replace
from functools import partial

from delannoy_schroder.core.checks.executor import evaluate, expand_cells, verify
from delannoy_schroder.core.checks.models import CatalogEntry, CheckResult
from delannoy_schroder.toolkits.conjectures.ops_irreducibility import IRREDUCIBILITY_CHECKS
from delannoy_schroder.toolkits.conjectures.ops_f_family import F_FAMILY_CHECKS
from delannoy_schroder.toolkits.conjectures.ops_motzkin import MOTZKIN_CHECKS

logger = logging.getLogger(__name__)

_ALL_CONJECTURES: dict[str, CatalogEntry] | None = None

F_FAMILY_SIZE_IDS = ("CONJ_4_2_INT", "CONJ_4_2_MOD32")
F_FAMILY_PRIME_IDS = ("CONJ_4_9", "CONJ_4_10", "CONJ_4_11", "CONJ_4_2_POLY")


def get_conjecture_checks() -> dict[str, CatalogEntry]:
    """Get combined registry of all conjecture checks."""
    global _ALL_CONJECTURES
    if _ALL_CONJECTURES is None:
        _ALL_CONJECTURES = {}
        _ALL_CONJECTURES.update(IRREDUCIBILITY_CHECKS)
        _ALL_CONJECTURES.update(F_FAMILY_CHECKS)
        _ALL_CONJECTURES.update(MOTZKIN_CHECKS)
    return _ALL_CONJECTURES


def verify_conjecture(id: str, params: dict[str, int]) -> CheckResult:
    return verify(get_conjecture_checks(), id, params)


def conj41_evidence(n: int, prime_list: list[int]) -> list[CheckResult]:
    """Evidence for the three polynomial families at one n, trying primes in order."""
    checks = get_conjecture_checks()
    results = []
    for entry_id in sorted(IRREDUCIBILITY_CHECKS):
        entry = checks[entry_id]
        bound = replace(entry, func=partial(entry.func, primes=tuple(prime_list)))
        results.append(evaluate(bound, {"n": n}))
    return results


def conj42_checks(n_max: int, primes: tuple[int, int]) -> list[CheckResult]:
    """f_n verdicts for 1 <= n <= n_max and the prime-indexed verdicts for primes in range."""
    checks = get_conjecture_checks()
    results = []
    for entry_id in F_FAMILY_SIZE_IDS:
        entry = checks[entry_id]
        results.extend(
            evaluate(entry, cell)
            for cell in expand_cells(entry, grid={"n": (1, n_max)})
        )
    for entry_id in F_FAMILY_PRIME_IDS:
        entry = checks[entry_id]
        results.extend(
            evaluate(entry, cell) for cell in expand_cells(entry, primes=primes)
        )
    logger.info("f_n family: %d results", len(results))
    return results


def remark31_checks(p: int) -> list[CheckResult]:
    """One result per open congruence at the prime p."""
    checks = get_conjecture_checks()
    return [verify(checks, entry_id, {"p": p}) for entry_id in sorted(MOTZKIN_CHECKS)]

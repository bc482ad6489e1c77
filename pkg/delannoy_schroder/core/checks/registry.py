"""The combined catalog of every check, keyed by id."""

from delannoy_schroder.core.checks.errors import UnknownIdError
from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.toolkits.congruences.executor import (
    get_bigprime_checks,
    get_congruence_checks,
)
from delannoy_schroder.toolkits.conjectures.executor import get_conjecture_checks
from delannoy_schroder.toolkits.identities.executor import get_identity_checks

_CATALOG: dict[str, CatalogEntry] | None = None


def get_catalog() -> dict[str, CatalogEntry]:
    """Get combined registry of identities, congruences, conjectures and the large-prime check."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = {}
        _CATALOG.update(get_identity_checks())
        _CATALOG.update(get_congruence_checks())
        _CATALOG.update(get_conjecture_checks())
        _CATALOG.update(get_bigprime_checks())
    return _CATALOG


def select_entries(suites: list[Suite], ids: list[str] | None = None) -> list[CatalogEntry]:
    """Entries of the given suites, optionally restricted to ids, ordered by (suite, id)."""
    catalog = get_catalog()
    unknown = [i for i in ids or [] if i not in catalog]
    if unknown:
        raise UnknownIdError(f"Unknown check ids: {unknown}")
    entries = [
        e
        for e in catalog.values()
        if e.suite in suites and (not ids or e.id in ids)
    ]
    return sorted(entries, key=lambda e: (e.suite.value, e.id))

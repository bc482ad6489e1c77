"""Registry and entry points for the identity checks."""

from delannoy_schroder.core.checks.executor import verify
from delannoy_schroder.core.checks.models import CatalogEntry, CheckResult
from delannoy_schroder.toolkits.identities.ops_lemmas import LEMMA_IDENTITIES
from delannoy_schroder.toolkits.identities.ops_series import SERIES_IDENTITIES
from delannoy_schroder.toolkits.identities.ops_ds_sums import DS_SUM_IDENTITIES
from delannoy_schroder.toolkits.identities.ops_trinomial import TRINOMIAL_IDENTITIES
from delannoy_schroder.toolkits.identities.ops_w_family import W_FAMILY_IDENTITIES

_ALL_IDENTITIES: dict[str, CatalogEntry] | None = None


def get_identity_checks() -> dict[str, CatalogEntry]:
    """Get combined registry of all identity checks."""
    global _ALL_IDENTITIES
    if _ALL_IDENTITIES is None:
        _ALL_IDENTITIES = {}
        _ALL_IDENTITIES.update(DS_SUM_IDENTITIES)
        _ALL_IDENTITIES.update(LEMMA_IDENTITIES)
        _ALL_IDENTITIES.update(TRINOMIAL_IDENTITIES)
        _ALL_IDENTITIES.update(W_FAMILY_IDENTITIES)
        _ALL_IDENTITIES.update(SERIES_IDENTITIES)
    return _ALL_IDENTITIES


def verify_identity(id: str, params: dict[str, int]) -> CheckResult:
    """Evaluate one identity at one parameter cell.

    Raises UnknownIdError or MissingParamError for a bad request; a false
    identity is a result with status fail.
    """
    return verify(get_identity_checks(), id, params)


def list_identities() -> list[CatalogEntry]:
    """The identity catalog ordered by id."""
    checks = get_identity_checks()
    return [checks[k] for k in sorted(checks)]

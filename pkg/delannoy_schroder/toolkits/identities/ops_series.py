"""Generating-function identities checked through squared algebraic relations.

A generating function of the form (P - sqrt(Q)) / R is verified without a
power-series square root: with G truncated at y^N, (P - R G)^2 must agree
with Q through y^(N+1).
"""

import logging

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict, check
from delannoy_schroder.core.poly.dense import IntPolynomial
from delannoy_schroder.core.poly.series import PolySeries
from delannoy_schroder.toolkits.sequences.recurrences import (
    large_schroder_values,
    small_w_polys,
)

logger = logging.getLogger(__name__)

X = IntPolynomial.x()


def _residual_verdict(residual: PolySeries, label: str) -> Verdict:
    if residual.is_zero():
        return check(True, f"{label} vanishes through y^{residual.order}")
    first = next(i for i, c in enumerate(residual.coefficients) if c)
    return check(
        False,
        f"{label} has y^{first} coefficient {residual.coefficient(first)}",
    )


def series_gf_check(N: int, x_degree_cap: int | None = None) -> Verdict:
    """sum_{n >= 1} w_n(x) y^n against (1 - y - 2xy - sqrt((y-1)^2 - 4xy)) / (2x(x+1)y)."""
    order = N + 1
    g = PolySeries.from_terms(
        {n: w for n, w in enumerate(small_w_polys(N), start=1)}, order, x_degree_cap
    )
    linear = PolySeries([1, -1 - 2 * X], order, x_degree_cap)
    scaled_y = PolySeries([0, 2 * X * (X + 1)], order, x_degree_cap)
    root = linear - scaled_y * g
    discriminant = PolySeries([1, -2 - 4 * X, 1], order, x_degree_cap)
    logger.debug("w_n generating function checked through y^%d", order)
    return _residual_verdict(root * root - discriminant, "squared relation residual")


def check_eq_schroder_gf(N: int) -> Verdict:
    """sum_n S_n y^n against (1 - y - sqrt(y^2 - 6y + 1)) / (2y)."""
    order = N + 1
    g = PolySeries(large_schroder_values(1, N + 1), order)
    root = PolySeries([1, -1], order) - PolySeries([0, 2], order) * g
    discriminant = PolySeries([1, -6, 1], order)
    return _residual_verdict(root * root - discriminant, "squared relation residual")


SERIES_IDENTITIES = {
    "EQ_4_6": CatalogEntry(
        id="EQ_4_6",
        suite=Suite.IDENTITIES,
        reference="Section 4, Eq. (4.6)",
        func=series_gf_check,
        parameters={"N": (50, 50)},
        description="generating function of w_n(x), truncated at y^(N+1)",
    ),
    "EQ_SCHRODER_GF": CatalogEntry(
        id="EQ_SCHRODER_GF",
        suite=Suite.IDENTITIES,
        reference="Section 4, after Eq. (4.6)",
        func=check_eq_schroder_gf,
        parameters={"N": (50, 50)},
        description="generating function of the large Schroder numbers",
    ),
}

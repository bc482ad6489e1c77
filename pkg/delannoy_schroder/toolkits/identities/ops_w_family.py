"""Identity checks for W_n(x), w_n(x) and the coefficients w(n, k)."""

from math import comb

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict, compare
from delannoy_schroder.core.poly.dense import IntPolynomial
from delannoy_schroder.toolkits.sequences.generators import (
    big_w_poly,
    small_w_poly,
    w_coeff,
)
from delannoy_schroder.toolkits.sequences.recurrences import BIG_W, SMALL_W

X = IntPolynomial.x()


def _recurrence_residual(rec, index: int, term) -> IntPolynomial:
    """divisor(m) a_m - sum_i coefficients(m)[i] a_(m-1-i) for definitional terms."""
    residual = rec.divisor(index) * term(index)
    for i, c in enumerate(rec.coefficients(index, X)):
        residual = residual - c * term(index - 1 - i)
    return residual


def check_eq_4_1(n: int) -> Verdict:
    """Third-order recurrence producing W_(n+3) from W_(n+2), W_(n+1), W_n."""
    return compare(_recurrence_residual(BIG_W, n + 3, big_w_poly), IntPolynomial())


def check_eq_4_4(m: int, n: int) -> Verdict:
    lhs = sum(
        (-1) ** (n - k) * comb(k - 1, m - 1) * w_coeff(n, k) for k in range(m, n + 1)
    )
    return compare(lhs, w_coeff(n, m))


def check_eq_4_5(n: int) -> Verdict:
    return compare(_recurrence_residual(SMALL_W, n + 2, small_w_poly), IntPolynomial())


W_FAMILY_IDENTITIES = {
    "EQ_4_1": CatalogEntry(
        id="EQ_4_1",
        suite=Suite.IDENTITIES,
        reference="Section 4, Eq. (4.1)",
        func=check_eq_4_1,
        parameters={"n": (1, 200)},
        description="third-order recurrence for W_n(x), residual on the sum definition",
    ),
    "EQ_4_4": CatalogEntry(
        id="EQ_4_4",
        suite=Suite.IDENTITIES,
        reference="Section 4, Eq. (4.4)",
        func=check_eq_4_4,
        parameters={"m": (1, 60), "n": (1, 60)},
        description="alternating binomial sum of w(n, k) returns w(n, m)",
        cell_filter=lambda cell: cell["m"] <= cell["n"],
        applicability="m <= n",
    ),
    "EQ_4_5": CatalogEntry(
        id="EQ_4_5",
        suite=Suite.IDENTITIES,
        reference="Section 4, Eq. (4.5)",
        func=check_eq_4_5,
        parameters={"n": (1, 200)},
        description="(n+3) w_(n+2)(x) = (2x+1)(2n+3) w_(n+1)(x) - n w_n(x)",
    ),
}

"""Congruences for sums of D_k(x) s_(k+1)(x) over a full prime period."""

from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    check,
    combine,
    compare,
    compare_mod,
)
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.padic import fermat_quotient
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.core.poly.dense import IntPolynomial, decompose_x_xplus1
from delannoy_schroder.toolkits.congruences.sums import (
    ds_products_mod,
    ds_sum,
)
from delannoy_schroder.toolkits.sequences.generators import big_w_poly
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_polys,
    little_schroder_polys,
)

PRIMES = (3, PRIME_BOUND - 1)
X_GRID = (-10, 10)


def _c_1_10_rhs(x: int, p: int) -> Fraction:
    if x % p in (0, p - 1):
        return Fraction(p * (1 - x * (x + 1)))
    q_x = fermat_quotient(x, p).residue(1)
    q_x1 = fermat_quotient(x + 1, p).residue(1)
    inner = Fraction(2 * x + 1, x * (x + 1)) * (x * x * q_x - (x + 1) ** 2 * q_x1)
    return 2 * p * p + p * p * inner


def _c_1_10_at(x: int, p: int, label: str) -> Verdict:
    branch = "x = 0, -1" if x % p in (0, p - 1) else "generic"
    return compare_mod(
        ds_sum(x, p, 3), _c_1_10_rhs(x, p), p, 3, f"{label} x={x}, {branch} branch"
    )


def check_c_1_10(p: int, x: int) -> Verdict:
    """The grid value x plus a lift of -1/2 that varies with x modulo p^2."""
    half = (p - 1) // 2 + x * p
    return combine([_c_1_10_at(x, p, "grid"), _c_1_10_at(half, p, "x = -1/2 mod p")])


def check_c_1_12(p: int) -> Verdict:
    """Three computations of the left side: exact sum, p W_p(2), modular streams."""
    rhs = 2 * p * p * (1 - 3 * fermat_quotient(2, p).residue(1))
    exact = ds_sum(1, p, 3)
    products = ds_products_mod(1, p, 3)
    streamed = sum(products[1:], products[0])
    return combine(
        [
            compare_mod(exact, rhs, p, 3, "exact sum"),
            compare(exact, p * big_w_poly(p)(2), "sum = p W_p(2)"),
            compare_mod(streamed, exact, p, 3, "streamed sum"),
        ]
    )


def check_c_1_14(p: int, x: int) -> Verdict:
    rhs = 2 * pow(x * (x + 1), (p - 1) // 2, p)
    return compare_mod(ds_sum(x, p, 1, weighted=True), rhs, p, 1)


def check_c_1_15(p: int) -> Verdict:
    return compare_mod(ds_sum(1, p, 1, weighted=True), 2 * legendre_symbol(2, p), p, 1)


def check_c_2_15(p: int) -> Verdict:
    """sum_{k<p} k D_k(x) s_(k+1)(x) - 2(x(x+1))^((p-1)/2) lies in p Z[x(x+1)]."""
    d, s = delannoy_polys(p), little_schroder_polys(p)
    total = IntPolynomial()
    for k in range(1, p):
        total = total + k * (d[k] * s[k])
    x_xplus1 = IntPolynomial((0, 1, 1))
    difference = total - 2 * x_xplus1 ** ((p - 1) // 2)
    in_y = decompose_x_xplus1(difference)
    bad = [i for i, c in enumerate(in_y) if c % p]
    return check(
        not bad,
        f"coefficients in x(x+1) divisible by {p}"
        if not bad
        else f"coefficient of (x(x+1))^{bad[0]} is {in_y.coefficient(bad[0])}",
    )


DS_SUM_CONGRUENCES = {
    "C_1_10": CatalogEntry(
        id="C_1_10",
        suite=Suite.CONGRUENCES,
        reference="Theorem 1.1(ii)",
        func=check_c_1_10,
        parameters={"p": PRIMES, "x": X_GRID},
        description="sum_{k<p} D_k(x) s_(k+1)(x) modulo p^3, both branches",
    ),
    "C_1_12": CatalogEntry(
        id="C_1_12",
        suite=Suite.CONGRUENCES,
        reference="Corollary 1.1",
        func=check_c_1_12,
        parameters={"p": PRIMES},
        description="sum_{k<p} D_k s_(k+1) = 2p^2(1 - 3 q_p(2)) modulo p^3",
        extended_primes=True,
    ),
    "C_1_14": CatalogEntry(
        id="C_1_14",
        suite=Suite.CONGRUENCES,
        reference="Theorem 1.2",
        func=check_c_1_14,
        parameters={"p": PRIMES, "x": X_GRID},
        description="sum_{k<p} k D_k(x) s_(k+1)(x) = 2(x(x+1))^((p-1)/2) modulo p",
    ),
    "C_1_15": CatalogEntry(
        id="C_1_15",
        suite=Suite.CONGRUENCES,
        reference="Theorem 1.2",
        func=check_c_1_15,
        parameters={"p": PRIMES},
        description="sum_{k<p} k D_k s_(k+1) = 2 (2|p) modulo p",
        extended_primes=True,
    ),
    "C_2_15": CatalogEntry(
        id="C_2_15",
        suite=Suite.CONGRUENCES,
        reference="proof of Theorem 1.2",
        func=check_c_2_15,
        parameters={"p": PRIMES},
        description="the weighted sum minus 2(x(x+1))^((p-1)/2) is p times a polynomial in x(x+1)",
    ),
}

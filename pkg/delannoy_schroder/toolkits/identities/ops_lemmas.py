"""Identity checks for the auxiliary polynomial and binomial lemmas."""

from fractions import Fraction
from math import comb

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict, combine, compare
from delannoy_schroder.core.exact.integers import catalan
from delannoy_schroder.core.poly.dense import (
    IntPolynomial,
    RatPolynomial,
    compose_x_xplus1,
    monomial_binomial,
)
from delannoy_schroder.toolkits.sequences.generators import (
    delannoy_poly_cross,
    delannoy_poly_squares,
    schroder_large_poly,
    schroder_little_poly,
    u_lemma25,
)
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_polys,
    lemma_u_step,
    little_schroder_polys,
)

X = IntPolynomial.x()


def check_eq_2_2(n: int) -> Verdict:
    return compare(delannoy_poly_squares(n), delannoy_poly_cross(n))


def check_eq_2_3(n: int) -> Verdict:
    d = delannoy_polys(n + 2)
    return compare(d[n + 1] - d[n - 1], 2 * (2 * n + 1) * X * schroder_large_poly(n))


def check_eq_2_4(n: int) -> Verdict:
    return compare((X + 1) * schroder_little_poly(n), schroder_large_poly(n))


def check_eq_2_5(n: int) -> Verdict:
    s = schroder_large_poly(n)
    lhs = n * (n + 1) * s * s
    rhs = IntPolynomial()
    for k in range(1, n + 1):
        weight = comb(n + k, 2 * k) * comb(2 * k, k) * comb(2 * k, k + 1)
        rhs = rhs + weight * monomial_binomial(k - 1, k + 1)
    return compare(lhs, rhs)


def check_eq_2_6(n: int) -> Verdict:
    d = delannoy_polys(n + 2)
    lhs = ((d[n - 1] + d[n + 1]) * schroder_large_poly(n)).to_rational() / 2
    rhs = RatPolynomial()
    for k in range(n + 1):
        weight = Fraction(
            comb(n + k, 2 * k) * comb(2 * k, k) ** 2 * (2 * k + 1), (k + 1) ** 2
        )
        rhs = rhs + weight * monomial_binomial(k, k + 1)
    return compare(lhs, rhs)


def _lemma23_term(k: int, m: int) -> Fraction:
    return comb(k + m, 2 * m) * (
        2 * m + 1 - Fraction(m * (m + 1) * (2 * k + 1), k * (k + 1))
    )


def check_eq_2_7(m: int, n: int) -> Verdict:
    lhs = sum((_lemma23_term(k, m) for k in range(m, n + 1)), Fraction(0))
    rhs = Fraction((n - m) * (n + m + 1), n + 1) * comb(n + m, 2 * m)
    return compare(lhs, rhs)


def check_eq_2_11(k: int) -> Verdict:
    lhs = delannoy_polys(k)[k - 1] * little_schroder_polys(k)[k - 1]
    in_y = RatPolynomial(catalan(j) ** 2 * _lemma23_term(k, j) for j in range(k + 1))
    return compare(lhs, compose_x_xplus1(in_y))


def check_eq_l25_rec(p: int, j: int) -> Verdict:
    u_j, u_next = u_lemma25(j, p), u_lemma25(j + 1, p)
    checks = [
        compare(
            (j + 2) * u_j + 2 * (2 * j + 1) * u_next,
            lemma_u_step(j, p),
            f"step j={j}",
        )
    ]
    if j == 0:
        checks.append(compare(u_j, Fraction(p * (p - 1), 2), "u_0"))
    return combine(checks)


LEMMA_IDENTITIES = {
    "EQ_2_2": CatalogEntry(
        id="EQ_2_2",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.1",
        func=check_eq_2_2,
        parameters={"n": (0, 200)},
        description="squared-binomial and C(n,k) C(n+k,k) forms of D_n(x) agree",
    ),
    "EQ_2_3": CatalogEntry(
        id="EQ_2_3",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.1",
        func=check_eq_2_3,
        parameters={"n": (1, 200)},
        description="D_(n+1)(x) - D_(n-1)(x) = 2x(2n+1) S_n(x)",
    ),
    "EQ_2_4": CatalogEntry(
        id="EQ_2_4",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.1",
        func=check_eq_2_4,
        parameters={"n": (1, 200)},
        description="(x+1) s_n(x) = S_n(x)",
    ),
    "EQ_2_5": CatalogEntry(
        id="EQ_2_5",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.2",
        func=check_eq_2_5,
        parameters={"n": (1, 200)},
        description="n(n+1) S_n(x)^2 as a sum over x^(k-1) (x+1)^(k+1)",
    ),
    "EQ_2_6": CatalogEntry(
        id="EQ_2_6",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.2",
        func=check_eq_2_6,
        parameters={"n": (1, 200)},
        description="(D_(n-1)(x) + D_(n+1)(x)) S_n(x) / 2 as a sum over x^k (x+1)^(k+1)",
    ),
    "EQ_2_7": CatalogEntry(
        id="EQ_2_7",
        suite=Suite.IDENTITIES,
        reference="Lemma 2.3",
        func=check_eq_2_7,
        parameters={"m": (1, 80), "n": (1, 80)},
        description="closed form of the weighted sum of C(k+m, 2m)",
        cell_filter=lambda cell: cell["m"] <= cell["n"],
        applicability="m <= n",
    ),
    "EQ_2_11": CatalogEntry(
        id="EQ_2_11",
        suite=Suite.IDENTITIES,
        reference="proof of Theorem 1.1",
        func=check_eq_2_11,
        parameters={"k": (1, 120)},
        description="D_(k-1)(x) s_k(x) expanded in powers of x(x+1)",
    ),
    "EQ_L25_REC": CatalogEntry(
        id="EQ_L25_REC",
        suite=Suite.IDENTITIES,
        reference="proof of Lemma 2.5",
        func=check_eq_l25_rec,
        parameters={"p": (3, 59), "j": (0, 58)},
        description="first-order recurrence of u_j with the f(p, j) right-hand side",
        cell_filter=lambda cell: cell["j"] < cell["p"],
        applicability="j < p",
    ),
}

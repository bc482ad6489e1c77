"""Identity checks linking T_n(b,c) and M_n(b,c) to the Delannoy and Schroder polynomials."""

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    check,
    combine,
    compare,
    skip,
)
from delannoy_schroder.core.exact.integers import (
    catalan,
    fibonacci,
    lucas_number,
    lucas_u,
)
from delannoy_schroder.core.poly.dense import IntPolynomial
from delannoy_schroder.toolkits.sequences.generators import (
    big_w_poly,
    motzkin_M,
    trinomial_T,
)
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_polys,
    delannoy_values,
    little_schroder_polys,
    little_schroder_values,
    motzkin_values,
    trinomial_values,
)

X = IntPolynomial.x()
X_XPLUS1 = X * (X + 1)


@lru_cache(maxsize=None)
def _odd_power(j: int) -> IntPolynomial:
    """(2x+1)^j."""
    return IntPolynomial.constant(1) if j == 0 else _odd_power(j - 1) * (2 * X + 1)


@lru_cache(maxsize=None)
def _pronic_power(k: int) -> IntPolynomial:
    """(x(x+1))^k."""
    return IntPolynomial.constant(1) if k == 0 else _pronic_power(k - 1) * X_XPLUS1


def _binomial_expansion(n: int, weight) -> IntPolynomial:
    """sum_k C(n, 2k) weight(k) (2x+1)^(n-2k) (x(x+1))^k."""
    total = IntPolynomial()
    for k in range(n // 2 + 1):
        term = _odd_power(n - 2 * k) * _pronic_power(k)
        total = total + comb(n, 2 * k) * weight(k) * term
    return total


def check_eq_3_5(n: int) -> Verdict:
    return compare(
        _binomial_expansion(n, lambda k: comb(2 * k, k)), delannoy_polys(n + 1)[n]
    )


def check_eq_3_6(n: int) -> Verdict:
    return compare(_binomial_expansion(n, catalan), little_schroder_polys(n + 1)[n])


def check_eq_3_3_square(n: int, b: int, c: int) -> Verdict:
    d = b * b - 4 * c
    e = isqrt(d) if d > 0 else 0
    if d <= 0 or e * e != d:
        return skip(f"d = {d} is not a positive square")
    x = (Fraction(b, e) - 1) / 2
    scale = e**n
    return combine(
        [
            compare(trinomial_T(n, b, c), scale * delannoy_values(x, n + 1)[n], "T_n"),
            compare(
                motzkin_M(n, b, c), scale * little_schroder_values(x, n + 1)[n], "M_n"
            ),
        ]
    )


def _tm_mean(n: int, b: int, c: int, weight) -> Fraction:
    t, m = trinomial_values(b, c, n), motzkin_values(b, c, n)
    return Fraction(sum(t[k] * m[k] * weight(k) for k in range(n)), n)


def _w_sum(n: int, weight) -> int:
    w = big_w_poly(n)
    return sum(w.coefficient(k - 1) * weight(k) for k in range(1, n + 1))


def _integral_mean(lhs: Fraction, rhs) -> Verdict:
    return combine(
        [compare(lhs, rhs), check(lhs.denominator == 1, f"mean {lhs} is an integer")]
    )


def check_eq_3_7(n: int, b: int, c: int) -> Verdict:
    d = b * b - 4 * c
    lhs = _tm_mean(n, b, c, lambda k: d ** (n - 1 - k))
    rhs = _w_sum(n, lambda k: c ** (k - 1) * d ** (n - k))
    return _integral_mean(lhs, rhs)


def check_eq_3_12(n: int) -> Verdict:
    lhs = _tm_mean(n, 1, 1, lambda k: (-3) ** (n - 1 - k))
    return _integral_mean(lhs, _w_sum(n, lambda k: (-3) ** (n - k)))


def check_eq_3_13(n: int) -> Verdict:
    lhs = _tm_mean(n, 3, 3, lambda k: Fraction(1, (-3) ** k))
    return _integral_mean(lhs, _w_sum(n, lambda k: (-1) ** (k - 1)))


def check_eq_3_17(n: int) -> Verdict:
    lhs = _tm_mean(n, 1, -1, lambda k: 5 ** (n - 1 - k))
    return _integral_mean(lhs, _w_sum(n, lambda k: (-1) ** (k - 1) * 5 ** (n - k)))


def check_eq_3_18(n: int) -> Verdict:
    lhs = _tm_mean(n, 5, 5, lambda k: Fraction(1, 5**k))
    return _integral_mean(lhs, _w_sum(n, lambda k: 1))


def check_eq_lucas_facts(n: int) -> Verdict:
    f_prev, f_n, f_next = fibonacci(n - 1), fibonacci(n), fibonacci(n + 1)
    l_n = lucas_number(n)
    u31 = lucas_u(n, 3, 1)
    verdicts = [
        compare(l_n, 2 * f_next - f_n, "L_n = 2F_(n+1) - F_n"),
        compare(l_n, 2 * f_prev + f_n, "L_n = 2F_(n-1) + F_n"),
        compare(u31, f_n * l_n, "u_n(3,1) = F_n L_n"),
        compare(lucas_u(n, 15, 25), 5 ** (n - 1) * u31, "u_n(15,25)"),
    ]
    if n % 3 == 0:
        verdicts.append(compare(lucas_u(n, -1, 1), 0, "u_n(-1,1)"))
        verdicts.append(compare(lucas_u(n, 3, 9), 0, "u_n(3,9)"))
    return combine(verdicts)


TRINOMIAL_IDENTITIES = {
    "EQ_3_5": CatalogEntry(
        id="EQ_3_5",
        suite=Suite.IDENTITIES,
        reference="proof of Lemma 3.1",
        func=check_eq_3_5,
        parameters={"n": (0, 150)},
        description="D_n(x) in powers of 2x+1 and x(x+1)",
    ),
    "EQ_3_6": CatalogEntry(
        id="EQ_3_6",
        suite=Suite.IDENTITIES,
        reference="proof of Lemma 3.1",
        func=check_eq_3_6,
        parameters={"n": (0, 150)},
        description="s_(n+1)(x) in powers of 2x+1 and x(x+1)",
    ),
    "EQ_3_3_SQUARE": CatalogEntry(
        id="EQ_3_3_SQUARE",
        suite=Suite.IDENTITIES,
        reference="Lemma 3.1",
        func=check_eq_3_3_square,
        parameters={"n": (0, 30), "b": (-6, 6), "c": (-6, 6)},
        description="T_n and M_n as scaled D_n and s_(n+1) values when d is a square",
        applicability="b^2 - 4c is a positive square",
    ),
    "EQ_3_7": CatalogEntry(
        id="EQ_3_7",
        suite=Suite.IDENTITIES,
        reference="Theorem 3.1(i)",
        func=check_eq_3_7,
        parameters={"n": (1, 60), "b": (-6, 6), "c": (-6, 6)},
        description="mean of T_k M_k d^(n-1-k) as a w(n,k)-sum, integral",
    ),
    "EQ_3_12": CatalogEntry(
        id="EQ_3_12",
        suite=Suite.IDENTITIES,
        reference="Corollary 3.1",
        func=check_eq_3_12,
        parameters={"n": (1, 60)},
        description="T_k M_k (-3)^(n-1-k) mean, b = c = 1",
    ),
    "EQ_3_13": CatalogEntry(
        id="EQ_3_13",
        suite=Suite.IDENTITIES,
        reference="Corollary 3.1",
        func=check_eq_3_13,
        parameters={"n": (1, 60)},
        description="T_k M_k / (-3)^k mean, b = c = 3",
    ),
    "EQ_3_17": CatalogEntry(
        id="EQ_3_17",
        suite=Suite.IDENTITIES,
        reference="Corollary 3.2",
        func=check_eq_3_17,
        parameters={"n": (1, 60)},
        description="T_k M_k 5^(n-1-k) mean, (b, c) = (1, -1)",
    ),
    "EQ_3_18": CatalogEntry(
        id="EQ_3_18",
        suite=Suite.IDENTITIES,
        reference="Corollary 3.2",
        func=check_eq_3_18,
        parameters={"n": (1, 60)},
        description="T_k M_k / 5^k mean, b = c = 5",
    ),
    "EQ_LUCAS_FACTS": CatalogEntry(
        id="EQ_LUCAS_FACTS",
        suite=Suite.IDENTITIES,
        reference="Section 3, before Corollaries 3.1 and 3.2",
        func=check_eq_lucas_facts,
        parameters={"n": (1, 100)},
        description="Lucas-number and Lucas-sequence facts behind Corollaries 3.1 and 3.2",
    ),
}

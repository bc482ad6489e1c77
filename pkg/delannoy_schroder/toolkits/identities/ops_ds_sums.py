"""Identity checks around the sum of D_k(x) s_(k+1)(x) and its consequences."""

from fractions import Fraction
from math import comb

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    check,
    combine,
    compare,
)
from delannoy_schroder.core.exact.integers import catalan
from delannoy_schroder.core.poly.dense import IntPolynomial, compose_x_xplus1
from delannoy_schroder.toolkits.sequences.generators import (
    big_w_poly,
    delannoy_general,
    delannoy_poly,
    schroder_large_poly,
    schroder_little_poly,
)
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_general_table,
    delannoy_polys,
    delannoy_values,
    large_schroder_values,
    little_schroder_polys,
    little_schroder_values,
)

HALF = Fraction(-1, 2)


_DS_PREFIXES = [IntPolynomial()]


def ds_prefix(n: int) -> IntPolynomial:
    """sum_{k < n} D_k(x) s_(k+1)(x)."""
    if len(_DS_PREFIXES) <= n:
        d, s = delannoy_polys(n), little_schroder_polys(n)
        for k in range(len(_DS_PREFIXES) - 1, n):
            _DS_PREFIXES.append(_DS_PREFIXES[-1] + d[k] * s[k])
    return _DS_PREFIXES[n]


def check_eq_1_7(n: int) -> Verdict:
    lhs = ds_prefix(n).exact_div_scalar(n)
    rhs = compose_x_xplus1(big_w_poly(n))
    return compare(lhs, rhs)


def check_eq_1_11_int(n: int) -> Verdict:
    d = delannoy_values(1, n)
    s = little_schroder_values(1, n)
    lhs = Fraction(sum(a * b for a, b in zip(d, s)), n)
    rhs = big_w_poly(n)(2)
    return combine(
        [
            compare(lhs, rhs, "mean of D_k s_(k+1)"),
            check(rhs % 2 == 1, f"W_n(2) = {rhs}"),
        ]
    )


def _eq_1_13_lhs(n: int) -> Fraction:
    return sum(
        (
            Fraction(comb(n, k) * comb(n + k, k - 1) * catalan(k - 1), (-4) ** (k - 1))
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


# The second-order recurrence of the left side is checked up to this n
EQ_1_13_RECURRENCE_MAX_N = 100


def check_eq_1_13(n: int) -> Verdict:
    scale = 4 ** (n - 1)
    lhs = _eq_1_13_lhs(n) * scale
    rhs = (n + 1) // 2 * comb(n, n // 2) ** 2
    verdicts = [compare(lhs, rhs, "scaled by 4^(n-1)")]
    if n <= EQ_1_13_RECURRENCE_MAX_N:
        a0, a1, a2 = _eq_1_13_lhs(n), _eq_1_13_lhs(n + 1), _eq_1_13_lhs(n + 2)
        residual = (n + 1) ** 2 * a0 + (2 * n + 3) * a1 - (n + 1) * (n + 3) * a2
        verdicts.append(compare(residual, 0, "second-order recurrence"))
    return combine(verdicts)


def check_eq_cor12_aux(m: int) -> Verdict:
    lhs = sum(
        (Fraction(comb(2 * j, j) ** 2, (j + 1) * 16**j) for j in range(m + 1)),
        Fraction(0),
    )
    rhs = Fraction((2 * m + 1) ** 2 * comb(2 * m, m) ** 2, (m + 1) * 16**m)
    return compare(lhs, rhs)


def check_eq_half_values(k: int) -> Verdict:
    if k % 2:
        d_expected = s_expected = Fraction(0)
    else:
        sign = (-1) ** (k // 2)
        d_expected = Fraction(sign * comb(k, k // 2), 2**k)
        s_expected = Fraction(sign * catalan(k // 2), 2**k)
    d_value = delannoy_values(HALF, k + 1)[k]
    s_value = little_schroder_values(HALF, k + 1)[k]
    large = 2 * large_schroder_values(HALF, k + 2)[k + 1]
    return combine(
        [
            compare(d_value, d_expected, "D_k(-1/2)"),
            compare(s_value, s_expected, "s_(k+1)(-1/2)"),
            compare(large, s_expected, "2 S_(k+1)(-1/2)"),
        ]
    )


def check_eq_s2s(n: int) -> Verdict:
    return compare(schroder_large_poly(n)(1), 2 * schroder_little_poly(n)(1))


def check_eq_1_2_cross(n: int) -> Verdict:
    first = sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))
    second = sum(comb(n + k, 2 * k) * comb(2 * k, k) for k in range(n + 1))
    return combine(
        [
            compare(first, second, "binomial sums"),
            compare(first, delannoy_general(n, n), "D_(n,n)"),
            compare(first, delannoy_general_table(n + 1)[n][n], "lattice recurrence"),
            compare(first, delannoy_poly(n)(1), "D_n(1)"),
        ]
    )


DS_SUM_IDENTITIES = {
    "EQ_1_7": CatalogEntry(
        id="EQ_1_7",
        suite=Suite.IDENTITIES,
        reference="Theorem 1.1(i)",
        func=check_eq_1_7,
        parameters={"n": (1, 300)},
        description="(1/n) sum_{k<n} D_k(x) s_(k+1)(x) = W_n(x(x+1)) in Z[x]",
    ),
    "EQ_1_11_INT": CatalogEntry(
        id="EQ_1_11_INT",
        suite=Suite.IDENTITIES,
        reference="Corollary 1.1",
        func=check_eq_1_11_int,
        parameters={"n": (1, 200)},
        description="mean of D_k s_(k+1) equals W_n(2) and is odd",
    ),
    "EQ_1_13": CatalogEntry(
        id="EQ_1_13",
        suite=Suite.IDENTITIES,
        reference="Corollary 1.2",
        func=check_eq_1_13,
        parameters={"n": (1, 150)},
        description="Catalan-weighted sum at -1/4 in closed form, plus its recurrence",
    ),
    "EQ_COR12_AUX": CatalogEntry(
        id="EQ_COR12_AUX",
        suite=Suite.IDENTITIES,
        reference="proof of Corollary 1.2",
        func=check_eq_cor12_aux,
        parameters={"m": (0, 150)},
        description="partial sums of C(2j,j)^2 / ((j+1) 16^j)",
    ),
    "EQ_HALF_VALUES": CatalogEntry(
        id="EQ_HALF_VALUES",
        suite=Suite.IDENTITIES,
        reference="proof of Corollary 1.2",
        func=check_eq_half_values,
        parameters={"k": (0, 150)},
        description="D_k, s_(k+1) and 2 S_(k+1) at x = -1/2",
    ),
    "EQ_S2S": CatalogEntry(
        id="EQ_S2S",
        suite=Suite.IDENTITIES,
        reference="Section 1",
        func=check_eq_s2s,
        parameters={"n": (1, 200)},
        description="S_n = 2 s_n",
    ),
    "EQ_1_2_CROSS": CatalogEntry(
        id="EQ_1_2_CROSS",
        suite=Suite.IDENTITIES,
        reference="Eq. (1.2)",
        func=check_eq_1_2_cross,
        parameters={"n": (0, 200)},
        description="both binomial sums for D_n agree with D_(n,n) and D_n(1)",
    ),
}

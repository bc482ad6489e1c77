"""Known congruences for the central Delannoy and large Schroder numbers."""

from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict, check, compare_mod, skip
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.integers import euler_number
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_values,
    large_schroder_values,
)

PRIMES = (3, PRIME_BOUND - 1)


def check_c_s11b_d(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    d = delannoy_values(1, p)
    lhs = sum((Fraction(d[k], k * k) for k in range(1, p)), Fraction(0))
    rhs = (-1) ** ((p - 1) // 2) * 2 * euler_number(p - 3)
    return compare_mod(lhs, rhs, p, 1)


def check_c_s11b_s(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    s = large_schroder_values(1, p)
    lhs = sum((Fraction(s[k], 6**k) for k in range(1, p)), Fraction(0))
    return compare_mod(lhs, 0, p, 1)


def check_c_s14a_dsq(p: int) -> Verdict:
    lhs = sum(v * v for v in delannoy_values(1, p))
    return compare_mod(lhs, legendre_symbol(2, p), p, 1)


def check_c_s14a_int(n: int) -> Verdict:
    total = sum((2 * k + 1) * v * v for k, v in enumerate(delannoy_values(1, n)))
    quotient, remainder = divmod(total, n * n)
    if remainder == 0:
        return check(True, f"quotient {quotient}")
    return check(False, f"remainder {remainder} modulo n^2 = {n * n}")


def check_c_liu(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    d, s = delannoy_values(1, p), large_schroder_values(1, p)
    lhs = sum(d[k] * s[k] for k in range(1, p))
    harmonic = sum((Fraction((-1) ** k + 3, k) for k in range(1, p)), Fraction(0))
    return compare_mod(lhs, -2 * p * harmonic, p, 4)


BACKGROUND_CONGRUENCES = {
    "C_S11B_D": CatalogEntry(
        id="C_S11B_D",
        suite=Suite.CONGRUENCES,
        reference="Section 1",
        func=check_c_s11b_d,
        parameters={"p": PRIMES},
        description="sum_{k=1}^{p-1} D_k / k^2 = (-1)^((p-1)/2) 2 E_(p-3) modulo p",
        applicability="p > 3",
    ),
    "C_S11B_S": CatalogEntry(
        id="C_S11B_S",
        suite=Suite.CONGRUENCES,
        reference="Section 1",
        func=check_c_s11b_s,
        parameters={"p": PRIMES},
        description="sum_{k=1}^{p-1} S_k / 6^k = 0 modulo p",
        applicability="p > 3",
    ),
    "C_S14A_DSQ": CatalogEntry(
        id="C_S14A_DSQ",
        suite=Suite.CONGRUENCES,
        reference="Section 1",
        func=check_c_s14a_dsq,
        parameters={"p": PRIMES},
        description="sum_{k<p} D_k^2 = (2|p) modulo p",
    ),
    "C_S14A_INT": CatalogEntry(
        id="C_S14A_INT",
        suite=Suite.CONGRUENCES,
        reference="Section 1",
        func=check_c_s14a_int,
        parameters={"n": (1, 300)},
        description="n^2 divides sum_{k<n} (2k+1) D_k^2",
    ),
    "C_LIU": CatalogEntry(
        id="C_LIU",
        suite=Suite.CONGRUENCES,
        reference="Remark 1.2",
        func=check_c_liu,
        parameters={"p": PRIMES},
        description="sum_{k=1}^{p-1} D_k S_k = -2p sum_{k=1}^{p-1} ((-1)^k + 3)/k modulo p^4",
        applicability="p > 3",
    ),
}

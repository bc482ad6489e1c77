"""Congruences for sum_{k<p} k^e T_k(b,c) M_k(b,c) / d^k with d = b^2 - 4c."""

from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    combine,
    compare_mod,
    skip,
)
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.integers import lucas_u_mod
from delannoy_schroder.core.exact.padic import fermat_quotient
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.toolkits.congruences.sums import tm_sum_mod

PRIMES = (3, PRIME_BOUND - 1)
BC_GRID = (-6, 6)


def _theorem31_mod_p2(b: int, c: int, p: int) -> Fraction:
    d = b * b - 4 * c
    return Fraction(p * b * b, 2 * c) * (legendre_symbol(d, p) - 1)


def _theorem31_mod_p3(b: int, c: int, p: int) -> Fraction:
    d = b * b - 4 * c
    eps = legendre_symbol(d, p)
    q_d = fermat_quotient(d, p).residue(1)
    q_c = fermat_quotient(c, p).residue(1)
    lucas = lucas_u_mod(p - eps, b * b - 2 * c, c * c, p**3)
    return (
        _theorem31_mod_p2(b, c, p)
        + Fraction(p * p, 2 * c) * (b * b * (q_d - q_c + eps) - d)
        - Fraction(p * b * b, 4 * c ** (2 - eps)) * (2 * c + d * eps) * lucas
    )


def _coprime_to_cd(p: int, c: int, d: int) -> bool:
    return (c * d) % p != 0


def check_c_3_8(p: int, b: int, c: int) -> Verdict:
    d = b * b - 4 * c
    if not _coprime_to_cd(p, c, d):
        return skip(f"{p} divides cd = {c * d}")
    return compare_mod(tm_sum_mod(b, c, p, p * p), _theorem31_mod_p2(b, c, p), p, 2)


def check_c_3_9(p: int, b: int, c: int) -> Verdict:
    d = b * b - 4 * c
    if not _coprime_to_cd(p, c, d):
        return skip(f"{p} divides cd = {c * d}")
    return compare_mod(tm_sum_mod(b, c, p, p**3), _theorem31_mod_p3(b, c, p), p, 3)


def check_c_3_10(p: int, b: int, c: int) -> Verdict:
    d = b * b - 4 * c
    if d % p == 0:
        return skip(f"{p} divides d = {d}")
    lhs = tm_sum_mod(b, c, p, p, weighted=True)
    return compare_mod(lhs, 2 * legendre_symbol(c * d, p), p, 1)


def check_c_3_14(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    eps = legendre_symbol(p, 3)
    rhs = Fraction(p, 2) * (eps - 1) + Fraction(p * p, 2) * (
        fermat_quotient(3, p).residue(1) + eps + 3
    )
    return compare_mod(tm_sum_mod(1, 1, p, p**3), rhs, p, 3, f"(p|3)={eps}")


def check_c_3_15(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    eps = legendre_symbol(p, 3)
    rhs = Fraction(3 * p, 2) * (eps - 1) + Fraction(p * p, 2) * (3 * eps + 1)
    return compare_mod(tm_sum_mod(3, 3, p, p**3), rhs, p, 3, f"(p|3)={eps}")


def check_c_3_16(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    return combine(
        [
            compare_mod(
                tm_sum_mod(1, 1, p, p, weighted=True),
                2 * legendre_symbol(p, 3),
                p,
                1,
                "(b,c)=(1,1)",
            ),
            compare_mod(
                tm_sum_mod(3, 3, p, p, weighted=True),
                2 * legendre_symbol(-1, p),
                p,
                1,
                "(b,c)=(3,3)",
            ),
        ]
    )


def _fibonacci_term(p: int, eps: int) -> int:
    return lucas_u_mod(p - eps, 1, -1, p**3)


def check_c_3_19(p: int) -> Verdict:
    if p == 5:
        return skip("needs p != 5")
    eps = legendre_symbol(p, 5)
    rhs = (
        Fraction(p, 2) * (1 - eps)
        + Fraction(p * p, 2) * (5 - eps - fermat_quotient(5, p).residue(1))
        + Fraction(p, 2) * (5 - 2 * eps) * _fibonacci_term(p, eps)
    )
    return compare_mod(tm_sum_mod(1, -1, p, p**3), rhs, p, 3, f"(p|5)={eps}")


def check_c_3_20(p: int) -> Verdict:
    if p == 5:
        return skip("needs p != 5")
    eps = legendre_symbol(p, 5)
    rhs = (
        Fraction(5 * p, 2) * (eps - 1)
        + Fraction(p * p, 2) * (5 * eps - 1)
        - Fraction(5 * p, 2) * (1 + 2 * eps) * _fibonacci_term(p, eps)
    )
    return compare_mod(tm_sum_mod(5, 5, p, p**3), rhs, p, 3, f"(p|5)={eps}")


def check_c_3_21(p: int) -> Verdict:
    if p == 5:
        return skip("needs p != 5")
    fibonacci_side = legendre_symbol(-5, p) * tm_sum_mod(1, -1, p, p, weighted=True)
    return combine(
        [
            compare_mod(fibonacci_side, 2, p, 1, "(b,c)=(1,-1)"),
            compare_mod(tm_sum_mod(5, 5, p, p, weighted=True), 2, p, 1, "(b,c)=(5,5)"),
        ]
    )


def _entry(entry_id: str, reference: str, func, description: str, **kwargs) -> CatalogEntry:
    return CatalogEntry(
        id=entry_id,
        suite=Suite.CONGRUENCES,
        reference=reference,
        func=func,
        parameters=kwargs.pop("parameters", {"p": PRIMES}),
        description=description,
        **kwargs,
    )


TRINOMIAL_CONGRUENCES = {
    "C_3_8": _entry(
        "C_3_8",
        "Theorem 3.1(i)",
        check_c_3_8,
        "sum T_k M_k / d^k = pb^2/(2c) ((d|p) - 1) modulo p^2",
        parameters={"p": PRIMES, "b": BC_GRID, "c": BC_GRID},
        applicability="p not dividing cd",
    ),
    "C_3_9": _entry(
        "C_3_9",
        "Theorem 3.1(i)",
        check_c_3_9,
        "sum T_k M_k / d^k modulo p^3 through u_(p-(d|p))(b^2-2c, c^2)",
        parameters={"p": PRIMES, "b": BC_GRID, "c": BC_GRID},
        applicability="p not dividing cd",
    ),
    "C_3_10": _entry(
        "C_3_10",
        "Theorem 3.1(ii)",
        check_c_3_10,
        "sum k T_k M_k / d^k = 2 (cd|p) modulo p",
        parameters={"p": PRIMES, "b": BC_GRID, "c": BC_GRID},
        applicability="p not dividing d",
    ),
    "C_3_14": _entry(
        "C_3_14",
        "Corollary 3.1",
        check_c_3_14,
        "sum T_k M_k / (-3)^k modulo p^3",
        applicability="p > 3",
    ),
    "C_3_15": _entry(
        "C_3_15",
        "Corollary 3.1",
        check_c_3_15,
        "sum T_k(3,3) M_k(3,3) / (-3)^k modulo p^3",
        applicability="p > 3",
    ),
    "C_3_16": _entry(
        "C_3_16",
        "Corollary 3.1",
        check_c_3_16,
        "weighted sums for (b,c) = (1,1) and (3,3) modulo p",
        applicability="p > 3",
    ),
    "C_3_19": _entry(
        "C_3_19",
        "Corollary 3.2",
        check_c_3_19,
        "sum T_k(1,-1) M_k(1,-1) / 5^k modulo p^3 through F_(p-(p|5))",
        applicability="p != 5",
    ),
    "C_3_20": _entry(
        "C_3_20",
        "Corollary 3.2",
        check_c_3_20,
        "sum T_k(5,5) M_k(5,5) / 5^k modulo p^3 through F_(p-(p|5))",
        applicability="p != 5",
    ),
    "C_3_21": _entry(
        "C_3_21",
        "Corollary 3.2",
        check_c_3_21,
        "weighted sums for (b,c) = (1,-1) and (5,5) are 2 modulo p",
        applicability="p != 5",
    ),
}

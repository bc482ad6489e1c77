"""Open supercongruences for M_k = M_k(1,1) and T_k = T_k(1,1)."""

from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict, compare_mod, skip
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.toolkits.congruences.sums import tm_sum_mod
from delannoy_schroder.toolkits.sequences.recurrences import (
    motzkin_values,
    trinomial_values,
)

PRIMES = (5, PRIME_BOUND - 1)


def _symbol(p: int) -> int:
    return legendre_symbol(p, 3)


def check_m_squares(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    lhs = sum(m * m for m in motzkin_values(1, 1, p))
    return compare_mod(lhs, (2 - 6 * p) * _symbol(p), p, 2)


def check_k_m_squares(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    lhs = sum(k * m * m for k, m in enumerate(motzkin_values(1, 1, p)))
    return compare_mod(lhs, (9 * p - 1) * _symbol(p), p, 2)


def check_tm(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    t, m = trinomial_values(1, 1, p), motzkin_values(1, 1, p)
    lhs = sum(a * b for a, b in zip(t, m))
    eps = _symbol(p)
    rhs = Fraction(4, 3) * eps + Fraction(p, 6) * (1 - 9 * eps)
    return compare_mod(lhs, rhs, p, 2)


def check_k_tm(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    t, m = trinomial_values(1, 1, p), motzkin_values(1, 1, p)
    lhs = sum(k * a * b for k, (a, b) in enumerate(zip(t, m)))
    rhs = legendre_symbol(-1, p) - Fraction(5, 3) * _symbol(p)
    return compare_mod(lhs, rhs, p, 1)


def check_tm33_mod_p4(p: int) -> Verdict:
    if p == 3:
        return skip("needs p > 3")
    if p % 3 != 2:
        return skip(f"needs p = 2 mod 3, got p = {p % 3} mod 3")
    lhs = tm_sum_mod(3, 3, p, p**4)
    return compare_mod(lhs, p**3 - p * p - 3 * p, p, 4)


def _entry(entry_id: str, func, description: str, applicability: str = "p > 3") -> CatalogEntry:
    return CatalogEntry(
        id=entry_id,
        suite=Suite.CONJECTURES,
        reference="Remark 3.1",
        func=func,
        parameters={"p": PRIMES},
        description=description,
        conjectural=True,
        applicability=applicability,
    )


MOTZKIN_CHECKS = {
    "REM_3_1_MSQ": _entry(
        "REM_3_1_MSQ", check_m_squares, "sum M_k^2 = (2 - 6p)(p|3) modulo p^2"
    ),
    "REM_3_1_KMSQ": _entry(
        "REM_3_1_KMSQ", check_k_m_squares, "sum k M_k^2 = (9p - 1)(p|3) modulo p^2"
    ),
    "REM_3_1_TM": _entry(
        "REM_3_1_TM",
        check_tm,
        "sum T_k M_k = 4/3 (p|3) + p/6 (1 - 9(p|3)) modulo p^2",
    ),
    "REM_3_1_KTM": _entry(
        "REM_3_1_KTM", check_k_tm, "sum k T_k M_k = (-1|p) - 5/3 (p|3) modulo p"
    ),
    "REM_3_1_S14A_56": _entry(
        "REM_3_1_S14A_56",
        check_tm33_mod_p4,
        "sum T_k(3,3) M_k(3,3) / (-3)^k = p^3 - p^2 - 3p modulo p^4",
        applicability="p > 3, p = 2 mod 3",
    ),
}

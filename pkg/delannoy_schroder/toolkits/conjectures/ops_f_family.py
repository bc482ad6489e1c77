"""The polynomials f_n(x) = (1/n) sum_{k<n} D_k(x) R_k(x) and the sums of D_k R_k at primes."""

import logging
from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, CheckStatus, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    check,
    combine,
    compare_mod,
)
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.integers import euler_number
from delannoy_schroder.core.exact.padic import fermat_quotient
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.core.poly.dense import RatPolynomial
from delannoy_schroder.toolkits.conjectures.evidence import irreducibility_evidence
from delannoy_schroder.toolkits.sequences.generators import (
    delannoy_poly,
    f_poly,
    r_poly,
)
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_values,
    f_poly_from_recurrence,
)

logger = logging.getLogger(__name__)

PRIMES = (3, PRIME_BOUND - 1)


def _dr_terms(p: int) -> list[Fraction]:
    """D_k R_k for 0 <= k < p, with R_k = R_k(1)."""
    return [d * r_poly(k)(1) for k, d in enumerate(delannoy_values(1, p))]


def check_integrality(n: int) -> Verdict:
    f = f_poly(n)
    if f != f_poly_from_recurrence(n):
        return check(False, f"two constructions of f_{n} disagree")
    if f.is_integral():
        return check(True, f"f_{n} has integer coefficients, degree {f.degree}")
    return check(False, f"f_{n} has denominator {f.common_denominator}")


def check_mod32(n: int) -> Verdict:
    value = f_poly(n)(1)
    return compare_mod(value, (-1) ** n, 2, 5, f"f_{n}(1) = {value}")


def check_irreducible(n: int, primes: tuple[int, ...] | None = None) -> Verdict:
    f = f_poly(n)
    if not f.is_integral():
        return check(False, f"f_{n} is not in Z[x]")
    return irreducibility_evidence(f.to_int_polynomial(), f"f_{n}", primes)


def check_dr_sum(p: int) -> Verdict:
    """The p mod 4 case split of sum_{k<p} D_k R_k."""
    total = sum(_dr_terms(p), Fraction(0))
    if p % 4 == 1:
        q = fermat_quotient(2, p, precision=2).residue(2)
        rhs = -p + 8 * p * p * q - 2 * p**3 * euler_number(p - 3)
        return compare_mod(total, rhs, p, 4, "p = 1 mod 4")
    return compare_mod(total, -5 * p, p, 3, "p = 3 mod 4")


def check_dr_over_k(p: int) -> Verdict:
    terms = _dr_terms(p)
    lhs = sum((terms[k] / k for k in range(1, p)), Fraction(0))
    rhs = (4 - legendre_symbol(-1, p)) * fermat_quotient(2, p).residue(1)
    return compare_mod(lhs, rhs, p, 1)


def check_k_dr(p: int) -> Verdict:
    terms = _dr_terms(p)
    lhs = sum((k * terms[k] for k in range(1, p)), Fraction(0))
    rhs = Fraction(1, 2) + Fraction(3 * p, 2) * (1 - 2 * legendre_symbol(-1, p))
    return compare_mod(lhs, rhs, p, 2)


def check_k_dr_poly(p: int) -> Verdict:
    """sum_{k=1}^{p-1} k D_k(x) R_k(x) = x^(p-1)/2 mod p at every x mod p."""
    total = RatPolynomial()
    for k in range(1, p):
        total = total + k * (delannoy_poly(k) * r_poly(k))
    logger.debug("sum of k D_k(x) R_k(x) for p = %d has degree %d", p, total.degree)
    verdicts = []
    for x in range(p):
        v = compare_mod(total.residue_at(x, p), Fraction(x ** (p - 1), 2), p, 1, f"x={x}")
        if v.failed:
            verdicts.append(v)
    if verdicts:
        return combine(verdicts)
    return Verdict(CheckStatus.PASS, f"all {p} residues x mod {p}")


def _entry(entry_id: str, reference: str, func, parameters, description: str) -> CatalogEntry:
    return CatalogEntry(
        id=entry_id,
        suite=Suite.CONJECTURES,
        reference=reference,
        func=func,
        parameters=parameters,
        description=description,
        conjectural=True,
    )


F_FAMILY_CHECKS = {
    "CONJ_4_2_INT": _entry(
        "CONJ_4_2_INT",
        "Conjecture 4.2(i)",
        check_integrality,
        {"n": (1, 100)},
        "f_n(x) has integer coefficients",
    ),
    "CONJ_4_2_MOD32": _entry(
        "CONJ_4_2_MOD32",
        "Conjecture 4.2(i)",
        check_mod32,
        {"n": (1, 100)},
        "f_n(1) = (-1)^n modulo 32",
    ),
    "CONJ_4_2_IRRED": _entry(
        "CONJ_4_2_IRRED",
        "Conjecture 4.2(i)",
        check_irreducible,
        {"n": (2, 40)},
        "f_n(x) is irreducible over Q",
    ),
    "CONJ_4_9": _entry(
        "CONJ_4_9",
        "Conjecture 4.2(ii)",
        check_dr_sum,
        {"p": PRIMES},
        "sum_{k<p} D_k R_k modulo p^4 (p = 1 mod 4) or p^3 (p = 3 mod 4)",
    ),
    "CONJ_4_10": _entry(
        "CONJ_4_10",
        "Conjecture 4.2(ii)",
        check_dr_over_k,
        {"p": PRIMES},
        "sum_{k=1}^{p-1} D_k R_k / k = (4 - (-1|p)) q_p(2) modulo p",
    ),
    "CONJ_4_11": _entry(
        "CONJ_4_11",
        "Conjecture 4.2(ii)",
        check_k_dr,
        {"p": PRIMES},
        "sum_{k=1}^{p-1} k D_k R_k = 1/2 + 3p/2 (1 - 2(-1|p)) modulo p^2",
    ),
    "CONJ_4_2_POLY": _entry(
        "CONJ_4_2_POLY",
        "Conjecture 4.2(ii)",
        check_k_dr_poly,
        {"p": PRIMES},
        "sum_{k=1}^{p-1} k D_k(x) R_k(x) = x^(p-1)/2 modulo p",
    ),
}

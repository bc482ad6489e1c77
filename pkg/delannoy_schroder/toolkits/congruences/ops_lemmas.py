"""Congruences for W_p(x), its coefficients and Lucas sequences at a prime."""

from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    combine,
    compare,
    compare_mod,
    skip,
)
from delannoy_schroder.core.config.config import PRIME_BOUND
from delannoy_schroder.core.exact.integers import (
    binomial,
    catalan,
    lucas_u,
    lucas_u_mod,
)
from delannoy_schroder.core.exact.padic import residue
from delannoy_schroder.core.exact.primes import legendre_symbol
from delannoy_schroder.toolkits.congruences.sums import big_w_mod
from delannoy_schroder.toolkits.sequences.generators import u_lemma25, w_coeff
from delannoy_schroder.toolkits.sequences.recurrences import lemma_u_values

PRIMES = (3, PRIME_BOUND - 1)
GRID = (-10, 10)


def check_c_2_8(p: int, x: int) -> Verdict:
    if x % p == 0:
        return skip(f"{p} divides x={x}")
    eps = legendre_symbol(4 * x + 1, p)
    rhs = Fraction(4 * x + 1, 2 * x) * (eps - 1)
    return compare_mod(big_w_mod(p, x, p), rhs, p, 1, f"(4x+1|p)={eps}")


def check_c_2_9(p: int, t: int) -> Verdict:
    """W_p(x) = 2p mod p^2 at the lift x = r + t p of r = -1/4 mod p."""
    x = residue(Fraction(-1, 4), p) + t * p
    return compare_mod(big_w_mod(p, x, p * p), 2 * p, p, 2, f"x={x}")


def check_c_2_10(p: int, x: int) -> Verdict:
    if x % p == 0:
        return skip(f"{p} divides x={x}")
    if (4 * x + 1) % p == 0:
        return skip(f"x={x} is -1/4 mod {p}")
    modulus = p * p
    eps = legendre_symbol(4 * x + 1, p)
    lucas = lucas_u_mod(p - eps, 2 * x + 1, x * x, modulus)
    rhs = (
        2 * p
        + Fraction(4 * x + 1, 2 * x) * (1 - x ** (p - 1) + (p + 1) * (eps - 1))
        - Fraction(4 * x + 1, 4 * x ** (2 - eps)) * (2 * x + eps) * lucas
    )
    return compare_mod(big_w_mod(p, x, modulus), rhs, p, 2, f"(4x+1|p)={eps}")


def check_c_2_13(p: int) -> Verdict:
    """C_j^2 u_j for every j = 0..p, with u_j cross-checked against its recurrence."""
    from_recurrence = lemma_u_values(p)
    half = (p - 1) // 2
    verdicts = []
    for j in range(p + 1):
        u = u_lemma25(j, p)
        if u != from_recurrence[j]:
            verdicts.append(compare(u, from_recurrence[j], f"u_{j} by sum and recurrence"))
            continue
        expected = 2 if j == half else 0
        v = compare_mod(catalan(j) ** 2 * u, expected, p, 1, f"j={j}")
        if v.failed:
            verdicts.append(v)
    if verdicts:
        return combine(verdicts)
    return compare_mod(
        catalan(half) ** 2 * u_lemma25(half, p), 2, p, 1, f"all j in 0..{p}, j={half}"
    )


def check_c_wolst(p: int) -> Verdict:
    k = 3 if p > 3 else 2
    return compare_mod(binomial(2 * p - 1, p - 1), 1, p, k)


def check_c_w_coeff(p: int) -> Verdict:
    """Coefficient congruences of W_p used to reduce it modulo p^2."""
    verdicts = [
        compare_mod(w_coeff(p, p), 2 * (1 - p), p, 2, "w(p,p)"),
        compare_mod(catalan(p - 1), -(2 * p + 1), p, 2, "C_(p-1)"),
        compare_mod(
            catalan((p - 1) // 2), 2 * (-1) ** ((p - 1) // 2), p, 1, "C_((p-1)/2)"
        ),
    ]
    for k in range(1, p):
        v = compare_mod(
            w_coeff(p, k), (-1) ** (k - 1) * (1 - p + Fraction(p, k)), p, 2, f"w(p,{k})"
        )
        if v.failed:
            verdicts.append(v)
    return combine(verdicts)


def check_c_lucas(p: int, A: int, B: int) -> Verdict:
    delta = A * A - 4 * B
    if delta == 0:
        return skip("A^2 - 4B = 0")
    symbol = legendre_symbol(delta, p)
    u_p = lucas_u_mod(p, A, B, p)
    verdicts = [
        compare_mod(u_p, symbol, p, 1, "u_p"),
        compare(u_p, lucas_u(p, A, B) % p, "fast doubling against iteration"),
    ]
    if B % p:
        verdicts.append(
            compare_mod(lucas_u_mod(p - symbol, A, B, p), 0, p, 1, f"u_(p-{symbol})")
        )
    return combine(verdicts)


LEMMA_CONGRUENCES = {
    "C_2_8": CatalogEntry(
        id="C_2_8",
        suite=Suite.CONGRUENCES,
        reference="Lemma 2.4",
        func=check_c_2_8,
        parameters={"p": PRIMES, "x": GRID},
        description="W_p(x) = (4x+1)/(2x) ((4x+1|p) - 1) modulo p",
        applicability="p not dividing x",
    ),
    "C_2_9": CatalogEntry(
        id="C_2_9",
        suite=Suite.CONGRUENCES,
        reference="Lemma 2.4",
        func=check_c_2_9,
        parameters={"p": PRIMES, "t": GRID},
        description="W_p(x) = 2p modulo p^2 for x = -1/4 mod p",
    ),
    "C_2_10": CatalogEntry(
        id="C_2_10",
        suite=Suite.CONGRUENCES,
        reference="Lemma 2.4",
        func=check_c_2_10,
        parameters={"p": PRIMES, "x": GRID},
        description="W_p(x) modulo p^2 through u_(p-(4x+1|p))(2x+1, x^2)",
        applicability="p not dividing x(4x+1)",
    ),
    "C_2_13": CatalogEntry(
        id="C_2_13",
        suite=Suite.CONGRUENCES,
        reference="Lemma 2.5",
        func=check_c_2_13,
        parameters={"p": PRIMES},
        description="C_j^2 u_j = 2 [j = (p-1)/2] modulo p for j = 0..p",
    ),
    "C_WOLST": CatalogEntry(
        id="C_WOLST",
        suite=Suite.CONGRUENCES,
        reference="Section 2",
        func=check_c_wolst,
        parameters={"p": PRIMES},
        description="C(2p-1, p-1) = 1 modulo p^3 (p^2 for p = 3)",
        extended_primes=True,
    ),
    "C_W_COEFF": CatalogEntry(
        id="C_W_COEFF",
        suite=Suite.CONGRUENCES,
        reference="proof of Lemma 2.4",
        func=check_c_w_coeff,
        parameters={"p": PRIMES},
        description="w(p,k), C_(p-1) and C_((p-1)/2) modulo p^2 and p",
    ),
    "C_LUCAS": CatalogEntry(
        id="C_LUCAS",
        suite=Suite.CONGRUENCES,
        reference="Section 2",
        func=check_c_lucas,
        parameters={"p": PRIMES, "A": (-5, 5), "B": (-5, 5)},
        description="u_p(A,B) = (D|p) and u_(p-(D|p))(A,B) = 0 modulo p, D = A^2 - 4B",
        applicability="A^2 != 4B",
    ),
}

"""Irreducibility of w_(2n-1)(x), w_(2n)(x)/(2x+1) and W_n(x)."""

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import Verdict
from delannoy_schroder.core.poly.dense import IntPolynomial, exact_poly_div
from delannoy_schroder.toolkits.conjectures.evidence import irreducibility_evidence
from delannoy_schroder.toolkits.sequences.generators import big_w_poly, small_w_poly

N_RANGE = (2, 40)


def check_w_odd(n: int, primes: tuple[int, ...] | None = None) -> Verdict:
    return irreducibility_evidence(small_w_poly(2 * n - 1), f"w_{2 * n - 1}", primes)


def check_w_even(n: int, primes: tuple[int, ...] | None = None) -> Verdict:
    quotient = exact_poly_div(small_w_poly(2 * n), IntPolynomial((1, 2)))
    return irreducibility_evidence(quotient, f"w_{2 * n}/(2x+1)", primes)


def check_big_w(n: int, primes: tuple[int, ...] | None = None) -> Verdict:
    return irreducibility_evidence(big_w_poly(n), f"W_{n}", primes)


def _entry(entry_id: str, func, description: str) -> CatalogEntry:
    return CatalogEntry(
        id=entry_id,
        suite=Suite.CONJECTURES,
        reference="Conjecture 4.1",
        func=func,
        parameters={"n": N_RANGE},
        description=description,
        conjectural=True,
    )


IRREDUCIBILITY_CHECKS = {
    "CONJ_4_1_W_ODD": _entry(
        "CONJ_4_1_W_ODD", check_w_odd, "w_(2n-1)(x) is irreducible over Q"
    ),
    "CONJ_4_1_W_EVEN": _entry(
        "CONJ_4_1_W_EVEN", check_w_even, "w_(2n)(x)/(2x+1) is irreducible over Q"
    ),
    "CONJ_4_1_BIG_W": _entry(
        "CONJ_4_1_BIG_W", check_big_w, "W_n(x) is irreducible over Q"
    ),
}

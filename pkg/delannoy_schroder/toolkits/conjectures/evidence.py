"""Irreducibility evidence from reductions modulo small primes.

A polynomial that stays irreducible modulo a prime not dividing its
leading coefficient has no factorization over the rationals of positive
degrees. Failing at every prime proves nothing, so the outcome is either
evidence or inconclusive.
"""

import logging

from delannoy_schroder.core.checks.models import CheckStatus
from delannoy_schroder.core.checks.verdicts import Verdict
from delannoy_schroder.core.config.config import EVIDENCE_PRIME_BOUND
from delannoy_schroder.core.exact.primes import odd_primes
from delannoy_schroder.core.poly.dense import IntPolynomial
from delannoy_schroder.core.poly.finite_field import FpPolynomial, fp_irreducible

logger = logging.getLogger(__name__)


def default_evidence_primes() -> tuple[int, ...]:
    return tuple(odd_primes(3, EVIDENCE_PRIME_BOUND))


def irreducibility_evidence(
    poly: IntPolynomial, label: str, primes: tuple[int, ...] | None = None
) -> Verdict:
    """First prime at which `poly` is irreducible, or inconclusive."""
    if poly.degree < 1:
        return Verdict(CheckStatus.INCONCLUSIVE, f"{label} is constant")
    primes = default_evidence_primes() if primes is None else primes
    tried = 0
    for p in primes:
        if poly.leading_coefficient % p == 0:
            continue
        tried += 1
        if fp_irreducible(FpPolynomial.from_int_polynomial(poly, p)):
            logger.debug("%s irreducible mod %d after %d primes", label, p, tried)
            return Verdict(
                CheckStatus.EVIDENCE,
                f"{label} (degree {poly.degree}) irreducible mod {p}",
            )
    return Verdict(
        CheckStatus.INCONCLUSIVE,
        f"{label} (degree {poly.degree}) reducible mod all {tried} usable primes",
    )

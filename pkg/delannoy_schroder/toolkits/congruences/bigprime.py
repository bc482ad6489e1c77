"""Large-prime check: q_p(2) = 1/3 mod p and the vanishing of sum_{k<p} D_k s_(k+1) mod p^3.

Summing D_k s_(k+1) directly costs O(p^2) digits of work. Here the sum is
replaced by p W_p(y) and W_p(y) is reduced modulo p^2 in O(p) steps by
walking the terms w(p,k) C_(k-1) y^(k-1) with their consecutive ratios.
"""

import logging
from fractions import Fraction

from delannoy_schroder.core.checks.models import CatalogEntry, Suite
from delannoy_schroder.core.checks.verdicts import (
    Verdict,
    combine,
    compare_mod,
    skip,
)
from delannoy_schroder.core.exact.padic import (
    TrackedResidue,
    binomial_residue,
    fermat_quotient,
)
from delannoy_schroder.core.exact.primes import require_odd_prime

logger = logging.getLogger(__name__)

REMARK_PRIME = 588811
REMARK_Y = 2

PROGRESS_EVERY = 100_000


def big_w_mod_p2(p: int, y: int) -> TrackedResidue:
    """W_p(y) modulo p^2 by the term-ratio method."""
    require_odd_prime(p)
    term = TrackedResidue.from_int(1, p, 2)
    total = term
    for k in range(1, p - 1):
        numerator = (p - k) * (p + k + 1) * 2 * (2 * k - 1) * y
        term = term * numerator / (k * (k + 1) ** 2)
        total = total + term
        if k % PROGRESS_EVERY == 0:
            logger.debug("W_%d(%d): %d of %d terms", p, y, k + 1, p)
    # w(p,p) = C(2p,p)/(p+1) and C_(p-1) = C(2p-2,p-1)/p
    w_pp = binomial_residue(2 * p, p, p, 2) / (p + 1)
    catalan_last = binomial_residue(2 * p - 2, p - 1, p, 3) / p
    boundary = w_pp * catalan_last * pow(y, p - 1, p**3)
    return total + boundary


def bigprime_remark12(p: int, y: int) -> Verdict:
    """Both halves of the large-prime remark at (p, y)."""
    require_odd_prime(p)
    if p == 3:
        return skip("1/3 not defined mod p=3")
    logger.info("Checking q_%d(2) and W_%d(%d) modulo p^2", p, p, y)
    fermat = compare_mod(fermat_quotient(2, p), Fraction(1, 3), p, 1, "q_p(2) vs 1/3")
    w_value = big_w_mod_p2(p, y)
    vanishing = compare_mod(w_value, 0, p, 2, f"W_p({y})")
    verdict = combine([fermat, vanishing])
    if verdict.failed:
        return verdict
    return Verdict(
        verdict.status,
        f"{verdict.witness}; hence sum_(k<p) D_k(x) s_(k+1)(x) = 0 (mod {p}^3) at x(x+1) = {y}",
    )


BIGPRIME_CHECKS = {
    "REMARK_1_2": CatalogEntry(
        id="REMARK_1_2",
        suite=Suite.BIGPRIME,
        reference="Remark 1.2",
        func=bigprime_remark12,
        parameters={"p": (REMARK_PRIME, REMARK_PRIME), "y": (REMARK_Y, REMARK_Y)},
        description="q_p(2) = 1/3 mod p and W_p(y) = 0 mod p^2",
    ),
}

"""Prime-indexed sums shared by the congruence checks.

Sums over 0 <= k < p are computed exactly while p is below
`EXACT_SUM_MAX_PRIME` and by modular streaming above it.
"""

import logging

from delannoy_schroder.core.exact.padic import TrackedResidue
from delannoy_schroder.toolkits.sequences.enums import SequenceFamily
from delannoy_schroder.toolkits.sequences.generators import big_w_poly
from delannoy_schroder.toolkits.sequences.mod_stream import mod_stream
from delannoy_schroder.toolkits.sequences.recurrences import (
    delannoy_values,
    little_schroder_values,
    motzkin_values,
    trinomial_values,
)

logger = logging.getLogger(__name__)

EXACT_SUM_MAX_PRIME = 1000


def ds_products(x: int, p: int) -> list[int]:
    """D_k(x) s_(k+1)(x) for 0 <= k < p, exactly."""
    d, s = delannoy_values(x, p), little_schroder_values(x, p)
    return [a * b for a, b in zip(d, s)]


def ds_products_mod(x: int, p: int, precision: int) -> list[TrackedResidue]:
    """D_k(x) s_(k+1)(x) for 0 <= k < p, each known modulo p^precision."""
    d = mod_stream(SequenceFamily.DELANNOY_POLY, x, p, precision, p - 1)
    s = mod_stream(SequenceFamily.LITTLE_SCHRODER_POLY, x, p, precision, p)
    return [a * b for a, b in zip(d, s)]


def ds_sum(x: int, p: int, precision: int, weighted: bool = False):
    """sum_{k<p} k^e D_k(x) s_(k+1)(x) with e = 1 if weighted, else 0.

    Returns an exact integer for small p and a tracked residue otherwise.
    """
    if p < EXACT_SUM_MAX_PRIME:
        terms = ds_products(x, p)
    else:
        logger.debug("Streaming D_k s_(k+1) at x=%d modulo %d^%d", x, p, precision)
        terms = ds_products_mod(x, p, precision)
    total = 0
    for k, t in enumerate(terms):
        total = total + (k * t if weighted else t)
    return total


def big_w_mod(p: int, x: int, modulus: int) -> int:
    """W_p(x) modulo an integer."""
    return big_w_poly(p).residue_at(x, modulus)


def tm_sum_mod(
    b: int, c: int, p: int, modulus: int, weighted: bool = False
) -> int:
    """sum_{k<p} k^e T_k(b,c) M_k(b,c) / d^k modulo `modulus`, d = b^2 - 4c prime to p."""
    d = b * b - 4 * c
    d_inverse = pow(d, -1, modulus)
    t, m = trinomial_values(b, c, p), motzkin_values(b, c, p)
    total, scale = 0, 1
    for k in range(p):
        term = t[k] * m[k] * scale
        total += k * term if weighted else term
        scale = scale * d_inverse % modulus
    return total % modulus

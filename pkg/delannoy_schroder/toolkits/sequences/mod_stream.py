"""Streaming evaluation of polynomial families at x = x0 modulo p^k."""

import logging
from collections import deque
from collections.abc import Iterator

from delannoy_schroder.core.exact.errors import PrecisionExhaustedError
from delannoy_schroder.core.exact.padic import TrackedResidue, int_valuation
from delannoy_schroder.core.exact.primes import require_odd_prime
from delannoy_schroder.toolkits.sequences.enums import (
    STREAMABLE_FAMILIES,
    SequenceFamily,
)
from delannoy_schroder.toolkits.sequences.recurrences import RECURRENCES

logger = logging.getLogger(__name__)


class ModStream:
    """State of one modular stream.

    Terms are carried at working precision k + buffer, where the buffer is the
    total p-adic valuation of the leading divisors met up to n_max. Every
    emitted term is checked to still be known modulo p^k.
    """

    def __init__(
        self, family: SequenceFamily, x0: int, p: int, k: int, n_max: int
    ):
        family = SequenceFamily(family)
        if family not in STREAMABLE_FAMILIES:
            raise ValueError(f"No modular stream for family {family.value}")
        require_odd_prime(p)
        if k < 1:
            raise ValueError(f"Target precision must be >= 1, got {k}")
        self.recurrence = RECURRENCES[family]
        self.prime = p
        self.x0 = x0
        self.n_max = n_max
        self.target_precision = k
        start = self.recurrence.first_index + self.recurrence.order(x0)
        self.buffer = sum(
            int_valuation(d, p) for d in self.recurrence.divisors(start, n_max + 1)
        )
        self.working_precision = k + self.buffer
        self.window: deque[TrackedResidue] = deque()
        self.index = self.recurrence.first_index
        logger.debug(
            "mod_stream %s at x0=%d mod %d^%d: buffer %d",
            family.value,
            x0,
            p,
            k,
            self.buffer,
        )

    def _lift(self, value: int) -> TrackedResidue:
        return TrackedResidue.from_residue(value, self.prime, self.working_precision)

    def _next(self) -> TrackedResidue:
        rec = self.recurrence
        initial = rec.initial(self.x0)
        offset = self.index - rec.first_index
        if offset < len(initial):
            term = self._lift(initial[offset])
        else:
            coeffs = rec.coefficients(self.index, self.x0)
            acc = None
            for c, prev in zip(coeffs, reversed(self.window)):
                part = prev * c
                acc = part if acc is None else acc + part
            term = acc / rec.divisor(self.index)
            if term.absolute_precision < self.target_precision:
                raise PrecisionExhaustedError(
                    f"Term {self.index} of {rec.family.value} is known only modulo "
                    f"{self.prime}^{term.absolute_precision}"
                )
        self.window.append(term)
        if len(self.window) > len(initial):
            self.window.popleft()
        self.index += 1
        return term

    def __iter__(self) -> Iterator[TrackedResidue]:
        while self.index <= self.n_max:
            yield self._next()


def mod_stream(
    family: SequenceFamily, x0: int, p: int, k: int, n_max: int
) -> list[TrackedResidue]:
    """Family values at x0 for indices first_index..n_max, each known modulo p^k."""
    return list(ModStream(family, x0, p, k, n_max))

"""P-recurrences for the sequence families and one engine that runs them all.

A recurrence of order r reads

    divisor(m) * a_m = sum_i coefficients(m)[i] * a_(m-1-i)

and the same engine evaluates it over Z[x], over the integers or rationals at a
fixed x, and over valuation-tracked residues (see `mod_stream`). Division is
exact in every ring, so a non-divisible step always surfaces as an exception.
"""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, singledispatch
from itertools import islice
from math import comb

from delannoy_schroder.core.exact.integers import exact_quotient
from delannoy_schroder.core.exact.padic import TrackedResidue
from delannoy_schroder.core.exact.primes import require_odd_prime
from delannoy_schroder.core.poly.dense import (
    IntPolynomial,
    RatPolynomial,
    exact_poly_div,
)
from delannoy_schroder.toolkits.sequences.enums import SequenceFamily

logger = logging.getLogger(__name__)


@singledispatch
def exact_divide(value, divisor: int):
    raise TypeError(f"No exact division for {type(value).__name__}")


@exact_divide.register
def _(value: int, divisor: int):
    return exact_quotient(value, divisor)


@exact_divide.register
def _(value: Fraction, divisor: int):
    return value / divisor


@exact_divide.register
def _(value: IntPolynomial, divisor: int):
    return value.exact_div_scalar(divisor)


@exact_divide.register
def _(value: RatPolynomial, divisor: int):
    return value / divisor


@exact_divide.register
def _(value: TrackedResidue, divisor: int):
    return value / divisor


@dataclass(frozen=True)
class Recurrence:
    """A holonomic recurrence with its initial terms.

    `initial(x)` returns the terms at indices first_index, first_index + 1, ...
    and the recurrence takes over at index first_index + len(initial).
    `coefficients(m, x)` multiplies a_(m-1), a_(m-2), ... in that order.
    """

    family: SequenceFamily
    first_index: int
    initial: Callable[..., tuple]
    divisor: Callable[[int], int]
    coefficients: Callable[..., tuple]

    def order(self, *params) -> int:
        return len(self.initial(*params))

    def divisors(self, start: int, stop: int) -> list[int]:
        """Leading divisors used to produce indices start..stop-1."""
        return [self.divisor(m) for m in range(start, stop)]


def _big_w_coefficients(m: int, x) -> tuple:
    n = m - 3
    return (
        m * (2 * m - 1) * (4 * (2 * m - 3) ** 2 * x + 3 * n * n + 11 * n + 10),
        -(m - 2) * (2 * m - 3) * (4 * (2 * m - 1) ** 2 * x + 3 * n * n + 13 * n + 14),
        (m - 3) * (m - 2) ** 2 * (2 * m - 1),
    )


DELANNOY = Recurrence(
    family=SequenceFamily.DELANNOY_POLY,
    first_index=0,
    initial=lambda x: (1, 2 * x + 1),
    divisor=lambda m: m,
    coefficients=lambda m, x: ((2 * x + 1) * (2 * m - 1), -(m - 1)),
)

LITTLE_SCHRODER = Recurrence(
    family=SequenceFamily.LITTLE_SCHRODER_POLY,
    first_index=1,
    initial=lambda x: (1, 2 * x + 1),
    divisor=lambda m: m + 1,
    coefficients=lambda m, x: ((2 * x + 1) * (2 * m - 1), -(m - 2)),
)

# Same recurrence as s_n: the S_0 coefficient vanishes at m = 2
LARGE_SCHRODER = Recurrence(
    family=SequenceFamily.LARGE_SCHRODER_POLY,
    first_index=0,
    initial=lambda x: (1, x + 1),
    divisor=lambda m: m + 1,
    coefficients=lambda m, x: ((2 * x + 1) * (2 * m - 1), -(m - 2)),
)

SMALL_W = Recurrence(
    family=SequenceFamily.SMALL_W,
    first_index=1,
    initial=lambda x: (1, 2 * x + 1),
    divisor=lambda m: m + 1,
    coefficients=lambda m, x: ((2 * x + 1) * (2 * m - 1), -(m - 2)),
)

BIG_W = Recurrence(
    family=SequenceFamily.BIG_W,
    first_index=1,
    initial=lambda x: (1, 2 * x + 1, 10 * x * x + 5 * x + 1),
    divisor=lambda m: m * m * (m + 1) * (2 * m - 3),
    coefficients=_big_w_coefficients,
)

TRINOMIAL = Recurrence(
    family=SequenceFamily.TRINOMIAL_T,
    first_index=0,
    initial=lambda b, c: (1, b),
    divisor=lambda m: m,
    coefficients=lambda m, b, c: (b * (2 * m - 1), -(m - 1) * (b * b - 4 * c)),
)

MOTZKIN = Recurrence(
    family=SequenceFamily.MOTZKIN_M,
    first_index=0,
    initial=lambda b, c: (1, b),
    divisor=lambda m: m + 2,
    coefficients=lambda m, b, c: (b * (2 * m + 1), -(m - 1) * (b * b - 4 * c)),
)

RECURRENCES = {
    rec.family: rec
    for rec in (
        DELANNOY,
        LITTLE_SCHRODER,
        LARGE_SCHRODER,
        SMALL_W,
        BIG_W,
        TRINOMIAL,
        MOTZKIN,
    )
}


def iterate_recurrence(
    rec: Recurrence,
    params: tuple,
    lift: Callable | None = None,
    divide: Callable = exact_divide,
) -> Iterator:
    """Endless stream of terms from rec.first_index on.

    `lift` maps each initial term into the working ring (identity by default).
    """
    window = list(rec.initial(*params))
    if lift is not None:
        window = [lift(t) for t in window]
    yield from window
    m = rec.first_index + len(window)
    while True:
        coeffs = rec.coefficients(m, *params)
        acc = None
        for c, prev in zip(coeffs, reversed(window)):
            term = prev * c
            acc = term if acc is None else acc + term
        nxt = divide(acc, rec.divisor(m))
        yield nxt
        window = window[1:] + [nxt]
        m += 1


def holonomic_terms(rec: Recurrence, params: tuple, count: int, **kwargs) -> list:
    """The first `count` terms of the recurrence."""
    return list(islice(iterate_recurrence(rec, params, **kwargs), count))


def _as_polynomial(term) -> IntPolynomial:
    return term if isinstance(term, IntPolynomial) else IntPolynomial.constant(term)


class _TermCache:
    """Terms of one recurrence stream, extended on demand."""

    def __init__(self, stream: Iterator):
        self._stream = stream
        self.terms: list = []

    def take(self, count: int) -> tuple:
        while len(self.terms) < count:
            self.terms.append(next(self._stream))
        return tuple(self.terms[:count])


@lru_cache(maxsize=None)
def _poly_cache(family: SequenceFamily) -> _TermCache:
    rec = RECURRENCES[family]
    return _TermCache(
        iterate_recurrence(rec, (IntPolynomial.x(),), lift=_as_polynomial)
    )


@lru_cache(maxsize=1024)
def _value_cache(family: SequenceFamily, params: tuple) -> _TermCache:
    return _TermCache(iterate_recurrence(RECURRENCES[family], params))


def _poly_terms(family: SequenceFamily, count: int) -> tuple:
    return _poly_cache(family).take(count)


def _value_terms(family: SequenceFamily, params: tuple, count: int) -> tuple:
    return _value_cache(family, params).take(count)


def delannoy_polys(count: int) -> tuple[IntPolynomial, ...]:
    """D_0(x), ..., D_(count-1)(x)."""
    return _poly_terms(SequenceFamily.DELANNOY_POLY, count)


def little_schroder_polys(count: int) -> tuple[IntPolynomial, ...]:
    """s_1(x), ..., s_count(x)."""
    return _poly_terms(SequenceFamily.LITTLE_SCHRODER_POLY, count)


def large_schroder_polys(count: int) -> tuple[IntPolynomial, ...]:
    """S_0(x), ..., S_(count-1)(x)."""
    return _poly_terms(SequenceFamily.LARGE_SCHRODER_POLY, count)


def small_w_polys(count: int) -> tuple[IntPolynomial, ...]:
    """w_1(x), ..., w_count(x)."""
    return _poly_terms(SequenceFamily.SMALL_W, count)


def big_w_polys(count: int) -> tuple[IntPolynomial, ...]:
    """W_1(x), ..., W_count(x)."""
    return _poly_terms(SequenceFamily.BIG_W, count)


def delannoy_values(x, count: int) -> tuple:
    """D_0(x), ..., D_(count-1)(x) for an integer or rational x."""
    return _value_terms(SequenceFamily.DELANNOY_POLY, (x,), count)


def little_schroder_values(x, count: int) -> tuple:
    """s_1(x), ..., s_count(x)."""
    return _value_terms(SequenceFamily.LITTLE_SCHRODER_POLY, (x,), count)


def large_schroder_values(x, count: int) -> tuple:
    """S_0(x), ..., S_(count-1)(x)."""
    return _value_terms(SequenceFamily.LARGE_SCHRODER_POLY, (x,), count)


def big_w_values(x, count: int) -> tuple:
    """W_1(x), ..., W_count(x)."""
    return _value_terms(SequenceFamily.BIG_W, (x,), count)


def trinomial_values(b: int, c: int, count: int) -> tuple[int, ...]:
    """T_0(b,c), ..., T_(count-1)(b,c)."""
    return _value_terms(SequenceFamily.TRINOMIAL_T, (b, c), count)


def motzkin_values(b: int, c: int, count: int) -> tuple[int, ...]:
    """M_0(b,c), ..., M_(count-1)(b,c)."""
    return _value_terms(SequenceFamily.MOTZKIN_M, (b, c), count)


def schroder_large_from_delannoy(n: int) -> IntPolynomial:
    """S_n(x) = (D_(n+1)(x) - D_(n-1)(x)) / (2x(2n+1)) for n >= 1."""
    if n < 1:
        raise ValueError(f"The Delannoy difference needs n >= 1, got {n}")
    d = delannoy_polys(n + 2)
    return exact_poly_div(d[n + 1] - d[n - 1], IntPolynomial((0, 2 * (2 * n + 1))))


def f_poly_from_recurrence(n: int) -> RatPolynomial:
    """f_n(x) built from recurrence-generated D_k and the second form of R_k."""
    if n < 1:
        raise ValueError(f"f_poly requires n >= 1, got {n}")
    total = RatPolynomial()
    for k, d in enumerate(delannoy_polys(n)):
        r = RatPolynomial(
            Fraction(comb(k + j, 2 * j) * comb(2 * j, j), 2 * j - 1)
            for j in range(k + 1)
        )
        total = total + d * r
    return total / n


@lru_cache(maxsize=16)
def delannoy_general_table(size: int) -> tuple[tuple[int, ...], ...]:
    """D_(m,n) for 0 <= m, n < size by D_(m,n) = D_(m-1,n) + D_(m,n-1) + D_(m-1,n-1)."""
    table = [[1] * size for _ in range(size)]
    for m in range(1, size):
        for n in range(1, size):
            table[m][n] = table[m - 1][n] + table[m][n - 1] + table[m - 1][n - 1]
    return tuple(tuple(row) for row in table)


def lemma_u_step(j: int, p: int) -> Fraction:
    """Right-hand side f(p,j) C(p+j, 2j) / (2(j+1)(j+2)(2j+3)) of the u_j recurrence."""
    f = (p - j) * (p + j + 1) * (
        (2 * j + 3) ** 2 * p * p - (2 * j * j + 8 * j + 7) * p - (j + 1) * (j + 2)
    )
    return Fraction(f * comb(p + j, 2 * j), 2 * (j + 1) * (j + 2) * (2 * j + 3))


@lru_cache(maxsize=128)
def lemma_u_values(p: int) -> tuple[Fraction, ...]:
    """u_0, ..., u_p from u_0 = p(p-1)/2 and (j+2)u_j + 2(2j+1)u_(j+1) = step(j)."""
    require_odd_prime(p)
    values = [Fraction(p * (p - 1), 2)]
    for j in range(p):
        values.append((lemma_u_step(j, p) - (j + 2) * values[j]) / (2 * (2 * j + 1)))
    logger.debug("Generated u_0..u_%d for p = %d", p, p)
    return tuple(values)

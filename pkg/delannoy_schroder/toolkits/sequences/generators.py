"""Definitional sums for every sequence family.

These are the reference computations; `recurrences` provides the fast paths
and both are cross-checked in tests and identity checks.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from delannoy_schroder.core.exact.errors import ConsistencyError
from delannoy_schroder.core.exact.integers import (
    catalan,
    exact_quotient,
    narayana,
)
from delannoy_schroder.core.exact.primes import require_odd_prime
from delannoy_schroder.core.poly.dense import IntPolynomial, RatPolynomial

# Largest n for which trinomial_T also expands (x^2 + bx + c)^n
TRINOMIAL_ORACLE_MAX_N = 30


def _binomial_weighted(weights: dict[int, int], n_plus: int) -> list[int]:
    """Coefficients of sum_k weights[k] x^(k - shift) (x+1)^(n_plus - k), shift 0."""
    coeffs = [0] * (n_plus + 1)
    for k, a in weights.items():
        if not a:
            continue
        for t in range(n_plus - k + 1):
            coeffs[k + t] += a * comb(n_plus - k, t)
    return coeffs


def delannoy_poly_squares(n: int) -> IntPolynomial:
    """sum_k C(n,k)^2 x^k (x+1)^(n-k)."""
    return IntPolynomial(
        _binomial_weighted({k: comb(n, k) ** 2 for k in range(n + 1)}, n)
    )


def delannoy_poly_cross(n: int) -> IntPolynomial:
    """sum_k C(n,k) C(n+k,k) x^k."""
    return IntPolynomial(comb(n, k) * comb(n + k, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def delannoy_poly(n: int) -> IntPolynomial:
    """D_n(x), built both ways and cross-checked."""
    if n < 0:
        raise ValueError(f"delannoy_poly requires n >= 0, got {n}")
    squares, cross = delannoy_poly_squares(n), delannoy_poly_cross(n)
    if squares != cross:
        raise ConsistencyError(f"Two constructions of D_{n}(x) disagree")
    return cross


@lru_cache(maxsize=None)
def schroder_little_poly(n: int) -> IntPolynomial:
    """s_n(x) = sum_k N(n,k) x^(k-1) (x+1)^(n-k)."""
    if n < 1:
        raise ValueError(f"schroder_little_poly requires n >= 1, got {n}")
    # x^(k-1) (x+1)^(n-k) = x^j (x+1)^(n-1-j) with j = k - 1
    weights = {k - 1: narayana(n, k) for k in range(1, n + 1)}
    return IntPolynomial(_binomial_weighted(weights, n - 1))


@lru_cache(maxsize=None)
def schroder_large_poly(n: int) -> IntPolynomial:
    """S_n(x) = sum_k C(n+k, 2k) C_k x^k, checked against sum_k C(n,k) C(n+k,k) x^k / (k+1)."""
    if n < 0:
        raise ValueError(f"schroder_large_poly requires n >= 0, got {n}")
    central = IntPolynomial(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))
    cross = IntPolynomial(
        exact_quotient(comb(n, k) * comb(n + k, k), k + 1) for k in range(n + 1)
    )
    if central != cross:
        raise ConsistencyError(f"Two constructions of S_{n}(x) disagree")
    return central


def w_coeff(n: int, k: int) -> int:
    """w(n, k) = C(n-1, k-1) C(n+k, k-1) / k, zero outside 1 <= k <= n."""
    if n < 1:
        raise ValueError(f"w_coeff requires n >= 1, got {n}")
    if k < 1 or k > n:
        return 0
    return exact_quotient(comb(n - 1, k - 1) * comb(n + k, k - 1), k)


@lru_cache(maxsize=None)
def big_w_poly(n: int) -> IntPolynomial:
    """W_n(x) = sum_k w(n,k) C_(k-1) x^(k-1)."""
    if n < 1:
        raise ValueError(f"big_w_poly requires n >= 1, got {n}")
    return IntPolynomial(w_coeff(n, k) * catalan(k - 1) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def small_w_poly(n: int) -> IntPolynomial:
    """w_n(x) = sum_k w(n,k) x^(k-1)."""
    if n < 1:
        raise ValueError(f"small_w_poly requires n >= 1, got {n}")
    return IntPolynomial(w_coeff(n, k) for k in range(1, n + 1))


def trinomial_T(n: int, b: int, c: int) -> int:
    """Generalized central trinomial coefficient: [x^n] (x^2 + bx + c)^n."""
    if n < 0:
        raise ValueError(f"trinomial_T requires n >= 0, got {n}")
    value = sum(
        comb(n, 2 * k) * comb(2 * k, k) * b ** (n - 2 * k) * c**k
        for k in range(n // 2 + 1)
    )
    if n <= TRINOMIAL_ORACLE_MAX_N:
        expanded = IntPolynomial((c, b, 1)) ** n
        if expanded.coefficient(n) != value:
            raise ConsistencyError(f"T_{n}({b},{c}) disagrees with the expansion")
    return value


def motzkin_M(n: int, b: int, c: int) -> int:
    """Generalized Motzkin number sum_k C(n, 2k) C_k b^(n-2k) c^k."""
    if n < 0:
        raise ValueError(f"motzkin_M requires n >= 0, got {n}")
    return sum(
        comb(n, 2 * k) * catalan(k) * b ** (n - 2 * k) * c**k
        for k in range(n // 2 + 1)
    )


@lru_cache(maxsize=None)
def r_poly(k: int) -> RatPolynomial:
    """R_k(x) = sum_l C(k,l) C(k+l,l) x^l / (2l - 1), checked against the C(k+l,2l) C(2l,l) form."""
    if k < 0:
        raise ValueError(f"r_poly requires k >= 0, got {k}")
    first = RatPolynomial(
        Fraction(comb(k, j) * comb(k + j, j), 2 * j - 1) for j in range(k + 1)
    )
    second = RatPolynomial(
        Fraction(comb(k + j, 2 * j) * comb(2 * j, j), 2 * j - 1) for j in range(k + 1)
    )
    if first != second:
        raise ConsistencyError(f"Two constructions of R_{k}(x) disagree")
    return first


@lru_cache(maxsize=None)
def delannoy_r_prefix(n: int) -> RatPolynomial:
    """sum_{k < n} D_k(x) R_k(x)."""
    if n <= 0:
        return RatPolynomial()
    return delannoy_r_prefix(n - 1) + delannoy_poly(n - 1) * r_poly(n - 1)


def f_poly(n: int) -> RatPolynomial:
    """f_n(x) = (1/n) sum_{k < n} D_k(x) R_k(x); integrality is not assumed."""
    if n < 1:
        raise ValueError(f"f_poly requires n >= 1, got {n}")
    return delannoy_r_prefix(n) / n


def delannoy_general(m: int, n: int) -> int:
    """D_{m,n} = sum_k C(m,k) C(n,k) 2^k."""
    if m < 0 or n < 0:
        raise ValueError(f"delannoy_general requires m, n >= 0, got ({m}, {n})")
    return sum(comb(m, k) * comb(n, k) * 2**k for k in range(min(m, n) + 1))


def u_lemma25(j: int, p: int) -> Fraction:
    """u_j = sum_{j < k <= p} (k-1) C(k+j, 2j) (2j + 1 - j(j+1)(2k+1) / (k(k+1)))."""
    require_odd_prime(p)
    if not 0 <= j <= p:
        raise ValueError(f"u_lemma25 requires 0 <= j <= p, got j={j}, p={p}")
    return sum(
        (
            (k - 1)
            * comb(k + j, 2 * j)
            * (2 * j + 1 - Fraction(j * (j + 1) * (2 * k + 1), k * (k + 1)))
            for k in range(j + 1, p + 1)
        ),
        Fraction(0),
    )

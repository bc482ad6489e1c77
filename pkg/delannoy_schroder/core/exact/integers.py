"""Exact integer sequences: binomials, Catalan and Narayana numbers, Euler numbers, Lucas sequences."""

from math import comb

from delannoy_schroder.core.exact.errors import NonDivisibleError

# E_0, E_2, E_4, ... grown on demand
_EULER_EVEN: list[int] = [1]


def exact_quotient(numerator: int, denominator: int) -> int:
    """Integer quotient that must leave no remainder."""
    q, r = divmod(numerator, denominator)
    if r:
        raise NonDivisibleError(f"{denominator} does not divide {numerator}")
    return q


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial upper index must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan(n: int) -> int:
    return exact_quotient(comb(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n,k) C(n,k-1) / n, zero outside 1 <= k <= n."""
    if n < 1:
        raise ValueError(f"narayana requires n >= 1, got {n}")
    if k < 1 or k > n:
        return 0
    return exact_quotient(comb(n, k) * comb(n, k - 1), n)


def euler_number(n: int) -> int:
    """Euler (secant) numbers: E_odd = 0 and sum_j C(2m, 2j) E_2j = 0 for m >= 1."""
    if n < 0:
        raise ValueError(f"euler_number requires n >= 0, got {n}")
    if n % 2:
        return 0
    m = n // 2
    while len(_EULER_EVEN) <= m:
        r = len(_EULER_EVEN)
        _EULER_EVEN.append(
            -sum(comb(2 * r, 2 * j) * e for j, e in enumerate(_EULER_EVEN))
        )
    return _EULER_EVEN[m]


def lucas_u(n: int, a: int, b: int) -> int:
    """Lucas sequence u_n(A, B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}."""
    if n < 0:
        raise ValueError(f"lucas_u requires n >= 0, got {n}")
    prev, cur = 0, 1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, a * cur - b * prev
    return cur


def lucas_u_mod(n: int, a: int, b: int, modulus: int) -> int:
    """u_n(A, B) mod m in O(log n) steps by doubling the companion matrix [[A, -B], [1, 0]]."""
    if n < 0:
        raise ValueError(f"lucas_u_mod requires n >= 0, got {n}")
    # Matrix power M^n = [[u_{n+1}, -B u_n], [u_n, -B u_{n-1}]]
    r00, r01, r10, r11 = 1, 0, 0, 1
    m00, m01, m10, m11 = a % modulus, -b % modulus, 1, 0
    while n:
        if n & 1:
            r00, r01, r10, r11 = (
                (r00 * m00 + r01 * m10) % modulus,
                (r00 * m01 + r01 * m11) % modulus,
                (r10 * m00 + r11 * m10) % modulus,
                (r10 * m01 + r11 * m11) % modulus,
            )
        m00, m01, m10, m11 = (
            (m00 * m00 + m01 * m10) % modulus,
            (m00 * m01 + m01 * m11) % modulus,
            (m10 * m00 + m11 * m10) % modulus,
            (m10 * m01 + m11 * m11) % modulus,
        )
        n >>= 1
    return r10 % modulus


def fibonacci(n: int) -> int:
    return lucas_u(n, 1, -1)


def lucas_number(n: int) -> int:
    """Lucas numbers L_0 = 2, L_1 = 1, L_{n+1} = L_n + L_{n-1}."""
    if n < 0:
        raise ValueError(f"lucas_number requires n >= 0, got {n}")
    prev, cur = 2, 1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return cur

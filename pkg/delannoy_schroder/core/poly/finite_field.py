"""Polynomials over the p-element field and an irreducibility test."""

import logging

import numpy as np

from delannoy_schroder.core.exact.primes import require_odd_prime
from delannoy_schroder.core.poly.dense import IntPolynomial

logger = logging.getLogger(__name__)

# Products of two residues summed over a convolution must fit in int64
MAX_FIELD_PRIME = 2**20


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _monic(a: np.ndarray, p: int) -> np.ndarray:
    inv = pow(int(a[-1]), -1, p)
    return a * inv % p


def _rem(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    """Remainder of a modulo the monic polynomial f."""
    a = a.copy()
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i - df : i + 1] = (a[i - df : i + 1] - c * f) % p
    return _trim(a[:df] if len(a) > df else a)


def _mulmod(a: np.ndarray, b: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    if not a.size or not b.size:
        return a[:0]
    return _rem(np.convolve(a, b) % p, f, p)


def _powmod(base: np.ndarray, e: int, f: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Monic gcd of a and b."""
    a, b = _trim(a % p), _trim(b % p)
    while b.size:
        a, b = b, _rem(a, _monic(b, p), p)
    return _monic(a, p) if a.size else a


def _sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] += a
    out[: len(b)] -= b
    return _trim(out % p)


class FpPolynomial:
    """Polynomial over the field with p elements; ascending coefficients in [0, p)."""

    __slots__ = ("prime", "coefficients")

    def __init__(self, prime: int, coefficients):
        require_odd_prime(prime)
        if prime >= MAX_FIELD_PRIME:
            raise ValueError(f"Field prime {prime} exceeds {MAX_FIELD_PRIME}")
        coeffs = tuple(int(c) % prime for c in coefficients)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError(
                f"Leading coefficient vanishes modulo {prime}: {list(coefficients)}"
            )
        self.prime = prime
        self.coefficients = coeffs

    @classmethod
    def from_int_polynomial(cls, poly: IntPolynomial, prime: int) -> "FpPolynomial":
        return cls(prime, poly.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpPolynomial):
            return NotImplemented
        return self.prime == other.prime and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.prime, self.coefficients))

    def __repr__(self) -> str:
        return f"FpPolynomial({self.prime}, {list(self.coefficients)})"


def fp_irreducible(f: FpPolynomial) -> bool:
    """Irreducibility over the p-element field.

    f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1 for every
    1 <= i <= n/2. This is equivalent to Rabin's criterion and exits on the
    smallest factor degree.
    """
    if f.degree < 1:
        raise ValueError(f"Irreducibility needs degree >= 1, got {f}")
    if f.degree == 1:
        return True
    p = f.prime
    monic = _monic(f.as_array(), p)
    x = np.array([0, 1], dtype=np.int64)
    h = x
    for i in range(1, f.degree // 2 + 1):
        h = _powmod(h, p, monic, p)
        g = _gcd(_sub(h, x, p), monic, p)
        if len(g) > 1:
            logger.debug(
                "Degree %d polynomial has a factor of degree dividing %d mod %d",
                f.degree,
                i,
                p,
            )
            return False
    return True

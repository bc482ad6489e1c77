"""p-adic valuations, modular reduction of rationals, and valuation-tracked residues.

A `TrackedResidue` stands for a p-adic integer known only modulo a power of p.
It is stored as p^valuation * unit, where unit is known modulo p^precision, so
the value itself is known modulo p^(valuation + precision). An exact zero
cannot be told apart from a value that vanishes at the known precision, so a
zero residue keeps only its absolute precision.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from delannoy_schroder.core.exact.errors import (
    NotInvertibleError,
    PrecisionExhaustedError,
)
from delannoy_schroder.core.exact.primes import require_odd_prime

INF = math.inf


def int_valuation(n: int, p: int) -> int | float:
    """Exponent of p in the integer n, +inf for n = 0."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: Fraction | int, p: int) -> int | float:
    """ord_p(numerator) - ord_p(denominator), +inf for zero."""
    q = Fraction(q)
    if q == 0:
        return INF
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def residue(q: Fraction | int, modulus: int) -> int:
    """Reduce a rational modulo an integer, in [0, modulus)."""
    q = Fraction(q)
    try:
        inverse = pow(q.denominator, -1, modulus)
    except ValueError as e:
        raise NotInvertibleError(
            f"Denominator of {q} is not invertible modulo {modulus}"
        ) from e
    return q.numerator * inverse % modulus


@dataclass(frozen=True, slots=True)
class TrackedResidue:
    """p-adic integer p^valuation * unit with the unit known modulo p^precision."""

    prime: int
    valuation: int | float
    unit: int
    precision: int

    def __post_init__(self):
        if self.valuation == INF:
            if self.unit != 0:
                raise ValueError("A zero residue must have unit 0")
        elif self.valuation < 0:
            raise NotInvertibleError(
                f"Valuation {self.valuation} is negative: not a {self.prime}-adic integer"
            )
        elif self.unit % self.prime == 0:
            raise ValueError(f"Unit {self.unit} is divisible by {self.prime}")
        if self.precision < 1:
            raise PrecisionExhaustedError(
                f"Precision {self.precision} left for a residue modulo {self.prime}"
            )

    @classmethod
    def from_residue(cls, r: int, p: int, absolute: int) -> "TrackedResidue":
        """Value known modulo p^absolute."""
        if absolute < 1:
            raise PrecisionExhaustedError(
                f"Absolute precision {absolute} is below 1 for prime {p}"
            )
        r %= p**absolute
        if r == 0:
            return cls(p, INF, 0, absolute)
        v = int_valuation(r, p)
        return cls(p, v, r // p**v, absolute - v)

    @classmethod
    def from_int(cls, n: int, p: int, precision: int) -> "TrackedResidue":
        """Exact integer with its unit kept to relative precision `precision`."""
        if n == 0:
            return cls(p, INF, 0, precision)
        v = int_valuation(n, p)
        return cls(p, v, (n // p**v) % p**precision, precision)

    @classmethod
    def from_rational(cls, q: Fraction, p: int, precision: int) -> "TrackedResidue":
        """p-integral rational with its unit kept to relative precision `precision`."""
        q = Fraction(q)
        if q == 0:
            return cls(p, INF, 0, precision)
        v = padic_valuation(q, p)
        unit = q / Fraction(p) ** v
        return cls(p, v, residue(unit, p**precision), precision)

    @property
    def is_zero(self) -> bool:
        return self.valuation == INF

    @property
    def absolute_precision(self) -> int:
        if self.is_zero:
            return self.precision
        return self.valuation + self.precision

    def to_int(self) -> int:
        """Representative in [0, p^absolute_precision)."""
        if self.is_zero:
            return 0
        return self.prime**self.valuation * self.unit

    def residue(self, k: int) -> int:
        """The value modulo p^k; k may not exceed the known precision."""
        if k > self.absolute_precision:
            raise PrecisionExhaustedError(
                f"Residue modulo {self.prime}^{k} requested, only {self.absolute_precision} digits known"
            )
        return self.to_int() % self.prime**k

    def _check_prime(self, other: "TrackedResidue"):
        if other.prime != self.prime:
            raise ValueError(f"Mixed primes {self.prime} and {other.prime}")

    def __add__(self, other):
        if isinstance(other, int):
            absolute = self.absolute_precision
            return TrackedResidue.from_residue(
                self.to_int() + other, self.prime, absolute
            )
        if not isinstance(other, TrackedResidue):
            return NotImplemented
        self._check_prime(other)
        absolute = min(self.absolute_precision, other.absolute_precision)
        return TrackedResidue.from_residue(
            self.to_int() + other.to_int(), self.prime, absolute
        )

    __radd__ = __add__

    def __neg__(self):
        return TrackedResidue.from_residue(
            -self.to_int(), self.prime, self.absolute_precision
        )

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TrackedResidue(self.prime, INF, 0, self.absolute_precision)
            absolute = self.absolute_precision + int_valuation(other, self.prime)
            return TrackedResidue.from_residue(
                self.to_int() * other, self.prime, absolute
            )
        if not isinstance(other, TrackedResidue):
            return NotImplemented
        self._check_prime(other)
        if self.is_zero and other.is_zero:
            absolute = self.precision + other.precision
        elif self.is_zero:
            absolute = self.precision + other.valuation
        elif other.is_zero:
            absolute = other.precision + self.valuation
        else:
            absolute = (
                self.valuation
                + other.valuation
                + min(self.precision, other.precision)
            )
        return TrackedResidue.from_residue(
            self.to_int() * other.to_int(), self.prime, absolute
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise NotInvertibleError("Division by zero")
            other = TrackedResidue.from_int(
                other, self.prime, max(self.absolute_precision, 1)
            )
        if not isinstance(other, TrackedResidue):
            return NotImplemented
        self._check_prime(other)
        if other.is_zero:
            raise NotInvertibleError(
                f"Division by a residue that vanishes modulo {self.prime}^{other.precision}"
            )
        v = other.valuation
        if not self.is_zero and self.valuation < v:
            raise NotInvertibleError(
                f"{self.prime}^{self.valuation} * unit is not divisible by {self.prime}^{v}"
            )
        absolute = self.absolute_precision - v
        if not self.is_zero:
            absolute = min(absolute, self.valuation - v + other.precision)
        if absolute < 1:
            raise PrecisionExhaustedError(
                f"Division by {self.prime}^{v} leaves no known digits"
            )
        modulus = self.prime**absolute
        quotient = self.to_int() // self.prime**v * pow(other.unit, -1, modulus)
        return TrackedResidue.from_residue(quotient, self.prime, absolute)

    def __str__(self) -> str:
        return f"{self.to_int()} (mod {self.prime}^{self.absolute_precision})"


def fermat_quotient(z: int, p: int, precision: int = 1) -> TrackedResidue:
    """q_p(z) = (z^(p-1) - 1) / p known modulo p^precision."""
    require_odd_prime(p)
    if z % p == 0:
        raise NotInvertibleError(f"Fermat quotient undefined: {p} divides {z}")
    power = pow(z, p - 1, p ** (precision + 1))
    return TrackedResidue.from_residue((power - 1) // p, p, precision)


def binomial_residue(n: int, k: int, p: int, precision: int) -> TrackedResidue:
    """C(n, k) as a tracked residue with relative precision `precision`, in O(k) steps."""
    if k < 0 or k > n:
        return TrackedResidue(p, INF, 0, precision)
    modulus = p**precision
    valuation = 0
    numerator, denominator = 1, 1
    for i in range(1, k + 1):
        top, bottom = n - k + i, i
        while top % p == 0:
            top //= p
            valuation += 1
        while bottom % p == 0:
            bottom //= p
            valuation -= 1
        numerator = numerator * top % modulus
        denominator = denominator * bottom % modulus
    unit = numerator * pow(denominator, -1, modulus) % modulus
    return TrackedResidue(p, valuation, unit, precision)

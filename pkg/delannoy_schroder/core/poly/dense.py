"""Dense univariate polynomials over the integers and the rationals.

Coefficients are stored in ascending degree with trailing zeros trimmed, so the
zero polynomial has no coefficients and degree -1. Values are immutable and
hashable.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import comb, lcm

from delannoy_schroder.core.exact.errors import NonDivisibleError
from delannoy_schroder.core.exact.padic import residue


def _mul_int(a: tuple, b: tuple) -> list:
    """Schoolbook product of two integer coefficient tuples."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


class _DensePolynomial:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [self._coerce(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    def coefficient(self, k: int):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def _promote(self, other):
        """Result class and the other operand's coefficients, or None if unsupported."""
        if isinstance(other, _DensePolynomial):
            if isinstance(self, RatPolynomial) or isinstance(other, RatPolynomial):
                return RatPolynomial, other.coefficients
            return IntPolynomial, other.coefficients
        if isinstance(other, int):
            return type(self), (other,)
        if isinstance(other, Fraction):
            return RatPolynomial, (other,)
        return None

    def __add__(self, other):
        promoted = self._promote(other)
        if promoted is None:
            return NotImplemented
        cls, coeffs = promoted
        return cls(
            a + b for a, b in zip_longest(self.coefficients, coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coefficients)

    def __sub__(self, other):
        promoted = self._promote(other)
        if promoted is None:
            return NotImplemented
        cls, coeffs = promoted
        return cls(
            a - b for a, b in zip_longest(self.coefficients, coeffs, fillvalue=0)
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        promoted = self._promote(other)
        if promoted is None:
            return NotImplemented
        cls, coeffs = promoted
        if len(coeffs) == 1:
            return cls(c * coeffs[0] for c in self.coefficients)
        if cls is IntPolynomial:
            return IntPolynomial(_mul_int(self.coefficients, coeffs))
        # Clear denominators, multiply over the integers, divide once
        a_den = lcm(*(Fraction(c).denominator for c in self.coefficients), 1)
        b_den = lcm(*(Fraction(c).denominator for c in coeffs), 1)
        a_int = tuple(int(c * a_den) for c in self.coefficients)
        b_int = tuple(int(c * b_den) for c in coeffs)
        den = a_den * b_den
        return RatPolynomial(Fraction(c, den) for c in _mul_int(a_int, b_int))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x0):
        """Horner evaluation."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x0 + c
        return acc

    def residue_at(self, x0: int, modulus: int) -> int:
        """Value at x0 modulo `modulus`; rational coefficients are reduced first."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x0 + residue(c, modulus)) % modulus
        return acc

    def truncate(self, degree: int):
        """Drop every term of degree above `degree`."""
        return type(self)(self.coefficients[: degree + 1])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coefficients)})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mag_str = str(mag) if Fraction(mag).denominator == 1 else f"({mag})"
            if k == 0:
                body = mag_str
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag_str}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f"{sign}{body}"
        return out


class IntPolynomial(_DensePolynomial):
    """Polynomial with integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"IntPolynomial coefficient must be an integer, got {c!r}")

    def exact_div_scalar(self, d: int) -> "IntPolynomial":
        out = []
        for c in self.coefficients:
            q, r = divmod(c, d)
            if r:
                raise NonDivisibleError(f"{d} does not divide coefficient {c}")
            out.append(q)
        return IntPolynomial(out)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coefficients)


class RatPolynomial(_DensePolynomial):
    """Polynomial with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    @property
    def common_denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coefficients), 1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_int_polynomial(self) -> IntPolynomial:
        if not self.is_integral():
            raise NonDivisibleError(
                f"Polynomial has a non-integral coefficient: {self}"
            )
        return IntPolynomial(c.numerator for c in self.coefficients)

    def __truediv__(self, d):
        if isinstance(d, (int, Fraction)):
            return RatPolynomial(c / d for c in self.coefficients)
        return NotImplemented


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_eval(pq: _DensePolynomial, x0) -> Fraction:
    return Fraction(pq(Fraction(x0)))


@lru_cache(maxsize=4096)
def monomial_binomial(i: int, j: int) -> IntPolynomial:
    """x^i (x+1)^j."""
    return IntPolynomial([0] * i + [comb(j, t) for t in range(j + 1)])


def compose_x_xplus1(pq: _DensePolynomial) -> _DensePolynomial:
    """P(x(x+1)) expanded in x, by Horner steps in y = x^2 + x."""
    acc: list = []
    for c in reversed(pq.coefficients):
        shifted = [0] * (len(acc) + 2)
        for i, a in enumerate(acc):
            shifted[i + 1] += a
            shifted[i + 2] += a
        if not shifted:
            shifted = [0]
        shifted[0] += c
        acc = shifted
    return type(pq)(acc)


def decompose_x_xplus1(pq: _DensePolynomial) -> _DensePolynomial:
    """Q with Q(x(x+1)) = P, or NonDivisibleError if P is not a polynomial in x(x+1)."""
    remainder = pq
    out = {}
    while remainder:
        if remainder.degree % 2:
            raise NonDivisibleError(f"{pq} is not a polynomial in x(x+1)")
        d = remainder.degree // 2
        lead = remainder.leading_coefficient
        out[d] = lead
        remainder = remainder - monomial_binomial(d, d) * lead
    size = max(out, default=-1) + 1
    return type(pq)(out.get(k, 0) for k in range(size))


def exact_poly_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """q with a = b q over the integers, or NonDivisibleError."""
    if not b:
        raise ZeroDivisionError("Division by the zero polynomial")
    if not a:
        return IntPolynomial()
    db, lb = b.degree, b.leading_coefficient
    if a.degree < db:
        raise NonDivisibleError(f"{b} does not divide {a}")
    rem = list(a.coefficients)
    quotient = [0] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            raise NonDivisibleError(f"{b} does not divide {a}")
        quotient[i] = q
        for j, bj in enumerate(b.coefficients):
            rem[i + j] -= q * bj
    if any(rem[:db]):
        raise NonDivisibleError(f"{b} does not divide {a}")
    return IntPolynomial(quotient)

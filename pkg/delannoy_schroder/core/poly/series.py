"""Power series in y with polynomial coefficients in x, truncated at a fixed order."""

from collections.abc import Iterable
from itertools import zip_longest

from delannoy_schroder.core.poly.dense import IntPolynomial, RatPolynomial


class PolySeries:
    """sum_{i <= order} c_i(x) y^i; every term of y-degree above `order` is discarded.

    With `x_degree_cap` set, coefficients are also reduced modulo x^(cap+1),
    which is a ring homomorphism and keeps identities checkable at lower cost.
    """

    __slots__ = ("coefficients", "order", "x_degree_cap")

    def __init__(
        self,
        coefficients: Iterable,
        order: int,
        x_degree_cap: int | None = None,
    ):
        coeffs = []
        for c in list(coefficients)[: order + 1]:
            if isinstance(c, IntPolynomial):
                c = c.to_rational()
            elif not isinstance(c, RatPolynomial):
                c = RatPolynomial.constant(c)
            if x_degree_cap is not None:
                c = c.truncate(x_degree_cap)
            coeffs.append(c)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = tuple(coeffs)
        self.order = order
        self.x_degree_cap = x_degree_cap

    def _like(self, coefficients) -> "PolySeries":
        return PolySeries(coefficients, self.order, self.x_degree_cap)

    def _check_compatible(self, other: "PolySeries"):
        if other.order != self.order or other.x_degree_cap != self.x_degree_cap:
            raise ValueError(
                f"Incompatible truncations: ({self.order}, {self.x_degree_cap}) "
                f"vs ({other.order}, {other.x_degree_cap})"
            )

    @classmethod
    def from_terms(cls, terms: dict[int, object], order: int, x_degree_cap=None):
        """Series from a sparse {y-power: coefficient} map."""
        size = max(terms, default=-1) + 1
        return cls(
            (terms.get(i, 0) for i in range(size)), order, x_degree_cap
        )

    def coefficient(self, i: int) -> RatPolynomial:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return RatPolynomial()

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._check_compatible(other)
        return self._like(
            a + b
            for a, b in zip_longest(
                self.coefficients, other.coefficients, fillvalue=RatPolynomial()
            )
        )

    def __neg__(self):
        return self._like(-c for c in self.coefficients)

    def __sub__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolySeries):
            self._check_compatible(other)
            out = [RatPolynomial() for _ in range(self.order + 1)]
            for i, a in enumerate(self.coefficients):
                if not a:
                    continue
                for j, b in enumerate(other.coefficients[: self.order + 1 - i]):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return self._like(out)
        return self._like(c * other for c in self.coefficients)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return (
            self.coefficients == other.coefficients
            and self.order == other.order
            and self.x_degree_cap == other.x_degree_cap
        )

    def __hash__(self) -> int:
        return hash((self.coefficients, self.order, self.x_degree_cap))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"({c})y^{i}" for i, c in enumerate(self.coefficients) if c
        )
        return f"PolySeries({terms or '0'}, order={self.order})"

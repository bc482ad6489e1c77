import math
import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from delannoy_schroder.core.exact.errors import (
    NotInvertibleError,
    NotPrimeError,
    PrecisionExhaustedError,
)
from delannoy_schroder.core.exact.padic import (
    TrackedResidue,
    binomial_residue,
    fermat_quotient,
    int_valuation,
    padic_valuation,
    residue,
)


class TestPadic(unittest.TestCase):
    """Tests for delannoy_schroder.core.exact.padic module."""

    def test_padic_valuation_examples(self):
        """Test valuations of rationals, including +inf for zero."""
        self.assertEqual(padic_valuation(Fraction(18, 5), 3), 2)
        self.assertEqual(padic_valuation(Fraction(7, 9), 3), -2)
        self.assertEqual(padic_valuation(0, 7), math.inf)
        self.assertEqual(int_valuation(48, 2), 4)

    def test_residue_of_rational(self):
        """Test reduction of a rational with an invertible denominator."""
        self.assertEqual(residue(Fraction(1, 2), 5), 3)
        self.assertEqual(residue(Fraction(-1, 4), 5), 1)
        self.assertEqual(residue(-7, 5), 3)

    def test_residue_rejects_non_invertible_denominator(self):
        """Test that p in the denominator raises NotInvertibleError."""
        with self.assertRaises(NotInvertibleError):
            residue(Fraction(1, 5), 25)

    def test_fermat_quotient_examples(self):
        """Test q_3(2), q_5(2) and q_5(3)."""
        self.assertEqual(fermat_quotient(2, 3).residue(1), 1)
        self.assertEqual(fermat_quotient(2, 5).residue(1), 3)
        self.assertEqual(fermat_quotient(3, 5).residue(1), 1)

    def test_fermat_quotient_higher_precision(self):
        """Test q_p(z) modulo p^2 against the exact quotient."""
        exact = (2**12 - 1) // 13
        self.assertEqual(fermat_quotient(2, 13, precision=2).residue(2), exact % 169)

    def test_fermat_quotient_wieferich_prime_vanishes(self):
        """Test that q_1093(2) vanishes modulo 1093."""
        self.assertTrue(fermat_quotient(2, 1093).is_zero)

    def test_fermat_quotient_errors(self):
        """Test that p | z and composite p raise."""
        with self.assertRaises(NotInvertibleError):
            fermat_quotient(10, 5)
        with self.assertRaises(NotPrimeError):
            fermat_quotient(2, 9)

    def test_tracked_residue_from_int(self):
        """Test valuation, unit and absolute precision of a tracked integer."""
        r = TrackedResidue.from_int(50, 5, 2)
        self.assertEqual((r.valuation, r.unit, r.precision), (2, 2, 2))
        self.assertEqual(r.absolute_precision, 4)
        self.assertEqual(r.to_int(), 50)
        self.assertEqual(r.residue(2), 0)

    def test_tracked_residue_division_by_p(self):
        """Test that dividing a multiple of p by p keeps the quotient exact."""
        r = TrackedResidue.from_int(10, 5, 3) / 5
        self.assertEqual(r.residue(3), 2)

    def test_tracked_residue_division_requires_divisibility(self):
        """Test that dividing a unit by p raises NotInvertibleError."""
        with self.assertRaises(NotInvertibleError):
            TrackedResidue.from_int(3, 5, 2) / 5

    def test_tracked_residue_precision_is_enforced(self):
        """Test that asking for more digits than known raises PrecisionExhaustedError."""
        r = TrackedResidue.from_residue(7, 5, 2)
        with self.assertRaises(PrecisionExhaustedError):
            r.residue(3)

    def test_binomial_residue(self):
        """Test binomial_residue against the exact binomial."""
        self.assertEqual(binomial_residue(10, 5, 5, 2).residue(2), 252 % 25)
        r = binomial_residue(10, 5, 3, 2)
        self.assertEqual(r.valuation, 2)
        self.assertEqual(r.to_int() % 3**4, 252 % 3**4)

    @given(
        st.integers(min_value=-10**9, max_value=10**9),
        st.integers(min_value=-10**9, max_value=10**9),
        st.sampled_from([3, 5, 7, 11]),
    )
    def test_tracked_arithmetic_matches_integers(self, a, b, p):
        """Test that sums and products of tracked integers agree modulo p^3."""
        ra, rb = TrackedResidue.from_int(a, p, 3), TrackedResidue.from_int(b, p, 3)
        modulus = p**3
        self.assertEqual((ra + rb).residue(3), (a + b) % modulus)
        self.assertEqual((ra - rb).residue(3), (a - b) % modulus)
        self.assertEqual((ra * rb).residue(3), (a * b) % modulus)


if __name__ == "__main__":
    unittest.main()

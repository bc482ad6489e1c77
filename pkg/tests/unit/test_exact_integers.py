import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from delannoy_schroder.core.exact.errors import NonDivisibleError
from delannoy_schroder.core.exact.integers import (
    binomial,
    catalan,
    euler_number,
    exact_quotient,
    fibonacci,
    lucas_number,
    lucas_u,
    lucas_u_mod,
    narayana,
)


class TestIntegers(unittest.TestCase):
    """Tests for delannoy_schroder.core.exact.integers module."""

    def test_binomial_examples(self):
        """Test binomial on the empty product, a generic value and k > n."""
        self.assertEqual(binomial(0, 0), 1)
        self.assertEqual(binomial(9, 4), 126)
        self.assertEqual(binomial(4, 7), 0)
        self.assertEqual(binomial(4, -1), 0)

    def test_binomial_rejects_negative_n(self):
        """Test that binomial raises ValueError for a negative upper index."""
        with self.assertRaises(ValueError):
            binomial(-1, 0)

    def test_binomial_pascal(self):
        """Test Pascal's rule for 1 <= n <= 60."""
        for n in range(1, 61):
            for k in range(n + 1):
                self.assertEqual(
                    binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)
                )

    def test_catalan_examples(self):
        """Test the first Catalan numbers."""
        self.assertEqual([catalan(n) for n in range(6)], [1, 1, 2, 5, 14, 42])

    def test_narayana_examples(self):
        """Test narayana values inside and outside 1 <= k <= n."""
        self.assertEqual(narayana(2, 2), 1)
        self.assertEqual(narayana(3, 2), 3)
        self.assertEqual(narayana(5, 0), 0)

    def test_narayana_rows_sum_to_catalan(self):
        """Test that each Narayana row sums to the Catalan number."""
        for n in range(1, 41):
            self.assertEqual(sum(narayana(n, k) for k in range(1, n + 1)), catalan(n))

    def test_euler_numbers(self):
        """Test the secant numbers E_0..E_8 and the vanishing odd ones."""
        self.assertEqual([euler_number(n) for n in range(0, 9, 2)], [1, -1, 5, -61, 1385])
        self.assertEqual(euler_number(1), 0)
        self.assertEqual(euler_number(7), 0)

    def test_lucas_u_examples(self):
        """Test the seed, a Fibonacci value and u_3(3, 9) = 0."""
        self.assertEqual(lucas_u(0, 3, 1), 0)
        self.assertEqual(lucas_u(5, 1, -1), 5)
        self.assertEqual(lucas_u(3, 3, 9), 0)

    def test_lucas_numbers(self):
        """Test L_0..L_4 and L_n = 2F_(n+1) - F_n."""
        self.assertEqual([lucas_number(n) for n in range(5)], [2, 1, 3, 4, 7])
        for n in range(1, 60):
            self.assertEqual(lucas_number(n), 2 * fibonacci(n + 1) - fibonacci(n))

    def test_exact_quotient_rejects_remainder(self):
        """Test that exact_quotient raises NonDivisibleError on a remainder."""
        self.assertEqual(exact_quotient(12, 4), 3)
        with self.assertRaises(NonDivisibleError):
            exact_quotient(7, 2)

    @settings(max_examples=200)
    @given(
        st.integers(min_value=0, max_value=300),
        st.integers(min_value=-20, max_value=20),
        st.integers(min_value=-20, max_value=20),
        st.integers(min_value=2, max_value=10**6),
    )
    def test_lucas_u_mod_matches_iteration(self, n, a, b, modulus):
        """Test that fast doubling agrees with the plain recurrence modulo m."""
        self.assertEqual(lucas_u_mod(n, a, b, modulus), lucas_u(n, a, b) % modulus)


if __name__ == "__main__":
    unittest.main()

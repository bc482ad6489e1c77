import unittest

from hypothesis import given
from hypothesis import strategies as st

from delannoy_schroder.core.exact.errors import NotPrimeError
from delannoy_schroder.core.exact.primes import (
    MAX_PRIME,
    is_prime,
    legendre_symbol,
    odd_primes,
    prime_divisors,
    require_odd_prime,
)


def _trial_division(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


class TestPrimes(unittest.TestCase):
    """Tests for delannoy_schroder.core.exact.primes module."""

    def test_is_prime_matches_trial_division(self):
        """Test Miller-Rabin against trial division below 5000."""
        for n in range(5000):
            self.assertEqual(is_prime(n), _trial_division(n), n)

    def test_is_prime_large_values(self):
        """Test a Mersenne prime, a Carmichael number and a semiprime near 2^64."""
        self.assertTrue(is_prime(2**61 - 1))
        self.assertFalse(is_prime(561))
        self.assertFalse(is_prime(4294967291 * 4294967279))

    def test_is_prime_rejects_values_past_bound(self):
        """Test that primality above 2^64 raises NotPrimeError."""
        with self.assertRaises(NotPrimeError):
            is_prime(MAX_PRIME + 1)

    def test_require_odd_prime(self):
        """Test that require_odd_prime passes odd primes and rejects 2 and composites."""
        self.assertEqual(require_odd_prime(101), 101)
        for bad in (2, 9, 1, 0, -3):
            with self.assertRaises(NotPrimeError):
                require_odd_prime(bad)

    def test_odd_primes_range(self):
        """Test that odd_primes is half-open and skips 2."""
        self.assertEqual(odd_primes(2, 20), [3, 5, 7, 11, 13, 17, 19])
        self.assertEqual(odd_primes(5, 7), [5])
        self.assertEqual(odd_primes(0, 3), [])

    def test_prime_divisors(self):
        """Test distinct prime divisors in increasing order."""
        self.assertEqual(prime_divisors(360), [2, 3, 5])
        self.assertEqual(prime_divisors(-49), [7])
        self.assertEqual(prime_divisors(1), [])

    def test_legendre_symbol_examples(self):
        """Test a residue, a non-residue and a multiple of p."""
        self.assertEqual(legendre_symbol(2, 7), 1)
        self.assertEqual(legendre_symbol(2, 3), -1)
        self.assertEqual(legendre_symbol(6, 3), 0)
        self.assertEqual(legendre_symbol(-1, 5), 1)
        self.assertEqual(legendre_symbol(-1, 7), -1)

    def test_legendre_symbol_rejects_composite(self):
        """Test that a composite modulus raises NotPrimeError."""
        with self.assertRaises(NotPrimeError):
            legendre_symbol(2, 15)

    @given(st.integers(min_value=-10**6, max_value=10**6), st.sampled_from([3, 5, 7, 11, 13, 97]))
    def test_legendre_symbol_counts_square_roots(self, a, p):
        """Test that 1 + (a|p) is the number of square roots of a modulo p."""
        roots = sum(1 for r in range(p) if (r * r - a) % p == 0)
        self.assertEqual(1 + legendre_symbol(a, p), roots)


if __name__ == "__main__":
    unittest.main()

import unittest

from delannoy_schroder.core.exact.errors import NotPrimeError
from delannoy_schroder.core.exact.primes import odd_primes
from delannoy_schroder.toolkits.sequences.enums import SequenceFamily
from delannoy_schroder.toolkits.sequences.generators import (
    big_w_poly,
    delannoy_poly,
    schroder_large_poly,
    schroder_little_poly,
    small_w_poly,
)
from delannoy_schroder.toolkits.sequences.mod_stream import ModStream, mod_stream

DEFINITIONS = {
    SequenceFamily.DELANNOY_POLY: (0, delannoy_poly),
    SequenceFamily.LITTLE_SCHRODER_POLY: (1, schroder_little_poly),
    SequenceFamily.LARGE_SCHRODER_POLY: (0, schroder_large_poly),
    SequenceFamily.SMALL_W: (1, small_w_poly),
    SequenceFamily.BIG_W: (1, big_w_poly),
}


class TestModStream(unittest.TestCase):
    """Tests for delannoy_schroder.toolkits.sequences.mod_stream module."""

    def test_delannoy_at_one_mod_27(self):
        """Test D_0(1), D_1(1), D_2(1) modulo 27."""
        values = mod_stream(SequenceFamily.DELANNOY_POLY, 1, 3, 3, 2)
        self.assertEqual([v.residue(3) for v in values], [1, 3, 13])

    def test_little_schroder_at_one_mod_27(self):
        """Test s_1(1), s_2(1), s_3(1) modulo 27."""
        values = mod_stream(SequenceFamily.LITTLE_SCHRODER_POLY, 1, 3, 3, 3)
        self.assertEqual([v.residue(3) for v in values], [1, 3, 11])

    def test_delannoy_at_zero(self):
        """Test that D_n(0) = 1 modulo 5."""
        values = mod_stream(SequenceFamily.DELANNOY_POLY, 0, 5, 1, 4)
        self.assertEqual([v.residue(1) for v in values], [1] * 5)

    def test_streams_match_exact_values(self):
        """Test every streamable family against exact values over two prime periods."""
        for p in odd_primes(3, 50):
            for family, (first, definition) in DEFINITIONS.items():
                for x0 in (1, -2, p + 3):
                    n_max = 2 * p - 1
                    values = mod_stream(family, x0, p, 2, n_max)
                    self.assertEqual(len(values), n_max - first + 1)
                    for n, v in enumerate(values, start=first):
                        self.assertEqual(
                            v.residue(2),
                            definition(n)(x0) % p**2,
                            (family.value, p, x0, n),
                        )

    def test_streams_past_two_periods(self):
        """Test streams running well past 2p, through divisors carrying p^2 and p^3."""
        for p, n_max in ((3, 28), (5, 26), (7, 30)):
            for family, (first, definition) in DEFINITIONS.items():
                for x0 in (1, -2):
                    values = mod_stream(family, x0, p, 2, n_max)
                    self.assertEqual(len(values), n_max - first + 1)
                    for n, v in enumerate(values, start=first):
                        self.assertEqual(
                            v.residue(2),
                            definition(n)(x0) % p**2,
                            (family.value, p, x0, n),
                        )

    def test_buffer_sums_valuations_past_two_periods(self):
        """Test that the buffer counts 9, 18 and 27 with their full 3-adic valuations."""
        # divisors m = 2..28: nine multiples of 3, three of 9, one of 27
        stream = ModStream(SequenceFamily.DELANNOY_POLY, 1, 3, 2, 28)
        self.assertEqual(stream.buffer, 13)
        self.assertEqual(stream.working_precision, 15)

    def test_buffer_counts_divisor_valuations(self):
        """Test the working precision for the Delannoy divisor n over 0..2p-1."""
        stream = ModStream(SequenceFamily.DELANNOY_POLY, 1, 5, 3, 9)
        self.assertEqual(stream.buffer, 1)
        self.assertEqual(stream.working_precision, 4)

    def test_rejects_unstreamable_family(self):
        """Test that families without a modular stream raise ValueError."""
        with self.assertRaises(ValueError):
            mod_stream(SequenceFamily.TRINOMIAL_T, 1, 5, 1, 4)

    def test_rejects_bad_prime_and_precision(self):
        """Test that composite p and precision 0 are refused."""
        with self.assertRaises(NotPrimeError):
            mod_stream(SequenceFamily.DELANNOY_POLY, 1, 9, 1, 4)
        with self.assertRaises(ValueError):
            mod_stream(SequenceFamily.DELANNOY_POLY, 1, 5, 0, 4)


if __name__ == "__main__":
    unittest.main()

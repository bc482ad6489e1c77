"""Enumerations for sequence families."""

from enum import Enum


class SequenceFamily(str, Enum):
    """Polynomial and integer families with a definitional and a recurrence path."""

    DELANNOY_POLY = "delannoy_poly"
    LITTLE_SCHRODER_POLY = "little_schroder_poly"
    LARGE_SCHRODER_POLY = "large_schroder_poly"
    BIG_W = "big_w"
    SMALL_W = "small_w"
    TRINOMIAL_T = "trinomial_t"
    MOTZKIN_M = "motzkin_m"
    R_POLY = "r_poly"
    F_POLY = "f_poly"
    DELANNOY_GENERAL = "delannoy_general"
    LEMMA_U = "lemma_u"


STREAMABLE_FAMILIES = {
    SequenceFamily.DELANNOY_POLY,
    SequenceFamily.LITTLE_SCHRODER_POLY,
    SequenceFamily.LARGE_SCHRODER_POLY,
    SequenceFamily.BIG_W,
    SequenceFamily.SMALL_W,
}

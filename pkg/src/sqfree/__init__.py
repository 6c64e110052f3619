"""Exact counting and entropy analysis for square-free words.

A word is square-free when no factor repeats twice in a row (no uu with
u nonempty).  This package enumerates and counts square-free words over
finite alphabets, recovers the counting polynomials in the alphabet
size, and computes entropy bounds, estimates and the closed-form
approximation for the growth rate of the language.
"""

from .counting import (
    CountRecord,
    CounterOverflowError,
    canonical_pattern_counts,
    classify_up_to,
    count_up_to,
    count_with_prefix,
    square_containing_count,
)
from .words import (
    Alphabet,
    SquareWitness,
    extension_count,
    extensions,
    is_square_free,
    is_stop_word,
    iter_square_free,
    stop_word_square_lengths,
    suffix_extension_is_square_free,
)

__version__ = "1.0.0"

__all__ = [
    "Alphabet",
    "SquareWitness",
    "CountRecord",
    "CounterOverflowError",
    "canonical_pattern_counts",
    "classify_up_to",
    "count_up_to",
    "count_with_prefix",
    "extension_count",
    "extensions",
    "is_square_free",
    "is_stop_word",
    "iter_square_free",
    "square_containing_count",
    "stop_word_square_lengths",
    "suffix_extension_is_square_free",
    "__version__",
]

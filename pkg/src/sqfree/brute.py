"""Generate-and-test reference counts.

Materializes every one of the x^n words (in chunks) as a numpy array
and tests each for squares by slice comparison over all (start, period)
pairs.  Hopelessly slower than the tree engine but with no shared
machinery, which is the point: the two must agree wherever both run.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20


def _word_matrix(x: int, n: int, lo: int, hi: int) -> np.ndarray:
    """Rows lo..hi-1 of the lexicographic list of all x^n words."""
    ids = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, n), dtype=np.int8)
    for pos in range(n):
        out[:, n - 1 - pos] = (ids // x**pos) % x
    return out


def _square_free_mask(words: np.ndarray) -> np.ndarray:
    m, n = words.shape
    mask = np.ones(m, dtype=bool)
    for p in range(1, n // 2 + 1):
        for s in range(0, n - 2 * p + 1):
            eq = (words[:, s : s + p] == words[:, s + p : s + 2 * p]).all(axis=1)
            mask &= ~eq
    return mask


def count_square_free(x: int, n: int, prefix: tuple[int, ...] = ()) -> int:
    """Number of square-free length-n words, optionally under a prefix."""
    if n == 0:
        return 1 if not prefix else 0
    if x == 0:
        return 0
    if len(prefix) > n:
        return 0
    # Words sharing a prefix form one contiguous id range.
    base = 0
    for c in prefix:
        base = base * x + c
    lo = base * x ** (n - len(prefix))
    hi = (base + 1) * x ** (n - len(prefix))
    total = 0
    for start in range(lo, hi, _CHUNK):
        words = _word_matrix(x, n, start, min(start + _CHUNK, hi))
        total += int(_square_free_mask(words).sum())
    return total


def square_free_words(x: int, n: int) -> np.ndarray:
    """All square-free length-n words as an array of letter rows."""
    if n == 0:
        return np.empty((1, 0), dtype=np.int8)
    parts = []
    for start in range(0, x**n, _CHUNK):
        words = _word_matrix(x, n, start, min(start + _CHUNK, x**n))
        parts.append(words[_square_free_mask(words)])
    return np.concatenate(parts) if parts else np.empty((0, n), dtype=np.int8)


def extension_class_counts(x: int, n: int) -> list[int]:
    """Reference tally of words by number of square-free extensions.

    Returns a list over classes 0..x.  Tests every extension of every
    square-free word with the full slice-comparison check.
    """
    words = square_free_words(x, n)
    m = len(words)
    classes = np.zeros(m, dtype=np.int64)
    for c in range(x):
        extended = np.concatenate(
            [words, np.full((m, 1), c, dtype=np.int8)], axis=1
        )
        classes += _square_free_mask(extended)
    return [int((classes == e).sum()) for e in range(x + 1)]

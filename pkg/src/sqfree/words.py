"""Letters, words, and the square-freeness predicate.

Words are tuples (or any sequence) of small non-negative integers; an
alphabet of size x uses the letters 0..x-1.  A *square* is a factor of
the form uu with u nonempty; a word is square-free when no factor is a
square.  Besides the full-word check this module provides the
incremental suffix check used by the enumeration engine: if w is
square-free, w+c can only acquire a square ending at the new last
position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

Word = Sequence[int]

#: Letters rendered for humans: a..z, then l26, l27, ...
_ASCII_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet; letters are exactly the integers 0..size-1."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"alphabet size must be >= 0, got {self.size}")

    @property
    def letters(self) -> range:
        return range(self.size)

    def validate(self, word: Word) -> None:
        for c in word:
            if not 0 <= c < self.size:
                raise ValueError(f"letter {c} outside alphabet of size {self.size}")


@dataclass(frozen=True)
class SquareWitness:
    """Location of a square uu inside a word.

    ``start`` is the index of the square's first letter and
    ``half_length`` the length p of u, so the square occupies
    ``letters[start : start + 2*p]``.
    """

    start: int
    half_length: int


def is_square_free(word: Word) -> tuple[bool, Optional[SquareWitness]]:
    """Full square-freeness check with a deterministic witness.

    Returns ``(True, None)`` if no factor of ``word`` is a square,
    otherwise ``(False, witness)`` for the leftmost square; among squares
    with the same start, the one with the smallest half-length wins.
    """
    n = len(word)
    for start in range(n - 1):
        max_p = (n - start) // 2
        for p in range(1, max_p + 1):
            if _halves_equal(word, start, p):
                return False, SquareWitness(start=start, half_length=p)
    return True, None


def _halves_equal(word: Word, start: int, p: int) -> bool:
    for i in range(p):
        if word[start + i] != word[start + p + i]:
            return False
    return True


def suffix_extension_is_square_free(word: Word, c: int) -> bool:
    """Whether w+c is square-free, assuming w itself is.

    Only squares ending at the new last position can appear, so it
    suffices to scan half-lengths p = 1..(len(w)+1)//2 and compare the
    trailing 2p letters of w+c.  If w is not square-free the result is
    meaningless (but well-defined and crash-free).
    """
    n = len(word)
    for p in range(1, (n + 1) // 2 + 1):
        # The new letter sits at index n; square condition is
        # word[n-p] == c plus letterwise equality of the rest.
        if word[n - p] != c:
            continue
        for t in range(1, p):
            if word[n - 2 * p + t] != word[n - p + t]:
                break
        else:
            return False
    return True


def extensions(word: Word, alphabet: Alphabet) -> list[int]:
    """The letters c for which word+c stays square-free."""
    return [c for c in alphabet.letters if suffix_extension_is_square_free(word, c)]


def extension_count(word: Word, alphabet: Alphabet) -> int:
    """How many single-letter extensions of a square-free word stay square-free."""
    return len(extensions(word, alphabet))


def is_stop_word(word: Word, alphabet: Alphabet) -> bool:
    """True when every single-letter extension creates a square."""
    return extension_count(word, alphabet) == 0


def stop_word_square_lengths(word: Word, alphabet: Alphabet) -> dict[int, int]:
    """For each letter, the half-length of the shortest square created.

    Only defined for stop-words (no square-free extension at all);
    raises ValueError otherwise.
    """
    n = len(word)
    result: dict[int, int] = {}
    for c in alphabet.letters:
        shortest = None
        for p in range(1, (n + 1) // 2 + 1):
            if word[n - p] != c:
                continue
            if all(word[n - 2 * p + t] == word[n - p + t] for t in range(1, p)):
                shortest = p
                break
        if shortest is None:
            raise ValueError(
                f"{format_word(word)!r} is not a stop-word: "
                f"letter {letter_name(c)} extends it square-free"
            )
        result[c] = shortest
    return result


def iter_square_free(alphabet: Alphabet, length: int, prefix: Word = ()) -> Iterator[tuple[int, ...]]:
    """Yield every square-free word of the given length, in lex order.

    ``prefix`` restricts the enumeration to words starting with it; the
    prefix must itself be square-free.
    """
    ok, witness = is_square_free(prefix)
    if not ok:
        raise ValueError(f"prefix contains a square at {witness}")
    if len(prefix) > length:
        return

    def walk(word: list[int]) -> Iterator[tuple[int, ...]]:
        if len(word) == length:
            yield tuple(word)
            return
        for c in alphabet.letters:
            if suffix_extension_is_square_free(word, c):
                word.append(c)
                yield from walk(word)
                word.pop()

    yield from walk(list(prefix))


def letter_name(c: int) -> str:
    """Render letter c as a, b, c, ...; beyond z as l<i>."""
    if 0 <= c < len(_ASCII_LETTERS):
        return _ASCII_LETTERS[c]
    return f"l{c}"


def parse_word(text: str) -> tuple[int, ...]:
    """Inverse of format_word for the a..z range (comma form for l<i>)."""
    if "," in text or text.startswith("l"):
        return tuple(int(part.lstrip("l")) for part in text.split(",") if part)
    return tuple(_ASCII_LETTERS.index(ch) for ch in text)


def format_word(word: Word) -> str:
    if all(0 <= c < len(_ASCII_LETTERS) for c in word):
        return "".join(_ASCII_LETTERS[c] for c in word)
    return ",".join(letter_name(c) for c in word)

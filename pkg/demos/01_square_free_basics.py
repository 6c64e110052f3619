"""Square-freeness basics: the predicate, witnesses, and stop-words.

A square is a block repeated twice in a row ("abab", "caca", "ee").
A word is square-free when it contains no square at all.  Run me:

    python demos/01_square_free_basics.py
"""

from sqfree import (
    Alphabet,
    extension_count,
    extensions,
    is_square_free,
    is_stop_word,
    iter_square_free,
    stop_word_square_lengths,
)
from sqfree.words import format_word, parse_word

a3 = Alphabet(3)

print("== the predicate ==")
for text in ("aba", "abab", "abcacbabcb", "abcabc", "aa"):
    word = parse_word(text)
    ok, witness = is_square_free(word)
    if ok:
        print(f"  {text!r}: square-free")
    else:
        square = text[witness.start : witness.start + 2 * witness.half_length]
        print(f"  {text!r}: square {square!r} at {witness.start}, half-length {witness.half_length}")

print()
print("== extensions ==")
# Appending the final letter always squares, so at most x-1 of the x
# letters can extend a nonempty square-free word.
for text in ("a", "ab", "aba", "abc"):
    word = parse_word(text)
    exts = extensions(word, a3)
    print(f"  {text!r} extends by {[format_word((c,)) for c in exts]}")

print()
print("== stop-words ==")
# Some words cannot be extended at all.  The shortest ones over three
# letters have length 7; appending any letter makes squares of
# half-lengths 1, 2 and 4.
stoppers = [w for w in iter_square_free(a3, 7) if is_stop_word(w, a3)]
print(f"  shortest stop-words ({len(stoppers)} of them):")
for w in stoppers:
    lengths = stop_word_square_lengths(w, a3)
    pretty = {format_word((c,)): p for c, p in lengths.items()}
    print(f"    {format_word(w)}  -> square half-lengths {pretty}")

print()
print("== extension classes by length ==")
for n in range(1, 8):
    tally = [0, 0, 0]
    for w in iter_square_free(a3, n):
        tally[extension_count(w, a3)] += 1
    print(f"  n={n}: {tally[0]} dead ends, {tally[1]} single, {tally[2]} double")

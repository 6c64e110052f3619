"""Exact census of square-free words: totals, extension classes,
symmetry modes, and counts under a fixed prefix.

    python demos/02_counting_census.py
"""

import math
import time

from sqfree import count_up_to, count_with_prefix, square_containing_count
from sqfree.counting import canonical_pattern_counts, totals_up_to

print("== three letters, lengths 0..30 ==")
t0 = time.time()
records = count_up_to(3, 30)
print(f"   (counted in {time.time() - t0:.2f}s)")
print("   n  omega      ratio      ext0/ext1/ext2")
for rec in records:
    ratio = ""
    if rec.n >= 1 and records[rec.n - 1].total:
        ratio = f"{math.log(rec.total / records[rec.n - 1].total):.6f}"
    print(f"  {rec.n:2d}  {rec.total:<9d}  {ratio:9s}  {rec.ext[0]}/{rec.ext[1]}/{rec.ext[2]}")

print()
print("== the two symmetry reductions agree ==")
# default: fix the first two letters, multiply by x(x-1);
# canonical: count letter patterns, weight by falling factorials.
for x in (3, 4, 5):
    a = [r.total for r in count_up_to(x, 10, symmetry="prefix")]
    b = [r.total for r in count_up_to(x, 10, symmetry="canonical")]
    assert a == b
    print(f"  x={x}: omega_10 = {a[10]}")

print()
print("== canonical patterns make big alphabets cheap ==")
# omega_12(12) is ~3e12 words, but only a few thousand letter patterns.
t0 = time.time()
pats = canonical_pattern_counts(12, 12)
total_patterns = int(pats.sum())
omega = sum(math.perm(12, k) * int(pats[12, k]) for k in range(13))
print(f"  {total_patterns} patterns in {time.time() - t0:.2f}s -> omega_12(12) = {omega}")

print()
print("== prefix counting ==")
# every square-free word of length >= 2 starts with one of x(x-1)
# letter pairs, each continuing in equally many ways
n = 15
total = totals_up_to(3, n)[n]
under_ab = count_with_prefix(3, (0, 1), n)
print(f"  omega_{n}(3) = {total} = 6 * {under_ab}")

print()
print("== square-containing complement ==")
for n in (2, 5, 10):
    plus = square_containing_count(3, n)
    print(f"  n={n}: {plus} of {3**n} words contain a square")

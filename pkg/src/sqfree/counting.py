"""Exact counting of square-free words by length.

Two symmetry reductions are available:

* ``prefix`` (default): fix the first two letters as 0,1 and multiply
  by x(x-1); every square-free word of length >= 2 has exactly one
  representative with that prefix under letter permutation of the
  leading pair.
* ``canonical``: enumerate only words whose letters appear in
  increasing order of first occurrence and weight a word using k
  distinct letters by the falling factorial x(x-1)...(x-k+1).  This
  cuts the tree by up to x! and is what makes large alphabets
  tractable; it also yields the exactly-k-letters counts directly.

Work is split at a configurable depth into independent prefix subtrees
that run on a thread pool (the jitted kernels release the GIL); the
per-subtree tallies are summed in lexicographic prefix order, so
results are identical for any worker count.  Subtree tallies are int64
and checked for wraparound; aggregation happens in Python integers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .words import Alphabet, format_word, is_square_free, suffix_extension_is_square_free

ENGINE_VERSION = "1.0"

#: Refuse jobs whose trivial count bound x(x-1)^(n-1) exceeds this.
COUNTER_LIMIT = 2**128


class CountError(Exception):
    """Base class for counting-engine failures."""


class CounterOverflowError(CountError):
    """A count (or its a-priori bound) exceeded the supported width."""


def _check_counter_bound(x: int, n_max: int) -> None:
    if x >= 2 and n_max >= 1:
        bound = x * (x - 1) ** (n_max - 1)
        if bound > COUNTER_LIMIT:
            raise CounterOverflowError(
                f"refusing x={x}, n={n_max}: trivial bound x(x-1)^(n-1) "
                f"exceeds the {COUNTER_LIMIT.bit_length() - 1}-bit counter"
            )


@dataclass(frozen=True)
class CountRecord:
    """Exact census of square-free words of one length.

    ``ext[e]`` counts the words with exactly e square-free single-letter
    extensions; e ranges over 0..x (the alphabet size), and the class
    e = x occurs only for the empty word.
    """

    x: int
    n: int
    total: int
    ext: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.ext) != self.total:
            raise ValueError(
                f"inconsistent record (x={self.x}, n={self.n}): "
                f"total {self.total} != sum of classes {sum(self.ext)}"
            )


def _default_workers(workers: int | None) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return workers


def _python_extensions(word: tuple[int, ...], limit: int) -> list[int]:
    return [c for c in range(limit) if suffix_extension_is_square_free(word, c)]


def _run_tasks(tasks, run_one, workers: int):
    """Run kernel tasks, returning results in submission order."""
    if workers <= 1 or len(tasks) <= 1:
        return [run_one(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_one, t) for t in tasks]
        return [f.result() for f in futures]


def _check_wraparound(arr: np.ndarray, x: int, n_max: int) -> None:
    if (arr < 0).any():
        raise CounterOverflowError(
            f"int64 subtree counter wrapped around for x={x}, n={n_max}"
        )


# ---------------------------------------------------------------------------
# prefix-symmetry engine


def _prefix_tree_counts(
    x: int,
    n_max: int,
    root: tuple[int, ...],
    *,
    classes: bool,
    workers: int,
    split_depth: int,
) -> np.ndarray:
    """Tally the subtree below ``root``: counts[n][e] or counts[n].

    Splits at ``split_depth`` letters (at least len(root)) and fans the
    subtrees out over the thread pool.
    """
    d0 = len(root)
    d_split = min(max(split_depth, d0), n_max)
    shape = (n_max + 1, x + 1) if classes else (n_max + 1,)
    agg = np.zeros(shape, dtype=object)  # Python-int cells, overflow-free

    # Shallow part in pure Python: tally nodes above the split depth and
    # collect the subtree roots sitting exactly at it.
    roots: list[tuple[int, ...]] = []
    stack = [root]
    while stack:
        word = stack.pop()
        d = len(word)
        if d == d_split:
            roots.append(word)
            continue
        ext = _python_extensions(word, x)
        if classes:
            agg[d][len(ext)] += 1
        else:
            agg[d] += 1
        for c in reversed(ext):
            stack.append(word + (c,))
    roots.reverse()  # stack order is reverse-lexicographic
    roots.sort()

    kernel = _kernels.count_subtree if classes else _kernels.count_subtree_totals

    def run_one(rt: tuple[int, ...]) -> np.ndarray:
        buf = np.zeros(max(n_max, 1), np.int64)
        buf[: len(rt)] = rt
        counts = np.zeros(shape, np.int64)
        kernel(buf, len(rt), x, n_max, counts)
        _check_wraparound(counts, x, n_max)
        return counts

    for counts in _run_tasks(roots, run_one, workers):
        agg += counts
    return agg


# ---------------------------------------------------------------------------
# canonical (first-occurrence) engine


def canonical_pattern_counts(
    n_max: int,
    k_cap: int,
    *,
    classes: bool = False,
    workers: int | None = None,
    split_depth: int = 6,
) -> np.ndarray:
    """Count square-free letter patterns by (length, letters used).

    A pattern is a word whose letters appear in increasing order of
    first occurrence (0 before 1 before 2, ...), using at most ``k_cap``
    distinct letters.  Returns ``P[n, k]`` = number of square-free
    patterns of length n using exactly k letters, or with
    ``classes=True`` the refinement ``P[n, k, u]`` where u counts the
    used letters that still extend the pattern square-free.

    Every square-free word over an alphabet of x >= k letters arises
    from exactly one pattern by an injective relabeling, in
    x(x-1)...(x-k+1) ways; sums of that form recover all per-alphabet
    counts (see :func:`count_up_to`).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if k_cap < 0:
        raise ValueError(f"k_cap must be >= 0, got {k_cap}")
    workers = _default_workers(workers)
    d_split = min(max(split_depth, 0), n_max)
    shape = (
        (n_max + 1, k_cap + 1, k_cap + 1) if classes else (n_max + 1, k_cap + 1)
    )
    agg = np.zeros(shape, dtype=object)

    roots: list[tuple[tuple[int, ...], int]] = []
    stack: list[tuple[tuple[int, ...], int]] = [((), 0)]
    while stack:
        word, k = stack.pop()
        d = len(word)
        if d == d_split:
            roots.append((word, k))
            continue
        used_ext = _python_extensions(word, k)
        if classes:
            agg[d][k][len(used_ext)] += 1
        else:
            agg[d][k] += 1
        nxt = [(c, k) for c in used_ext]
        if k < k_cap:
            nxt.append((k, k + 1))
        for c, kn in reversed(nxt):
            stack.append((word + (c,), kn))
    roots.sort()

    kernel = (
        _kernels.count_subtree_canonical
        if classes
        else _kernels.count_subtree_canonical_totals
    )

    def run_one(task: tuple[tuple[int, ...], int]) -> np.ndarray:
        rt, k0 = task
        buf = np.zeros(max(n_max, 1), np.int64)
        buf[: len(rt)] = rt
        kshape = (
            (n_max + 1, k_cap + 1, k_cap + 1) if classes else (n_max + 1, k_cap + 1)
        )
        counts = np.zeros(kshape, np.int64)
        kernel(buf, len(rt), k0, k_cap, n_max, counts)
        _check_wraparound(counts, k_cap, n_max)
        return counts

    for counts in _run_tasks(roots, run_one, workers):
        agg += counts
    return agg


def _records_from_patterns(x: int, n_max: int, patterns: np.ndarray) -> list[CountRecord]:
    # patterns[n, k, u] with u = still-extendable used letters; a word in
    # an x-letter alphabet additionally has x-k fresh extensions.
    ff = [math.perm(x, k) for k in range(min(x, n_max) + 2)]
    records = []
    for n in range(n_max + 1):
        ext = [0] * (x + 1)
        for k in range(min(x, n) + 1):
            for u in range(k + 1):
                cnt = patterns[n, k, u]
                if cnt:
                    ext[u + x - k] += ff[k] * int(cnt)
        records.append(
            CountRecord(x=x, n=n, total=sum(ext), ext=tuple(ext))
        )
    return records


# ---------------------------------------------------------------------------
# public counting API


def count_up_to(
    x: int,
    n_max: int,
    *,
    symmetry: str = "prefix",
    workers: int | None = None,
    split_depth: int = 6,
) -> list[CountRecord]:
    """Exact counts of square-free words for every length 0..n_max.

    Records include the extension-class tallies; results are identical
    for any worker count.  Raises :class:`CounterOverflowError` for
    (x, n_max) whose trivial bound exceeds the supported counter width.
    """
    if x < 0:
        raise ValueError(f"alphabet size must be >= 0, got {x}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if symmetry not in ("prefix", "canonical"):
        raise ValueError(f"unknown symmetry mode {symmetry!r}")
    workers = _default_workers(workers)
    _check_counter_bound(x, n_max)

    if symmetry == "canonical":
        patterns = canonical_pattern_counts(
            n_max,
            min(x, n_max),
            classes=True,
            workers=workers,
            split_depth=split_depth,
        )
        return _records_from_patterns(x, n_max, patterns)

    records = []
    # Length 0 and 1 by hand: the empty word extends by any of the x
    # letters, a single letter by any of the other x-1.
    ext0 = [0] * (x + 1)
    ext0[x] = 1
    records.append(CountRecord(x=x, n=0, total=1, ext=tuple(ext0)))
    if n_max >= 1:
        ext1 = [0] * (x + 1)
        if x >= 1:
            ext1[x - 1] = x
        records.append(CountRecord(x=x, n=1, total=x, ext=tuple(ext1)))
    if n_max >= 2:
        if x < 2:
            zero = tuple([0] * (x + 1))
            for n in range(2, n_max + 1):
                records.append(CountRecord(x=x, n=n, total=0, ext=zero))
        else:
            counts = _prefix_tree_counts(
                x, n_max, (0, 1), classes=True, workers=workers, split_depth=split_depth
            )
            mult = x * (x - 1)
            for n in range(2, n_max + 1):
                ext = tuple(mult * int(counts[n][e]) for e in range(x + 1))
                records.append(CountRecord(x=x, n=n, total=sum(ext), ext=ext))
    return records


def totals_up_to(
    x: int,
    n_max: int,
    *,
    symmetry: str = "canonical",
    workers: int | None = None,
    split_depth: int = 6,
) -> list[int]:
    """Totals-only variant of :func:`count_up_to`.

    Uses the leaf-skipping kernels (no extension classes), which is the
    cheapest way to a full ω column; entropy work wants exactly this.
    """
    if x < 0:
        raise ValueError(f"alphabet size must be >= 0, got {x}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if symmetry not in ("prefix", "canonical"):
        raise ValueError(f"unknown symmetry mode {symmetry!r}")
    workers = _default_workers(workers)
    _check_counter_bound(x, n_max)

    if symmetry == "canonical":
        patterns = canonical_pattern_counts(
            n_max, min(x, n_max), workers=workers, split_depth=split_depth
        )
        ff = [math.perm(x, k) for k in range(min(x, n_max) + 1)]
        return [
            sum(ff[k] * int(patterns[n, k]) for k in range(min(x, n) + 1))
            for n in range(n_max + 1)
        ]

    totals = [1] + [x] * (1 if n_max >= 1 else 0)
    if n_max >= 2:
        if x < 2:
            totals += [0] * (n_max - 1)
        else:
            counts = _prefix_tree_counts(
                x, n_max, (0, 1), classes=False, workers=workers, split_depth=split_depth
            )
            totals += [x * (x - 1) * int(counts[n]) for n in range(2, n_max + 1)]
    return totals


def classify_up_to(
    x: int,
    n_max: int,
    *,
    symmetry: str = "prefix",
    workers: int | None = None,
    split_depth: int = 6,
) -> list[CountRecord]:
    """Alias of :func:`count_up_to`; records always carry class tallies."""
    return count_up_to(
        x, n_max, symmetry=symmetry, workers=workers, split_depth=split_depth
    )


def count_with_prefix(
    x: int,
    prefix: tuple[int, ...],
    n: int,
    *,
    workers: int | None = None,
    split_depth: int = 6,
) -> int:
    """Exact number of square-free length-n words starting with ``prefix``."""
    if x < 0:
        raise ValueError(f"alphabet size must be >= 0, got {x}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prefix = tuple(prefix)
    Alphabet(x).validate(prefix)
    ok, witness = is_square_free(prefix)
    if not ok:
        raise ValueError(
            f"prefix {format_word(prefix)!r} contains a square "
            f"(start {witness.start}, half-length {witness.half_length})"
        )
    workers = _default_workers(workers)
    _check_counter_bound(x, n)
    if len(prefix) > n:
        return 0
    if len(prefix) == n:
        return 1
    if x == 0:
        return 0
    counts = _prefix_tree_counts(
        x, n, prefix, classes=False, workers=workers, split_depth=split_depth
    )
    return int(counts[n])


def square_containing_count(
    x: int,
    n: int,
    *,
    workers: int | None = None,
    split_depth: int = 6,
    square_free_total: int | None = None,
) -> int:
    """How many length-n words contain a square: x^n minus the square-free."""
    if square_free_total is None:
        records = count_up_to(
            x, n, workers=workers, split_depth=split_depth
        )
        square_free_total = records[n].total
    return x**n - square_free_total

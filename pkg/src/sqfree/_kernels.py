"""Jitted depth-first counting kernels.

A node at depth d is the square-free word held in ``word[0:d]``.  For
each letter c the probe decides whether word+c stays square-free; this
yields both the node's extension class and its children, so one probe
per visited node drives the whole enumeration.

Probe strategy: a square of half-length p >= 1 ending at the appended
letter c needs word[d-p] == c, and for p >= 2 additionally
word[d-p-1] == word[d-1].  So p=1 always kills the current last letter,
and every deeper candidate is a position j = d-p where the letter PAIR
(word[j], word[j-1]) equals (c, word[d-1]).  The kernels maintain one
position stack per letter pair, pushed/popped alongside the DFS, and
the probe walks only the candidate positions of still-alive letters.

The ``*_totals`` variants skip probing at the deepest level and count
leaf children in bulk; the full variants probe every node to tally
extension classes.  Counts use int64; callers check non-negativity
(wraparound would surface as a negative cell) and aggregate in Python
integers.
"""

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _probe(word, d, limit, stride, stacks, tops):
    # Bit c of the result is set iff word[0:d] + c is square-free.
    okmask = (1 << limit) - 1
    if d == 0 or limit == 0:
        return okmask
    last = word[d - 1]
    if last < limit:
        okmask &= ~(1 << last)
    j_min = d - ((d + 1) >> 1)
    for c in range(limit):
        if not okmask & (1 << c):
            continue
        s = c * stride + last
        for idx in range(tops[s] - 1, -1, -1):
            j = stacks[s, idx]
            if j < j_min:
                break
            p = d - j
            is_square = True
            for t in range(1, p - 1):
                if word[j - p + t] != word[j + t]:
                    is_square = False
                    break
            if is_square:
                okmask &= ~(1 << c)
                break
    return okmask


@njit(cache=True, inline="always")
def _push(word, j, stride, stacks, tops):
    s = word[j] * stride + word[j - 1]
    stacks[s, tops[s]] = j
    tops[s] += 1
    return s


@njit(cache=True, nogil=True)
def count_subtree(word, d0, x, n_max, counts):
    """DFS below word[0:d0]; counts[n, e] += nodes at depth n in class e."""
    stride = x
    stacks = np.empty((stride * stride, n_max + 2), np.int64)
    tops = np.zeros(stride * stride, np.int64)
    children = np.empty((n_max + 1, x), np.int64)
    nchild = np.zeros(n_max + 1, np.int64)
    cursor = np.zeros(n_max + 1, np.int64)
    pushed = np.full(n_max + 1, -1, np.int64)
    for j in range(1, d0):
        _push(word, j, stride, stacks, tops)

    mask = _probe(word, d0, x, stride, stacks, tops)
    e = 0
    m = 0
    for c in range(x):
        if mask & (1 << c):
            children[d0, m] = c
            m += 1
            e += 1
    counts[d0, e] += 1
    if d0 >= n_max:
        return
    nchild[d0] = m

    d = d0
    while True:
        i = cursor[d]
        if i >= nchild[d]:
            if d == d0:
                break
            s = pushed[d]
            if s >= 0:
                tops[s] -= 1
            d -= 1
            continue
        cursor[d] = i + 1
        word[d] = children[d, i]
        dn = d + 1
        if dn >= 2:
            pushed[dn] = _push(word, dn - 1, stride, stacks, tops)
        else:
            pushed[dn] = -1
        mask = _probe(word, dn, x, stride, stacks, tops)
        e = 0
        m = 0
        for c in range(x):
            if mask & (1 << c):
                children[dn, m] = c
                m += 1
                e += 1
        counts[dn, e] += 1
        if dn < n_max:
            nchild[dn] = m
        else:
            nchild[dn] = 0
        cursor[dn] = 0
        d = dn


@njit(cache=True, nogil=True)
def count_subtree_totals(word, d0, x, n_max, counts):
    """Like count_subtree but tallies only counts[n]; leaves in bulk."""
    stride = x
    stacks = np.empty((stride * stride, n_max + 2), np.int64)
    tops = np.zeros(stride * stride, np.int64)
    children = np.empty((n_max + 1, x), np.int64)
    nchild = np.zeros(n_max + 1, np.int64)
    cursor = np.zeros(n_max + 1, np.int64)
    pushed = np.full(n_max + 1, -1, np.int64)
    for j in range(1, d0):
        _push(word, j, stride, stacks, tops)

    counts[d0] += 1
    if d0 >= n_max:
        return
    mask = _probe(word, d0, x, stride, stacks, tops)
    m = 0
    for c in range(x):
        if mask & (1 << c):
            children[d0, m] = c
            m += 1
    if d0 + 1 == n_max:
        counts[n_max] += m
        return
    nchild[d0] = m

    d = d0
    while True:
        i = cursor[d]
        if i >= nchild[d]:
            if d == d0:
                break
            s = pushed[d]
            if s >= 0:
                tops[s] -= 1
            d -= 1
            continue
        cursor[d] = i + 1
        word[d] = children[d, i]
        dn = d + 1
        counts[dn] += 1
        if dn >= 2:
            pushed[dn] = _push(word, dn - 1, stride, stacks, tops)
        else:
            pushed[dn] = -1
        mask = _probe(word, dn, x, stride, stacks, tops)
        m = 0
        for c in range(x):
            if mask & (1 << c):
                children[dn, m] = c
                m += 1
        if dn + 1 == n_max:
            counts[n_max] += m
            s = pushed[dn]
            if s >= 0:
                tops[s] -= 1
        else:
            nchild[dn] = m
            cursor[dn] = 0
            d = dn


@njit(cache=True, nogil=True)
def count_subtree_canonical(word, d0, k0, k_cap, n_max, counts):
    """DFS over first-occurrence-canonical words below word[0:d0].

    Canonical words use letters 0..k-1 in order of first occurrence; a
    fresh letter (always k, allowed while k < k_cap) can never close a
    square, so only the k used letters are probed.  counts[n, k, u] +=
    nodes at depth n using k letters of which u remain extendable.
    """
    stride = k_cap + 1
    stacks = np.empty((stride * stride, n_max + 2), np.int64)
    tops = np.zeros(stride * stride, np.int64)
    children = np.empty((n_max + 1, k_cap + 1), np.int64)
    nchild = np.zeros(n_max + 1, np.int64)
    cursor = np.zeros(n_max + 1, np.int64)
    kd = np.zeros(n_max + 1, np.int64)
    pushed = np.full(n_max + 1, -1, np.int64)
    for j in range(1, d0):
        _push(word, j, stride, stacks, tops)

    kd[d0] = k0
    mask = _probe(word, d0, k0, stride, stacks, tops)
    u = 0
    m = 0
    for c in range(k0):
        if mask & (1 << c):
            children[d0, m] = c
            m += 1
            u += 1
    counts[d0, k0, u] += 1
    if d0 >= n_max:
        return
    if k0 < k_cap:
        children[d0, m] = k0
        m += 1
    nchild[d0] = m

    d = d0
    while True:
        i = cursor[d]
        if i >= nchild[d]:
            if d == d0:
                break
            s = pushed[d]
            if s >= 0:
                tops[s] -= 1
            d -= 1
            continue
        cursor[d] = i + 1
        c = children[d, i]
        word[d] = c
        k = kd[d]
        if c == k:
            k += 1
        dn = d + 1
        kd[dn] = k
        if dn >= 2:
            pushed[dn] = _push(word, dn - 1, stride, stacks, tops)
        else:
            pushed[dn] = -1
        mask = _probe(word, dn, k, stride, stacks, tops)
        u = 0
        m = 0
        for cc in range(k):
            if mask & (1 << cc):
                children[dn, m] = cc
                m += 1
                u += 1
        counts[dn, k, u] += 1
        if dn < n_max:
            if k < k_cap:
                children[dn, m] = k
                m += 1
            nchild[dn] = m
        else:
            nchild[dn] = 0
        cursor[dn] = 0
        d = dn


@njit(cache=True, nogil=True)
def count_subtree_canonical_totals(word, d0, k0, k_cap, n_max, counts):
    """Like count_subtree_canonical but tallies counts[n, k]; leaves in bulk."""
    stride = k_cap + 1
    stacks = np.empty((stride * stride, n_max + 2), np.int64)
    tops = np.zeros(stride * stride, np.int64)
    children = np.empty((n_max + 1, k_cap + 1), np.int64)
    nchild = np.zeros(n_max + 1, np.int64)
    cursor = np.zeros(n_max + 1, np.int64)
    kd = np.zeros(n_max + 1, np.int64)
    pushed = np.full(n_max + 1, -1, np.int64)
    for j in range(1, d0):
        _push(word, j, stride, stacks, tops)

    kd[d0] = k0
    counts[d0, k0] += 1
    if d0 >= n_max:
        return
    mask = _probe(word, d0, k0, stride, stacks, tops)
    m = 0
    mu = 0
    for c in range(k0):
        if mask & (1 << c):
            children[d0, m] = c
            m += 1
            mu += 1
    if k0 < k_cap:
        children[d0, m] = k0
        m += 1
    if d0 + 1 == n_max:
        counts[n_max, k0] += mu
        if k0 < k_cap:
            counts[n_max, k0 + 1] += 1
        return
    nchild[d0] = m

    d = d0
    while True:
        i = cursor[d]
        if i >= nchild[d]:
            if d == d0:
                break
            s = pushed[d]
            if s >= 0:
                tops[s] -= 1
            d -= 1
            continue
        cursor[d] = i + 1
        c = children[d, i]
        word[d] = c
        k = kd[d]
        if c == k:
            k += 1
        dn = d + 1
        kd[dn] = k
        counts[dn, k] += 1
        if dn >= 2:
            pushed[dn] = _push(word, dn - 1, stride, stacks, tops)
        else:
            pushed[dn] = -1
        mask = _probe(word, dn, k, stride, stacks, tops)
        m = 0
        mu = 0
        for cc in range(k):
            if mask & (1 << cc):
                children[dn, m] = cc
                m += 1
                mu += 1
        if k < k_cap:
            children[dn, m] = k
            m += 1
        if dn + 1 == n_max:
            counts[n_max, k] += mu
            if k < k_cap:
                counts[n_max, k + 1] += 1
            s = pushed[dn]
            if s >= 0:
                tops[s] -= 1
        else:
            nchild[dn] = m
            cursor[dn] = 0
            d = dn

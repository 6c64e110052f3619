"""Exact integer polynomials behind the per-alphabet counts.

The number of square-free words of length n, seen as a function of the
alphabet size x, is a monic degree-n integer polynomial.  This module
recovers those polynomials exactly from counts at x = 0..n using the
inclusion-exclusion between "at most x letters" and "exactly x letters"
counts, checks the structural facts (monic, integral, divisibility by
x, x-1 and for n > 3 by x-2), and implements the truncated-recurrence
family that approximates them together with its generating-series
coefficients.

Everything here is arbitrary-precision; nothing in this module sits on
the counting hot path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import canonical_pattern_counts


class InconsistentCountsError(Exception):
    """Input counts violate a structural fact they must satisfy.

    Raised when an inversion or recovery postcondition fails; this
    signals a wrong count upstream, not a problem in this module.
    """


class IntegerPolynomial:
    """Dense integer polynomial, coefficients ascending in degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> float | int:
        # Degree of the zero polynomial is -infinity.
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntegerPolynomial(out)

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntegerPolynomial":
        if isinstance(other, int):
            return IntegerPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self and other else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divide_linear(self, root: int) -> "IntegerPolynomial":
        """Exact division by (x - root); requires root to be a root."""
        if self(root) != 0:
            raise ValueError(f"{root} is not a root, cannot divide by (x - {root})")
        d = len(self.coeffs) - 1
        quot = [0] * d
        acc = 0
        for i in range(d, 0, -1):  # synthetic division, high to low
            acc = self.coeffs[i] + acc * root
            quot[i - 1] = acc
        return IntegerPolynomial(quot)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                xs = "x" if e == 1 else f"x^{e}"
                term = xs if mag == 1 else f"{mag}{xs}"
            parts.append(sign + term)
        return "".join(parts)

    def factored_str(self) -> str:
        """Peel powers of x, (x-1), (x-2) and print the residue."""
        if not self:
            return "0"
        poly = self
        mults = []
        for root, label in ((0, "x"), (1, "(x-1)"), (2, "(x-2)")):
            m = 0
            while poly.degree >= 1 and poly(root) == 0:
                poly = poly.divide_linear(root)
                m += 1
            if m:
                mults.append(label + (f"^{m}" if m > 1 else ""))
        rest = str(poly)
        if mults and rest == "1":
            return "".join(mults)
        if mults:
            rest_fmt = rest if poly.degree < 1 else f"({rest})"
            return "".join(mults) + rest_fmt
        return rest

    def coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, ascending (wire format)."""
        return [str(c) for c in self.coeffs]


def psi_from_omega(omega_by_k, x: int) -> int:
    """Exactly-x-letters count from the at-most-k counts, k = 0..x.

    Alternating binomial inversion; the result must be non-negative and
    a multiple of x! (letter permutations act freely on words using all
    x letters), otherwise the input counts are inconsistent.
    """
    if len(omega_by_k) < x + 1:
        raise ValueError(f"need counts for k = 0..{x}, got {len(omega_by_k)}")
    psi = sum(
        (-1) ** (x - k) * math.comb(x, k) * omega_by_k[k] for k in range(x + 1)
    )
    if psi < 0:
        raise InconsistentCountsError(
            f"inversion gave negative value {psi} at x={x}: some input count is wrong"
        )
    if x >= 0 and psi % math.factorial(x) != 0:
        raise InconsistentCountsError(
            f"inversion result {psi} not divisible by {x}!: some input count is wrong"
        )
    return psi


def omega_from_psi(psi_by_k, x: int) -> int:
    """At-most-x-letters count from the exactly-k counts, k = 0..min(x,n)."""
    return sum(math.comb(x, k) * psi_by_k[k] for k in range(min(x, len(psi_by_k) - 1) + 1))


@dataclass
class PsiTable:
    """Exact counts of square-free words using exactly k letters.

    values[(n, k)] is defined for n <= n_max, k <= k_max; entries with
    k > n are zero and omitted.
    """

    n_max: int
    k_max: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def psi(self, n: int, k: int) -> int:
        if k > n:
            return 0
        return self.values[(n, k)]

    def omega(self, n: int, x: int) -> int:
        """ω_n(x) assembled from the table (requires x <= k_max or x > n)."""
        top = min(x, n)
        if top > self.k_max:
            raise ValueError(f"table only covers k <= {self.k_max}, need {top}")
        return sum(math.comb(x, k) * self.psi(n, k) for k in range(top + 1))


def psi_table_from_engine(
    n_max: int, k_max: int, *, workers: int | None = None, split_depth: int = 6
) -> PsiTable:
    """Count exactly-k-letter words directly via canonical patterns.

    Independent of :func:`psi_from_omega`: here each pattern with k
    letters stands for the k! words obtained by bijective relabeling.
    """
    cap = min(k_max, n_max)
    patterns = canonical_pattern_counts(
        n_max, cap, workers=workers, split_depth=split_depth
    )
    table = PsiTable(n_max=n_max, k_max=k_max)
    for n in range(n_max + 1):
        for k in range(min(n, cap) + 1):
            table.values[(n, k)] = math.factorial(k) * int(patterns[n, k])
    return table


def omega_alphabet_row(
    n: int, *, workers: int | None = None, split_depth: int = 6
) -> list[int]:
    """ω_n(k) for every alphabet size k = 0..n, from one pattern census."""
    patterns = canonical_pattern_counts(n, n, workers=workers, split_depth=split_depth)
    row = []
    for k in range(n + 1):
        row.append(
            sum(math.perm(k, j) * int(patterns[n, j]) for j in range(min(k, n) + 1))
        )
    return row


def _binomial_basis_polynomial(k: int) -> list[Fraction]:
    """Coefficients of C(x, k) = x(x-1)...(x-k+1)/k!, ascending."""
    coeffs = [Fraction(1)]
    for i in range(k):
        # multiply by (x - i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            nxt[e + 1] += c
            nxt[e] -= c * i
        coeffs = nxt
    kfact = math.factorial(k)
    return [c / kfact for c in coeffs]


def recover_P(n: int, omega_by_k) -> IntegerPolynomial:
    """The length-n counting polynomial from counts at x = 0..n.

    Works in the binomial basis: P(x) = sum_k psi_n(k) * C(x, k) with
    the psi obtained by inversion, which keeps all intermediate values
    integral up to the final basis change.  Verifies the structural
    postconditions (integer coefficients, monic of degree n,
    divisibility by x(x-1) for n > 1 and by x(x-1)(x-2) for n > 3) and
    raises :class:`InconsistentCountsError` if any fails.
    """
    if len(omega_by_k) < n + 1:
        raise ValueError(f"need counts for x = 0..{n}, got {len(omega_by_k)}")
    psis = [psi_from_omega(omega_by_k, k) for k in range(n + 1)]
    acc = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        if psis[k] == 0:
            continue
        basis = _binomial_basis_polynomial(k)
        for e, c in enumerate(basis):
            acc[e] += psis[k] * c
    if any(c.denominator != 1 for c in acc):
        raise InconsistentCountsError(
            f"recovered polynomial for n={n} has non-integer coefficients"
        )
    poly = IntegerPolynomial([int(c) for c in acc])
    if poly.degree != n or (n >= 0 and poly.coeffs[-1] != 1):
        raise InconsistentCountsError(
            f"recovered polynomial for n={n} is not monic of degree {n}: {poly}"
        )
    for x in range(n + 1):
        if poly(x) != omega_by_k[x]:
            raise InconsistentCountsError(
                f"recovered polynomial disagrees with input at x={x}"
            )
    if n > 1 and (poly(0) != 0 or poly(1) != 0):
        raise InconsistentCountsError(f"P_{n} not divisible by x(x-1)")
    if n > 3 and poly(2) != 0:
        raise InconsistentCountsError(f"P_{n} not divisible by x(x-1)(x-2)")
    return poly


def remainder_R(p_prev: IntegerPolynomial, p_n: IntegerPolynomial, p_next: IntegerPolynomial) -> IntegerPolynomial:
    """Remainder of the near-Chebyshev recurrence between consecutive P.

    R = P_{n+1} - (x-1) P_n + P_{n-1}; its degree must not exceed n-2
    (observed to be much smaller in practice, which we do not assert).
    """
    n = p_n.degree
    if not isinstance(n, int) or n <= 2:
        raise ValueError("recurrence remainder is defined for n > 2")
    x_minus_1 = IntegerPolynomial([-1, 1])
    r = p_next - x_minus_1 * p_n + p_prev
    if isinstance(r.degree, int) and r.degree > n - 2:
        raise InconsistentCountsError(
            f"remainder degree {r.degree} exceeds n-2 = {n - 2}; "
            f"the observed recurrence fails at n={n}"
        )
    return r


def Q_polynomial(n: int) -> IntegerPolynomial:
    """Truncated-recurrence family: Q_{n+1} = (x-1) Q_n - Q_{n-1}.

    Initial values Q_{-1} = 0, Q_0 = 1.
    """
    if n < -1:
        raise ValueError(f"n must be >= -1, got {n}")
    prev = IntegerPolynomial([])  # Q_{-1}
    cur = IntegerPolynomial([1])  # Q_0
    if n == -1:
        return prev
    x_minus_1 = IntegerPolynomial([-1, 1])
    for _ in range(n):
        prev, cur = cur, x_minus_1 * cur - prev
    return cur


def generating_series_coefficients(x: int, n_terms: int) -> list[int]:
    """First coefficients of 1 / (t^2 - (x-1) t + 1) as a power series in t.

    Computed by the linear recurrence the denominator imposes; equals
    Q_0(x)..Q_{n_terms}(x).
    """
    if n_terms < 0:
        raise ValueError(f"n_terms must be >= 0, got {n_terms}")
    out = [1]
    prev, cur = 0, 1
    for _ in range(n_terms):
        prev, cur = cur, (x - 1) * cur - prev
        out.append(cur)
    return out

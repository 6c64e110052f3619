"""Entropy estimators, rigorous bounds, and the closed-form approximation.

The entropy of the square-free language over x letters is the limit of
log(count_n)/n.  From finite count tables this module computes:

* ratio estimates log(count_n / count_{n-1}), whose last values are the
  best finite-n point estimate;
* the rigorous upper bound (log count_n - log count_j)/(n - j) for a
  short fixed overlap j (strongest at j = 2 where count_2 = x(x-1));
* the simple lower bound log(x-2)/3 and the composite lower bound
  eps + log(2) * (1/3 + ... + 1/(x-1)), eps being a proven lower bound
  for the three-letter entropy;
* the closed-form approximation log of the dominant root of
  t^2 - (x-1)t + 1, asymptotically exact in x;
* a least-squares fit of log count_n ~ eps*n + a;
* harmonic partial sums minus log m (decreasing to the
  Euler-Mascheroni constant), useful to simplify the composite bound
  for large alphabets.

All logarithms are natural; zero counts follow the usual convention
that the estimator reports entropy 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import CountRecord, count_up_to

#: Proven lower bound for the three-letter entropy (substitution-rule
#: construction doubling the choices every 21 letters).
EPSILON_LOWER_BOUND = math.log(2) / 21


@dataclass(frozen=True)
class FitResult:
    """Least-squares fit of log(count_n) against n."""

    epsilon: float
    intercept_a: float
    window: tuple[int, int]
    residual: float


@dataclass(frozen=True)
class BoundsReport:
    """One alphabet's entropy bounds row (nats everywhere)."""

    x: int
    n_max: int
    lower_bound: float
    estimate: float
    upper_bound: float
    log_x_minus_1: float
    s_tilde: float


def ratio_estimates(totals) -> list[float]:
    """log(count_n / count_{n-1}) for n = 1..n_max.

    Element i of the result is the ratio at length n = i + 1.  Whenever
    either count is zero the entry is 0.0 (entropy-zero convention for
    dying languages).  The last entry is the point estimate.
    """
    out = []
    for n in range(1, len(totals)):
        if totals[n] <= 0 or totals[n - 1] <= 0:
            out.append(0.0)
        else:
            out.append(math.log(totals[n] / totals[n - 1]))
    return out


def estimate_entropy(totals) -> float:
    """Extrapolated point estimate from the ratio sequence.

    The ratios oscillate with parity around their limit, so the mean of
    the last two is used; with fewer than two positive ratios the last
    one (or the zero convention) applies.
    """
    ratios = ratio_estimates(totals)
    if not ratios:
        return 0.0
    if len(totals) > 1 and totals[-1] <= 0:
        return 0.0
    if len(ratios) == 1:
        return ratios[-1]
    return (ratios[-1] + ratios[-2]) / 2.0


def upper_bound(x: int, totals, j: int = 2) -> float:
    """Rigorous overlap upper bound from the longest available count.

    (log count_{n_max} - log count_j) / (n_max - j), valid because the
    counts are submultiplicative once the overlap is fixed; j = 2 gives
    the strongest version, with count_2 = x(x-1).
    """
    if j not in (0, 1, 2):
        raise ValueError(f"j must be 0, 1 or 2, got {j}")
    n_max = len(totals) - 1
    if n_max <= j:
        raise ValueError(f"need counts beyond n = {j}, have n_max = {n_max}")
    if totals[j] <= 0 or totals[n_max] <= 0:
        return 0.0
    return (math.log(totals[n_max]) - math.log(totals[j])) / (n_max - j)


def upper_bound_series(x: int, totals, j: int = 2) -> list[tuple[int, float]]:
    """The j-overlap bound at every usable n; should be non-increasing."""
    out = []
    for n in range(j + 1, len(totals)):
        if totals[n] <= 0:
            break
        out.append((n, upper_bound(x, totals[: n + 1], j)))
    return out


def upper_bound_is_monotone(series, tol: float = 1e-12) -> bool:
    """Empirical monotonicity flag for an upper-bound series."""
    return all(b[1] <= a[1] + tol for a, b in zip(series, series[1:]))


def lower_bound_simple(x: int) -> float:
    """log(x-2)/3: replace any letter of an infinite three-letter
    square-free word by x-2 alternatives, one residue class at a time."""
    if x < 3:
        raise ValueError(f"simple lower bound needs x >= 3, got {x}")
    return math.log(x - 2) / 3.0


def lower_bound_composite(x: int, epsilon_lb: float = EPSILON_LOWER_BOUND) -> float:
    """Three-letter bound plus log(2)/k for each letter added up to x.

    For x = 3 the sum is empty and the bound is ``epsilon_lb`` itself.
    ``epsilon_lb`` is a parameter so stronger published three-letter
    bounds can be substituted.
    """
    if x < 3:
        raise ValueError(f"composite lower bound needs x >= 3, got {x}")
    return epsilon_lb + math.log(2) * sum(1.0 / k for k in range(3, x))


def euler_sigma(m: int) -> float:
    """Harmonic partial sum minus log m; decreases strictly to gamma."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return math.fsum(1.0 / k for k in range(1, m + 1)) - math.log(m)


def s_tilde(x: int) -> float:
    """log of the dominant root of t^2 - (x-1)t + 1.

    The generating function of the truncated recurrence has radius of
    convergence 1/root; x = 3 is the degenerate double-root case and
    returns exactly 0.
    """
    if x < 3:
        raise ValueError(f"s_tilde needs x >= 3, got {x}")
    if x == 3:
        return 0.0
    b = x - 1
    return math.log((b + math.sqrt(b * b - 4)) / 2.0)


def fit_linear(totals, window: tuple[int, int]) -> FitResult:
    """Least-squares fit log(count_n) = eps*n + a over n in [lo, hi]."""
    lo, hi = window
    ns = [n for n in range(lo, hi + 1) if 0 <= n < len(totals) and totals[n] > 0]
    if len(ns) < 2:
        raise ValueError(f"window {window} leaves fewer than two usable points")
    ys = [math.log(totals[n]) for n in ns]
    mean_n = sum(ns) / len(ns)
    mean_y = sum(ys) / len(ys)
    sxx = sum((n - mean_n) ** 2 for n in ns)
    sxy = sum((n - mean_n) * (y - mean_y) for n, y in zip(ns, ys))
    eps = sxy / sxx
    a = mean_y - eps * mean_n
    residual = max(abs(y - (eps * n + a)) for n, y in zip(ns, ys))
    return FitResult(
        epsilon=eps, intercept_a=a, window=(ns[0], ns[-1]), residual=residual
    )


def default_fit_window(n_max: int) -> tuple[int, int]:
    """Top third of the available lengths; the transient dies fast."""
    return (max(1, n_max - n_max // 3), n_max)


def fit_asymptotic(totals) -> FitResult:
    """Asymptote of log(count_n) ~ eps*n + a, anchored at the far end.

    Ordinary least squares over a window absorbs the decaying transient
    into the slope (tens of units in the 6th decimal even at n = 60);
    this estimator instead takes eps from the parity-averaged last two
    ratios, where the transient is an order of magnitude smaller, and
    then reads the intercept off the last two points.  The residual
    reported is against the final window third, as a sanity figure.
    """
    n_max = len(totals) - 1
    eps = estimate_entropy(totals)
    usable = [n for n in (n_max - 1, n_max) if totals[n] > 0]
    if len(usable) < 2:
        raise ValueError("need positive counts at the last two lengths")
    a = sum(math.log(totals[n]) - eps * n for n in usable) / len(usable)
    lo, hi = default_fit_window(n_max)
    residual = max(
        abs(math.log(totals[n]) - (eps * n + a))
        for n in range(lo, hi + 1)
        if totals[n] > 0
    )
    return FitResult(epsilon=eps, intercept_a=a, window=(lo, hi), residual=residual)


def extension_ratios(records: list[CountRecord]) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Extension-class fractions at the last length, with a convergence
    diagnostic (difference against the previous length's fractions)."""
    last = records[-1]
    if last.total == 0:
        raise ValueError(f"no square-free words at n = {last.n}")
    ratios = tuple(e / last.total for e in last.ext)
    prev = records[-2] if len(records) > 1 and records[-2].total > 0 else None
    if prev is None:
        deltas = tuple(float("nan") for _ in ratios)
    else:
        deltas = tuple(
            r - p / prev.total for r, p in zip(ratios, prev.ext)
        )
    return ratios, deltas


def bounds_report(
    x: int,
    n_max: int,
    *,
    totals=None,
    epsilon_lb: float = EPSILON_LOWER_BOUND,
    workers: int | None = None,
    split_depth: int = 6,
) -> BoundsReport:
    """Assemble one bounds-and-estimates row for alphabet size x.

    Counts are taken from ``totals`` when given (length n_max+1),
    otherwise computed with the canonical engine.  Enforces the
    ordering lower <= estimate <= upper <= log(x-1).
    """
    if x < 3:
        raise ValueError(f"bounds_report needs x >= 3, got {x}")
    if totals is None:
        records = count_up_to(
            x, n_max, symmetry="canonical", workers=workers, split_depth=split_depth
        )
        totals = [r.total for r in records]
    if len(totals) != n_max + 1:
        raise ValueError(f"expected counts for n = 0..{n_max}, got {len(totals)}")
    report = BoundsReport(
        x=x,
        n_max=n_max,
        lower_bound=lower_bound_composite(x, epsilon_lb),
        estimate=estimate_entropy(totals),
        upper_bound=upper_bound(x, totals, j=2),
        log_x_minus_1=math.log(x - 1),
        s_tilde=s_tilde(x),
    )
    if n_max >= 3:
        tol = 1e-12
        ordered = (
            report.lower_bound <= report.estimate + tol
            and report.estimate <= report.upper_bound + tol
            and report.upper_bound <= report.log_x_minus_1 + tol
        )
        if not ordered:
            raise AssertionError(f"bound ordering violated: {report}")
    return report

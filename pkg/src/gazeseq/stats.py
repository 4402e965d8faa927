"""Nonparametric tests used by the evaluation harness.

Implemented here (rather than delegated) because the report pipeline
pins exact conventions that must stay stable for the oracle tests:

* Wilcoxon signed-rank: zero differences dropped, average ranks for
  ties, statistic = min(W+, W-), exact null distribution for n <= 25
  (tie-aware, via a rank-sum count table), normal approximation with
  tie correction and no continuity correction for larger n.
* Two-sample Kolmogorov-Smirnov: D = sup |ECDF_a - ECDF_b| over the
  pooled sample, two-sided p from the asymptotic Kolmogorov series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TestResult",
    "DegenerateDataError",
    "wilcoxon_signed_rank",
    "ks_two_sample",
]


class DegenerateDataError(ValueError):
    """Raised when a test statistic is undefined for the given data."""


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    n: int


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Ranks from 1..n with ties assigned the average of their positions."""
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(values.size, dtype=np.float64)
    sorted_vals = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _exact_signed_rank_cdf(ranks: np.ndarray, w: float) -> float:
    """P(W+ <= w) under the null, by counting over all 2^n sign assignments.

    Ranks are half-integers at worst, so doubling makes the rank-sum
    distribution integer-supported and countable with a table.
    """
    r2 = np.rint(2.0 * ranks).astype(np.int64)
    total = int(r2.sum())
    counts = np.zeros(total + 1, dtype=np.float64)
    counts[0] = 1.0
    for r in r2:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: counts.size - r]
        counts = counts + shifted
    limit = int(math.floor(2.0 * w + 1e-9))
    return float(counts[: limit + 1].sum() / 2.0 ** len(r2))


def wilcoxon_signed_rank(a, b) -> TestResult:
    """Two-sided paired Wilcoxon signed-rank test on the differences a - b.

    Requires at least 5 nonzero differences.  Raises
    :class:`DegenerateDataError` when every difference is zero.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("paired samples must be equal-length 1D sequences")
    d = a - b
    d = d[d != 0.0]
    n = int(d.size)
    if n == 0:
        raise DegenerateDataError("all paired differences are zero")
    if n < 5:
        raise ValueError(f"need at least 5 nonzero differences, got {n}")

    ranks = _average_ranks(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    w = min(w_plus, w_minus)

    if n <= 25:
        p = min(1.0, 2.0 * _exact_signed_rank_cdf(ranks, w))
    else:
        mean = n * (n + 1) / 4.0
        var = n * (n + 1) * (2 * n + 1) / 24.0
        # variance shrinks when ties share an average rank
        _, tie_counts = np.unique(np.abs(d), return_counts=True)
        var -= float((tie_counts**3 - tie_counts).sum()) / 48.0
        if var <= 0:
            raise DegenerateDataError("zero variance signed-rank statistic")
        z = (w - mean) / math.sqrt(var)
        p = min(1.0, 2.0 * 0.5 * math.erfc(-z / math.sqrt(2.0)))
    return TestResult(statistic=w, p_value=p, n=n)


def _kolmogorov_sf(x: float) -> float:
    """Survival function of the Kolmogorov distribution, Q(x) = 2*sum (-1)^(k-1) exp(-2 k^2 x^2)."""
    if x < 0.05:
        return 1.0
    s = 0.0
    sign = 1.0
    for k in range(1, 1001):
        term = math.exp(-2.0 * k * k * x * x)
        s += sign * term
        if term < 1e-16:
            break
        sign = -sign
    return min(1.0, max(0.0, 2.0 * s))


def ks_two_sample(a, b) -> TestResult:
    """Two-sided two-sample Kolmogorov-Smirnov test.

    Returns D = sup |F_a - F_b| over the pooled points and the asymptotic
    p-value.  ``n`` reports the combined sample size.
    """
    a = np.sort(np.asarray(a, dtype=np.float64))
    b = np.sort(np.asarray(b, dtype=np.float64))
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be nonempty")
    pooled = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, pooled, side="right") / a.size
    cdf_b = np.searchsorted(b, pooled, side="right") / b.size
    d = float(np.abs(cdf_a - cdf_b).max())
    en = math.sqrt(a.size * b.size / (a.size + b.size))
    p = _kolmogorov_sf(en * d)
    return TestResult(statistic=d, p_value=p, n=int(a.size + b.size))

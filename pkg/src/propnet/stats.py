"""Rank and spread statistics used by the evaluation harness.

Spearman, the Mann-Whitney U test and Levene's W are implemented directly
(average ranks for ties, normal approximation with tie and continuity
corrections, absolute deviations from a chosen center); scipy supplies only
the F-distribution tail for Levene's p-value.
"""

from __future__ import annotations

import math

from scipy.special import fdtrc


class UndefinedStatistic(ValueError):
    pass


def rankdata(values) -> list[float]:
    """Average ranks, ties share the mean of their rank range."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _pearson(a, b) -> float:
    n = len(a)
    mean_a = sum(a) / n
    mean_b = sum(b) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(a, b))
    var_a = sum((x - mean_a) ** 2 for x in a)
    var_b = sum((y - mean_b) ** 2 for y in b)
    if var_a == 0.0 or var_b == 0.0:
        raise UndefinedStatistic("zero variance")
    return cov / math.sqrt(var_a * var_b)


def spearman(pred, truth) -> float:
    """Rank correlation: Pearson over average ranks."""
    if len(pred) != len(truth):
        raise ValueError("length mismatch")
    if len(pred) < 2:
        raise UndefinedStatistic("need at least two observations")
    return _pearson(rankdata(pred), rankdata(truth))


def _normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def mann_whitney_u(a, b, method: str = "asymptotic") -> tuple[float, float]:
    """U statistic of the first sample and a two-sided p-value.

    The default asymptotic p uses the normal approximation with tie-corrected
    variance and continuity correction; ``method="exact"`` enumerates the
    tie-free U distribution instead.
    """
    if not a or not b:
        raise ValueError("both samples must be non-empty")
    if method not in ("asymptotic", "exact"):
        raise ValueError(f"unknown method {method!r}")
    n1, n2 = len(a), len(b)
    combined = list(a) + list(b)
    ranks = rankdata(combined)
    r1 = sum(ranks[:n1])
    u1 = r1 - n1 * (n1 + 1) / 2.0

    if method == "exact":
        return u1, _exact_two_sided_p(u1, n1, n2)

    n = n1 + n2
    counts: dict[float, int] = {}
    for v in combined:
        counts[v] = counts.get(v, 0) + 1
    tie_term = sum(t**3 - t for t in counts.values())
    variance = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if variance == 0.0:
        return u1, 1.0
    mu = n1 * n2 / 2.0
    z = (abs(u1 - mu) - 0.5) / math.sqrt(variance)
    p = min(1.0, 2.0 * _normal_sf(z))
    return u1, p


def _u_distribution(n1: int, n2: int) -> list[float]:
    """Arrangement counts per U value for tie-free samples, via the
    recurrence f(u; m, n) = f(u - n; m - 1, n) + f(u; m, n - 1)."""
    max_u = n1 * n2
    prev = [[1.0] + [0.0] * max_u for _ in range(n2 + 1)]  # m = 0
    for m in range(1, n1 + 1):
        cur = [[1.0] + [0.0] * max_u]  # n = 0
        for n in range(1, n2 + 1):
            row = [0.0] * (max_u + 1)
            for u in range(0, m * n + 1):
                above = prev[n][u - n] if u - n >= 0 else 0.0
                left = cur[n - 1][u]
                row[u] = above + left
            cur.append(row)
        prev = cur
    return prev[n2]


def _exact_two_sided_p(u: float, n1: int, n2: int) -> float:
    counts = _u_distribution(n1, n2)
    total = sum(counts)
    k = int(round(u))
    cdf = sum(counts[: k + 1]) / total
    sf = sum(counts[k:]) / total
    return min(1.0, 2.0 * min(cdf, sf))


def levene(a, b, center: str = "median") -> tuple[float, float]:
    """Levene's W over two samples with p from the F distribution.

    ``center="median"`` is the Brown-Forsythe variant and the default;
    ``center="mean"`` is the classic test.
    """
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both samples need at least two observations")
    if center not in ("median", "mean"):
        raise ValueError(f"unknown center {center!r}")

    def middle(sample):
        if center == "mean":
            return sum(sample) / len(sample)
        s = sorted(sample)
        m = len(s) // 2
        return s[m] if len(s) % 2 else (s[m - 1] + s[m]) / 2.0

    groups = [a, b]
    deviations = [[abs(x - middle(g)) for x in g] for g in groups]
    k = len(groups)
    n = sum(len(g) for g in groups)
    group_means = [sum(d) / len(d) for d in deviations]
    grand_mean = sum(sum(d) for d in deviations) / n
    numerator = sum(
        len(d) * (gm - grand_mean) ** 2 for d, gm in zip(deviations, group_means)
    )
    denominator = sum(
        (x - gm) ** 2 for d, gm in zip(deviations, group_means) for x in d
    )
    if denominator == 0.0:
        if numerator == 0.0:
            raise UndefinedStatistic("all absolute deviations are zero")
        return math.inf, 0.0
    w = (n - k) / (k - 1) * numerator / denominator
    p = float(fdtrc(k - 1, n - k, w))
    return w, p


def dimension_stats(buckets: dict[str, list[float]]) -> dict[str, dict[str, float]]:
    """Count, share, mean and population standard deviation per bucket."""
    total = sum(len(v) for v in buckets.values())
    out = {}
    for name, scores in buckets.items():
        if not scores:
            out[name] = {"count": 0, "proportion": 0.0, "mean": 0.0, "std": 0.0}
            continue
        mean = sum(scores) / len(scores)
        var = sum((s - mean) ** 2 for s in scores) / len(scores)
        out[name] = {
            "count": len(scores),
            "proportion": 100.0 * len(scores) / total if total else 0.0,
            "mean": mean,
            "std": math.sqrt(var),
        }
    return out

"""Exhaustive enumeration of self-conjugate (s, t)-cores through their
lattice paths, with exact statistics and the identity checks tying them to
the closed formulas.

Counts, totals and averages are arbitrary-precision (int / Fraction); the
int64 kernels are only dispatched after proving, in exact arithmetic, that
no accumulator can overflow.  Statistics folds are associative, so the path
space may be split into independent strata (by the last row of the
above-partition, which is constant on contiguous colexicographic ranges)
and folded in parallel with a deterministic merge.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import _kernels
from .bijection import CoreParams, LatticePath, build_array, core_from_path, largest_core
from .partitions import Partition

DEFAULT_PATH_BUDGET = 10**7
# Above this many paths a stratum's int64 total could overflow, so the
# pure big-integer fold takes over (far beyond practical workloads anyway).
_INT64_SAFE = 2**62


class PathBudgetError(ValueError):
    """Raised when an enumeration would visit more paths than allowed."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} paths, over the budget of {budget}; "
            "raise the budget to proceed"
        )


@dataclass(frozen=True)
class CoreStats:
    """Exact statistics of the set of self-conjugate (s, t)-cores."""

    count: int
    total_size: int
    average_size: Fraction
    max_size: int

    def __post_init__(self):
        assert self.average_size * self.count == self.total_size
        if self.count:
            assert 0 <= self.max_size <= self.total_size


@dataclass(frozen=True)
class FoldResult:
    """Raw outcome of folding sizes over every path."""

    count: int
    total: int
    max_size: int
    max_multiplicity: int


def iter_box_partitions(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Every partition fitting in an m x n box, as a length-m tuple padded
    with zeros, in colexicographic order (last rows vary slowest)."""
    if m < 1 or n < 1:
        raise ValueError(f"box dimensions must be positive, got {m}x{n}")
    mu = [0] * m
    while True:
        yield tuple(mu)
        for i in range(m):
            cap = n if i == 0 else mu[i - 1]
            if mu[i] < cap:
                v = mu[i] + 1
                mu[i] = v
                for r in range(i):
                    mu[r] = v
                break
        else:
            return


def iter_paths(m: int, n: int) -> Iterator[LatticePath]:
    """Every lattice path in the m x n box, C(m+n, m) of them, in the
    colexicographic order of their above-partitions."""
    for mu in iter_box_partitions(m, n):
        yield LatticePath(m, n, Partition(tuple(r for r in mu if r)))


def coprime_pairs(limit: int, low: int = 2) -> list[tuple[int, int]]:
    """All coprime pairs low <= s < t <= limit."""
    return [
        (s, t)
        for t in range(low + 1, limit + 1)
        for s in range(low, t)
        if math.gcd(s, t) == 1
    ]


def _fold_stratum_pure(prefix: list[list[int]], n: int, w: int, box_total: int):
    """Big-integer twin of the kernel stratum fold; same visit order."""
    m = len(prefix)
    mu = [w] * m
    above = sum(prefix[r][w] for r in range(m))
    count = total = best_count = 0
    best = -1
    while True:
        size = box_total - above
        count += 1
        total += size
        if size > best:
            best, best_count = size, 1
        elif size == best:
            best_count += 1
        moved = False
        for i in range(m - 1):
            cap = n if i == 0 else mu[i - 1]
            if mu[i] < cap:
                newv = mu[i] + 1
                above += prefix[i][newv] - prefix[i][mu[i]]
                mu[i] = newv
                for r in range(i):
                    above += prefix[r][newv] - prefix[r][mu[r]]
                    mu[r] = newv
                moved = True
                break
        if not moved:
            return count, total, best, best_count


def fold_path_sizes(s: int, t: int, parallel: bool = False) -> FoldResult:
    """Fold exact size statistics over every path of the (s, t) box."""
    params = CoreParams(s, t)
    arr = build_array(s, t)
    m, n = params.m, params.n
    box_total = params.max_core_size
    prefix64 = arr.row_prefix_sums()

    stratum_counts = [math.comb(m - 1 + n - w, m - 1) for w in range(n + 1)]
    kernel_ok = all(c * max(box_total, 1) < _INT64_SAFE for c in stratum_counts)

    def run(w: int):
        if kernel_ok:
            c, tot, best, bc = _kernels.fold_paths_stratum(
                prefix64, n, w, box_total
            )
            return int(c), int(tot), int(best), int(bc)
        prefix = [[int(v) for v in row] for row in prefix64]
        return _fold_stratum_pure(prefix, n, w, box_total)

    if parallel and n > 0:
        with ThreadPoolExecutor() as pool:
            parts = list(pool.map(run, range(n + 1)))
    else:
        parts = [run(w) for w in range(n + 1)]

    for w, (c, _, _, _) in enumerate(parts):
        assert c == stratum_counts[w]
    count = sum(p[0] for p in parts)
    total = sum(p[1] for p in parts)
    best = max(p[2] for p in parts)
    best_count = sum(p[3] for p in parts if p[2] == best)
    return FoldResult(count, total, best, best_count)


def enumerated_stats(
    s: int,
    t: int,
    budget: int = DEFAULT_PATH_BUDGET,
    parallel: bool = False,
) -> CoreStats:
    """Count / total / average / max size of the self-conjugate (s, t)-cores
    by walking every lattice path, with exact arithmetic throughout."""
    params = CoreParams(s, t)
    expected = math.comb(params.m + params.n, params.m)
    if expected > budget:
        raise PathBudgetError(expected, budget)
    fold = fold_path_sizes(s, t, parallel=parallel)
    return CoreStats(
        count=fold.count,
        total_size=fold.total,
        average_size=Fraction(fold.total, fold.count),
        max_size=fold.max_size,
    )


def average_size_formula(s: int, t: int) -> Fraction:
    """The closed-form average size (s+t+1)(s-1)(t-1)/24, in lowest terms."""
    CoreParams(s, t)
    return Fraction((s + t + 1) * (s - 1) * (t - 1), 24)


def total_size_from_path_counts(s: int, t: int) -> int:
    """Total size of all self-conjugate (s, t)-cores via the below-count
    table: the largest size times the path count, minus each array entry
    weighted by how many paths it sits above."""
    from .identities import below_count_table

    params = CoreParams(s, t)
    arr = build_array(s, t)
    m, n = params.m, params.n
    f = below_count_table(m, n)
    above_total = sum(
        int(arr.entries[i, j]) * f[i][j] for i in range(m) for j in range(n)
    )
    return params.max_core_size * math.comb(m + n, m) - above_total


def verify_pair(
    s: int,
    t: int,
    budget: int = DEFAULT_PATH_BUDGET,
    containment_limit: int = 10**5,
    oracle_budget: int | None = None,
    parallel: bool = False,
) -> dict:
    """Cross-check every counting statement for one coprime pair.

    Returns a JSON-ready report: enumerated statistics plus a list of
    {name, pass, lhs, rhs} checks.  The containment sweep (and, when
    ``oracle_budget`` is given, the independent brute-force set comparison)
    only run within their budgets.  Failures are reported, never raised.
    """
    params = CoreParams(s, t)
    m, n = params.m, params.n
    expected = math.comb(m + n, m)
    if expected > budget:
        raise PathBudgetError(expected, budget)
    fold = fold_path_sizes(s, t, parallel=parallel)
    stats = CoreStats(
        count=fold.count,
        total_size=fold.total,
        average_size=Fraction(fold.total, fold.count),
        max_size=fold.max_size,
    )

    checks = []

    def add(name, lhs, rhs):
        checks.append({"name": name, "pass": lhs == rhs, "lhs": lhs, "rhs": rhs})

    add("count_is_binomial", stats.count, expected)
    add("total_matches_path_counts", stats.total_size, total_size_from_path_counts(s, t))
    # 24 * total == (s+t+1)(s-1)(t-1) * count, the average formula cleared
    # of its denominator so both sides stay integers
    add(
        "total_matches_average_formula",
        24 * stats.total_size,
        (s + t + 1) * (s - 1) * (t - 1) * stats.count,
    )
    add("max_is_closed_form", stats.max_size, params.max_core_size)
    add("max_attained_once", fold.max_multiplicity, 1)

    if stats.count <= containment_limit:
        lam = largest_core(params)
        bad = 0
        for path in iter_paths(m, n):
            if not lam.contains(core_from_path(path, params)):
                bad += 1
        add("largest_core_contains_all", bad, 0)

    if oracle_budget is not None:
        from .oracles import brute_force_sc_cores

        oracle = {p.rows for p in brute_force_sc_cores(s, t, budget=oracle_budget)}
        image = {core_from_path(path, params).rows for path in iter_paths(m, n)}
        checks.append(
            {
                "name": "oracle_set_equality",
                "pass": image == oracle,
                "lhs": len(image),
                "rhs": len(oracle),
            }
        )

    average = stats.average_size
    return {
        "s": s,
        "t": t,
        "count": stats.count,
        "total": stats.total_size,
        "average": {"num": average.numerator, "den": average.denominator},
        "max": stats.max_size,
        "checks": checks,
    }


def report_all_pass(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def report_csv_row(report: dict) -> str:
    """One sweep line: s,t,count,total,avg_num,avg_den,max,all_pass."""
    return ",".join(
        str(v)
        for v in (
            report["s"],
            report["t"],
            report["count"],
            report["total"],
            report["average"]["num"],
            report["average"]["den"],
            report["max"],
            report_all_pass(report),
        )
    )

"""Lattice-path counting identities in an m x n box.

The central object is the table whose (i, j) entry counts the monotone
lower-left to upper-right paths lying below cell (i, j), i.e. the paths
whose above-partition mu has mu_i >= j.  All arithmetic is plain Python
integers: the weighted sums overflow 64 bits well before the m, n <= 30
sweep ends.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def path_prefix_table(a: int, b: int) -> list[list[int]]:
    """Pascal-style DP table: entry [x][y] counts monotone paths from (0, 0)
    to (x, y), built from the one-step recurrence."""
    table = [[1] * (b + 1) for _ in range(a + 1)]
    for x in range(1, a + 1):
        row = table[x]
        prev = table[x - 1]
        for y in range(1, b + 1):
            row[y] = prev[y] + row[y - 1]
    return table


@lru_cache(maxsize=4096)
def below_count_table(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Table (1-based cells stored 0-based) counting, for each cell (i, j),
    the paths in the m x n box that pass below it.

    A path is below cell (i, j) exactly when it crosses the column strip of
    j at some height h <= m - i, which splits it into a prefix ending at
    (j-1, h) and a suffix from (j, h); summing over h gives the count.
    Cached: the identity sweeps revisit each box several times.
    """
    if m < 1 or n < 1:
        raise ValueError(f"box dimensions must be positive, got {m}x{n}")
    paths = path_prefix_table(n, m)
    f = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, n + 1):
            total = 0
            for h in range(m - i + 1):
                total += paths[j - 1][h] * paths[n - j][m - h]
            row.append(total)
        f.append(tuple(row))
    return tuple(f)


def below_count_table_by_enumeration(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Independent oracle for the table: walk every partition in the box and
    count the cells above each path directly.  Exponential; small boxes only."""
    from .enumeration import iter_box_partitions

    f = [[0] * n for _ in range(m)]
    for mu in iter_box_partitions(m, n):
        for i in range(m):
            for j in range(mu[i]):
                f[i][j] += 1
    return tuple(tuple(row) for row in f)


def sum_below(m: int, n: int) -> int:
    return sum(sum(row) for row in below_count_table(m, n))


def sum_below_closed(m: int, n: int) -> int:
    """Closed form for ``sum_below``: C(m+n, m) * m * n / 2."""
    prod = comb(m + n, m) * m * n
    assert prod % 2 == 0
    return prod // 2


def sum_below_times_row(m: int, n: int) -> int:
    """Sum of i * table[i][j] over all cells (1-based row index weight)."""
    f = below_count_table(m, n)
    return sum(i * v for i, row in enumerate(f, start=1) for v in row)


def sum_below_times_row_closed(m: int, n: int) -> int:
    return comb(m + 2, 3) * comb(m + n, m + 1)


def sum_below_times_col(m: int, n: int) -> int:
    """Sum of j * table[i][j] over all cells (1-based column index weight)."""
    f = below_count_table(m, n)
    return sum(j * v for row in f for j, v in enumerate(row, start=1))


def sum_below_times_col_closed(m: int, n: int) -> int:
    return comb(n + 2, 3) * comb(m + n, n + 1)


def row_weighted_recurrence_holds(m: int, n: int) -> bool:
    """Check G(m, n) = G(m-1, n) + G(m, n-1) + C(m+1, 2) * C(m+n-1, m) for
    the row-weighted sum G, all four values computed from the table."""
    if m < 2 or n < 2:
        raise ValueError(f"recurrence needs m, n >= 2, got {m}, {n}")
    lhs = sum_below_times_row(m, n)
    rhs = (
        sum_below_times_row(m - 1, n)
        + sum_below_times_row(m, n - 1)
        + comb(m + 1, 2) * comb(m + n - 1, m)
    )
    return lhs == rhs


def column_pair_total(m: int, n: int) -> int:
    """Triple count: over every partition mu in the box, the ways to choose
    an ordered pair of cells in one column of mu with the second not lower,
    i.e. sum of C(mu'_j + 1, 2) over the columns.  Equals the row-weighted
    sum; exponential enumeration, small boxes only."""
    from .enumeration import iter_box_partitions

    total = 0
    for mu in iter_box_partitions(m, n):
        width = mu[0]
        for j in range(1, width + 1):
            col = sum(1 for r in mu if r >= j)
            total += comb(col + 1, 2)
    return total


def symmetry_holds(m: int, n: int) -> bool:
    """Complementary cells partition the path set: table[i][j] plus
    table[m-i+1][n-j+1] must equal C(m+n, m) everywhere."""
    f = below_count_table(m, n)
    full = comb(m + n, m)
    return all(
        f[i][j] + f[m - 1 - i][n - 1 - j] == full
        for i in range(m)
        for j in range(n)
    )


def identity_report(m: int, n: int) -> dict:
    """All identity checks for one box, as a flat dict of booleans.

    The recurrence entry is vacuously true when either dimension is 1.
    """
    return {
        "m": m,
        "n": n,
        "sum_f_ok": sum_below(m, n) == sum_below_closed(m, n),
        "sum_if_ok": sum_below_times_row(m, n) == sum_below_times_row_closed(m, n),
        "sum_jf_ok": sum_below_times_col(m, n) == sum_below_times_col_closed(m, n),
        "symmetry_ok": symmetry_holds(m, n),
        "recurrence_ok": (
            row_weighted_recurrence_holds(m, n) if m >= 2 and n >= 2 else True
        ),
    }

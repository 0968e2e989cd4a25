"""The signed hook array for a coprime pair (s, t), monotone lattice paths
in its floor(s/2) x floor(t/2) box, and the correspondence between paths and
self-conjugate (s, t)-core partitions.

Orientation is pinned once and for all: row 1 is the top row of the array
(where the entry s*t - s - t lives), paths run from the lower-left corner to
the upper-right corner, and a path is canonically stored as the partition mu
of cells lying ABOVE it (toward the top-left).  Cell (i, j) is above the
path exactly when j <= mu_i.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .partitions import Partition, partition_from_diagonal_hooks, validate_hook_set

# Largest s*t for which every intermediate value (entries, row sums, sizes)
# provably fits in a signed 64-bit integer: |entry| < s*t and the sum of all
# |entries| is below (s*t)^2 / 4.
_MAX_ST_64BIT = 2**31


@dataclass(frozen=True)
class CoreParams:
    """A coprime pair (s, t) with the derived box dimensions m, n."""

    s: int
    t: int

    def __post_init__(self):
        s, t = self.s, self.t
        if s < 2 or t < 2:
            raise ValueError(f"both parameters must be at least 2, got ({s}, {t})")
        if math.gcd(s, t) != 1:
            raise ValueError(f"not coprime: ({s}, {t})")
        if s * t > _MAX_ST_64BIT:
            raise ValueError(f"s*t = {s * t} exceeds the exact 64-bit range")
        assert s % 2 == 1 or t % 2 == 1

    @property
    def m(self) -> int:
        return self.s // 2

    @property
    def n(self) -> int:
        return self.t // 2

    @property
    def max_core_size(self) -> int:
        """(s^2 - 1)(t^2 - 1) / 24, the size of the largest (s, t)-core."""
        prod = (self.s * self.s - 1) * (self.t * self.t - 1)
        assert prod % 24 == 0
        return prod // 24


@dataclass(frozen=True, eq=False)
class CoreArray:
    """The m x n array with entry s*t - (2j-1)s - (2i-1)t at cell (i, j).

    Entries decrease by 2s along rows and 2t down columns, are odd, nonzero,
    pairwise distinct in absolute value, and the top-left entry dominates
    them all in absolute value.
    """

    params: CoreParams
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.entries.setflags(write=False)
        a11 = int(self.entries[0, 0])
        amn = int(self.entries[-1, -1])
        assert a11 == self.params.s * self.params.t - self.params.s - self.params.t
        assert a11 + amn > 0

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def n(self) -> int:
        return self.params.n

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based cell (i, j)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ValueError(f"cell ({i}, {j}) outside the {self.m}x{self.n} array")
        return int(self.entries[i - 1, j - 1])

    def row_prefix_sums(self) -> np.ndarray:
        """(m, n+1) table whose [i, k] entry is the sum of the first k
        entries of row i; used by the enumeration kernels."""
        out = np.zeros((self.m, self.n + 1), dtype=np.int64)
        np.cumsum(self.entries, axis=1, out=out[:, 1:])
        return out

    def positive_sum(self) -> int:
        """Sum of the positive entries; equals the largest core size."""
        return int(self.entries[self.entries > 0].sum())


@lru_cache(maxsize=128)
def build_array(s: int, t: int) -> CoreArray:
    """Build the signed hook array for a coprime pair (s, t).

    Cached: arrays are immutable (the entries are marked read-only), so the
    same instance is shared by every caller.
    """
    params = CoreParams(s, t)
    i = np.arange(1, params.m + 1, dtype=np.int64)[:, None]
    j = np.arange(1, params.n + 1, dtype=np.int64)[None, :]
    entries = s * t - (2 * j - 1) * s - (2 * i - 1) * t
    return CoreArray(params, entries)


@dataclass(frozen=True)
class LatticePath:
    """A monotone lower-left to upper-right path in an m x n box, stored as
    the partition mu of cells above it."""

    m: int
    n: int
    mu: Partition = Partition()

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"box dimensions must be positive, got {self.m}x{self.n}")
        if len(self.mu) > self.m or (self.mu.rows and self.mu.rows[0] > self.n):
            raise ValueError(f"mu = {self.mu} does not fit in a {self.m}x{self.n} box")

    def is_above(self, i: int, j: int) -> bool:
        """Whether cell (i, j) lies above the path."""
        return j <= self.mu.row(i)

    def steps(self) -> str:
        """The path as a word over U/R read from the lower-left corner.

        Crossing column j the path runs at height m minus the number of
        above-cells in that column, so it climbs to that height and takes
        one right step per column.
        """
        conj = self.mu.conjugate()
        word = []
        height = 0
        for j in range(1, self.n + 1):
            target = self.m - conj.row(j)
            word.append("U" * (target - height))
            word.append("R")
            height = target
        word.append("U" * (self.m - height))
        return "".join(word)

    @classmethod
    def from_steps(cls, word: str, m: int, n: int) -> "LatticePath":
        """Parse a U/R word read from the lower-left corner."""
        word = word.strip().upper()
        ups = word.count("U")
        rights = word.count("R")
        if set(word) - {"U", "R"}:
            raise ValueError(f"step word may contain only U and R: {word!r}")
        if ups != m or rights != n:
            raise ValueError(
                f"step word needs exactly {m} U's and {n} R's, got {ups} and {rights}"
            )
        # column j gets m - height cells above the path, height = U's so far
        height = 0
        cols = []
        for c in word:
            if c == "U":
                height += 1
            else:
                cols.append(m - height)
        mu_rows = [sum(1 for c in cols if c >= i) for i in range(1, m + 1)]
        return cls(m, n, Partition(tuple(r for r in mu_rows if r > 0)))


def path_hook_set(path: LatticePath, arr: CoreArray) -> tuple[int, ...]:
    """Diagonal hook set carried by a path: positive entries below it plus
    absolute values of negative entries above it, sorted decreasing."""
    if (path.m, path.n) != (arr.m, arr.n):
        raise ValueError(
            f"path box {path.m}x{path.n} does not match array {arr.m}x{arr.n}"
        )
    hooks = []
    for i in range(1, arr.m + 1):
        row_mu = path.mu.row(i)
        for j in range(1, arr.n + 1):
            v = int(arr.entries[i - 1, j - 1])
            if j <= row_mu:
                if v < 0:
                    hooks.append(-v)
            elif v > 0:
                hooks.append(v)
    return validate_hook_set(hooks)


def core_from_path(path: LatticePath, params: CoreParams) -> Partition:
    """The self-conjugate (s, t)-core corresponding to a lattice path."""
    arr = build_array(params.s, params.t)
    return partition_from_diagonal_hooks(path_hook_set(path, arr))


def path_from_core(p: Partition, params: CoreParams) -> LatticePath:
    """The unique path mapping to ``p``; raises if ``p`` is not a
    self-conjugate (s, t)-core.

    Solved cell by cell: a positive entry lies below the path exactly when
    its value is a diagonal hook of ``p``, a negative entry lies above
    exactly when its absolute value is.  The resulting above-set must be a
    partition shape, and the candidate path must map back to ``p``.
    """
    if not p.is_self_conjugate():
        raise ValueError(f"not in the bijection image: {p} is not self-conjugate")
    hooks = set(p.diagonal_hooks())
    arr = build_array(params.s, params.t)
    abs_entries = {abs(int(v)) for v in arr.entries.flat}
    if not hooks <= abs_entries:
        raise ValueError(
            f"not in the bijection image: hooks {sorted(hooks - abs_entries)} "
            f"do not occur in the ({params.s}, {params.t}) array"
        )
    mu_rows = []
    for i in range(arr.m):
        above = 0
        for j in range(arr.n):
            v = int(arr.entries[i, j])
            is_above = (v not in hooks) if v > 0 else (-v in hooks)
            if is_above:
                if above != j:
                    raise ValueError(
                        f"not in the bijection image: above-cells of {p} do not "
                        "form a partition shape"
                    )
                above += 1
        mu_rows.append(above)
    if any(mu_rows[i] < mu_rows[i + 1] for i in range(len(mu_rows) - 1)):
        raise ValueError(
            f"not in the bijection image: above-cells of {p} do not form a "
            "partition shape"
        )
    path = LatticePath(arr.m, arr.n, Partition(tuple(r for r in mu_rows if r > 0)))
    if core_from_path(path, params) != p:
        raise ValueError(f"not in the bijection image: {p}")
    return path


def core_size_from_path(path: LatticePath, params: CoreParams) -> int:
    """Size of the core for a path, computed without building the partition:
    the largest core size minus the sum of array entries above the path."""
    arr = build_array(params.s, params.t)
    if (path.m, path.n) != (arr.m, arr.n):
        raise ValueError(
            f"path box {path.m}x{path.n} does not match array {arr.m}x{arr.n}"
        )
    above = 0
    for i in range(1, arr.m + 1):
        k = path.mu.row(i)
        if k:
            above += int(arr.entries[i - 1, :k].sum())
    return params.max_core_size - above


def largest_core(params: CoreParams) -> Partition:
    """The largest (s, t)-core: image of the path hugging the left and top
    borders (mu empty), whose hook set is all positive array entries."""
    return core_from_path(LatticePath(params.m, params.n), params)

"""JIT-compiled inner loops for the two enumeration hot spots: folding
statistics over every lattice path in a box, and scanning every integer
partition up to a size bound for core membership.

Both kernels are written against int64 numpy state so the exact same
function bodies run either under numba or as plain Python.  The backend is
chosen once at import time:

* ``COREPATHS_NUMBA=0`` (or ``off``/``false``/``no``) forces the pure
  fallback;
* otherwise numba is used when importable.

Callers are responsible for exactness: they must check, with arbitrary
precision arithmetic, that every accumulator fits in int64 before
dispatching here (see ``enumeration``).  ``pure_function`` exposes the
uncompiled body of a kernel for the benchmark suite.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("COREPATHS_NUMBA", "").strip().lower()
_WANT_NUMBA = _FLAG not in {"0", "off", "false", "no"}

if _WANT_NUMBA:
    try:
        from numba import njit as _njit
    except ImportError:
        _njit = None
else:
    _njit = None

USING_NUMBA = _njit is not None


def backend() -> str:
    """Name of the active kernel backend: 'numba' or 'python'."""
    return "numba" if USING_NUMBA else "python"


def _jit(fn):
    if USING_NUMBA:
        return _njit(cache=True, nogil=True)(fn)
    return fn


def pure_function(kernel):
    """The plain-Python body behind a (possibly jitted) kernel."""
    return getattr(kernel, "py_func", kernel)


@_jit
def fold_paths_stratum(prefix, n, w, box_total):
    """Fold size statistics over every path whose above-partition has last
    row exactly w, visiting them in colexicographic order.

    prefix is the (m, n+1) row-prefix-sum table of the array, box_total the
    largest core size.  Returns (count, total, best, best_count): the number
    of paths visited, the exact sum of their core sizes, the maximum size,
    and how many paths attain it.
    """
    m = prefix.shape[0]
    mu = np.full(m, w, dtype=np.int64)
    above = np.int64(0)
    for r in range(m):
        above += prefix[r, w]
    count = np.int64(0)
    total = np.int64(0)
    best = np.int64(-1)
    best_count = np.int64(0)
    while True:
        size = box_total - above
        count += 1
        total += size
        if size > best:
            best = size
            best_count = 1
        elif size == best:
            best_count += 1
        # colexicographic successor keeping the last row fixed: bump the
        # first bumpable row, reset everything before it to the new value
        moved = False
        for i in range(m - 1):
            cap = n if i == 0 else mu[i - 1]
            if mu[i] < cap:
                newv = mu[i] + 1
                above += prefix[i, newv] - prefix[i, mu[i]]
                mu[i] = newv
                for r in range(i):
                    above += prefix[r, newv] - prefix[r, mu[r]]
                    mu[r] = newv
                moved = True
                break
        if not moved:
            return count, total, best, best_count


@_jit
def scan_partitions(limit, s, t, lam):
    """Scan every partition of every size 0..limit, testing each for being
    a simultaneous (s, t)-core via its first-column hooks.

    lam is a weakly decreasing int64 array (possibly empty): when nonempty,
    cores not contained in it are tallied separately.  Returns (scanned,
    cores, core_size_total, outside).
    """
    scanned = np.int64(1)  # the empty partition
    cores = np.int64(1)    # it is a core of everything
    core_size_total = np.int64(0)
    outside = np.int64(0)

    a = np.zeros(limit + 2, dtype=np.int64)
    beta = np.zeros(limit + 2, dtype=np.uint8)

    for size in range(1, limit + 1):
        # ascending-composition enumeration of the partitions of `size`
        a[0] = 0
        k = 1
        y = size - 1
        while k != 0:
            x = a[k - 1] + 1
            k -= 1
            while 2 * x <= y:
                a[k] = x
                y -= x
                k += 1
            length = k + 1
            while x <= y:
                a[k] = x
                a[length] = y
                scanned += 1
                flag = _core_and_containment(a, length + 1, s, t, beta, lam)
                if flag >= 1:
                    cores += 1
                    core_size_total += size
                    if flag == 2:
                        outside += 1
                x += 1
                y -= 1
            a[k] = x + y
            y = x + y - 1
            scanned += 1
            flag = _core_and_containment(a, length, s, t, beta, lam)
            if flag >= 1:
                cores += 1
                core_size_total += size
                if flag == 2:
                    outside += 1
    return scanned, cores, core_size_total, outside


@_jit
def _core_and_containment(a, length, s, t, beta, lam):
    """For the partition whose parts are a[0..length) in ascending order:
    0 = not an (s, t)-core, 1 = core contained in lam, 2 = core outside lam.
    An empty lam means no containment check (never returns 2)."""
    # first-column hooks: descending row i (1-based) has a[length - i],
    # hook a[length - i] + length - i
    for i in range(length):
        beta[a[i] + i] = 1
    ok = True
    for i in range(length):
        b = a[i] + i
        if b >= s and beta[b - s] == 0:
            ok = False
            break
        if b >= t and beta[b - t] == 0:
            ok = False
            break
    for i in range(length):
        beta[a[i] + i] = 0
    if not ok:
        return 0
    if lam.shape[0] == 0:
        return 1
    if length > lam.shape[0]:
        return 2
    for i in range(length):
        if a[length - 1 - i] > lam[i]:
            return 2
    return 1

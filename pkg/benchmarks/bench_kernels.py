#!/usr/bin/env python3
"""Benchmark the two hot kernels, jitted vs the pure-Python fallback.

The jitted side is whatever the COREPATHS_NUMBA flag selected at import;
when numba is active, the fallback is timed through the kernel's py_func,
so both sides run the exact same function body.

    python3 benchmarks/bench_kernels.py [--paths-pair S T] [--scan-limit N]
                                        [--repeat K] [--skip-pure]
"""

import argparse
import math
import time

import numpy as np

from corepaths import CoreParams, build_array, largest_core
from corepaths import _kernels


def _time(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_fold(s, t, repeat, skip_pure):
    params = CoreParams(s, t)
    arr = build_array(s, t)
    prefix = arr.row_prefix_sums()
    total_paths = math.comb(params.m + params.n, params.m)

    def run(fn):
        for w in range(params.n + 1):
            fn(prefix, params.n, w, params.max_core_size)

    rows = []
    kernel = _kernels.fold_paths_stratum
    run(kernel)  # compile / warm
    rows.append((_kernels.backend(), _time(lambda: run(kernel), repeat)))
    if _kernels.USING_NUMBA and not skip_pure:
        pure = _kernels.pure_function(kernel)
        rows.append(("python", _time(lambda: run(pure), repeat)))
    print(f"\npath statistics fold, ({s},{t}): {total_paths} paths")
    _table(rows, total_paths)


def bench_scan(s, t, limit, repeat, skip_pure):
    lam = np.asarray(largest_core(CoreParams(s, t)).rows, dtype=np.int64)
    kernel = _kernels.scan_partitions
    scanned = int(kernel(limit, s, t, lam)[0])
    rows = [(_kernels.backend(), _time(lambda: kernel(limit, s, t, lam), repeat))]
    if _kernels.USING_NUMBA and not skip_pure:
        pure = _kernels.pure_function(kernel)
        rows.append(("python", _time(lambda: pure(limit, s, t, lam), repeat)))
    print(f"\npartition core scan, ({s},{t}) up to size {limit}: {scanned} partitions")
    _table(rows, scanned)


def _table(rows, items):
    base = rows[0][1]
    for name, seconds in rows:
        rate = items / seconds if seconds else float("inf")
        rel = seconds / base
        print(f"  {name:<8} {seconds * 1e3:10.2f} ms   {rate:14.0f} items/s   {rel:6.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--paths-pair", nargs=2, type=int, default=(19, 21),
                        metavar=("S", "T"))
    parser.add_argument("--scan-pair", nargs=2, type=int, default=(6, 7),
                        metavar=("S", "T"))
    parser.add_argument("--scan-limit", type=int, default=45)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-pure", action="store_true",
                        help="skip the slow un-jitted side")
    args = parser.parse_args()

    print(f"kernel backend: {_kernels.backend()}")
    bench_fold(*args.paths_pair, args.repeat, args.skip_pure)
    bench_scan(*args.scan_pair, args.scan_limit, args.repeat, args.skip_pure)


if __name__ == "__main__":
    main()

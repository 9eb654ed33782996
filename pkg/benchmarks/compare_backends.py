#!/usr/bin/env python3
"""Benchmark the oracle scan kernels: numba JIT vs pure numpy.

Times the full repetition scan (squares and cubes, restricted root lengths)
at several prefix lengths, plus the exhaustive scan at 600.  The numba run
is warmed up first so JIT compilation is excluded.
"""

import time

from tribcount import _kernels, oracle


def time_scan(n, exhaustive, backend, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        oracle.scan_repetitions(n, exhaustive=exhaustive, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    backends = ["numpy"]
    if _kernels.HAVE_NUMBA:
        backends.insert(0, "numba")
        # warm up: compile the jitted loop once
        oracle.scan_repetitions(100, backend="numba")
    else:
        print("numba not importable; timing numpy only")

    cases = [(1000, False), (3000, False), (5000, False), (600, True)]
    print(f"{'scan':<22}" + "".join(f"{b:>12}" for b in backends) + f"{'ratio':>10}")
    for n, exhaustive in cases:
        label = f"n={n}" + (" exhaustive" if exhaustive else "")
        times = {b: time_scan(n, exhaustive, b, repeats=3) for b in backends}
        row = f"{label:<22}"
        for b in backends:
            row += f"{times[b] * 1e3:>10.2f}ms"
        if len(backends) == 2:
            row += f"{times['numpy'] / times['numba']:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()

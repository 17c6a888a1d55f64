#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on the workloads the suite actually exercises and prints a
small table.  Note the two backends differ in algorithm for the +3-run
confirmation (stepping vs. square-window scan), so that row compares
strategies, not just languages; the orbit and enumeration rows compare the
same algorithm in C and in Python.

Usage: python benchmarks/bench_backends.py
"""

import time

from imocheck import _kernel_py

try:
    from imocheck import _kernel_cy
except ImportError:
    _kernel_cy = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


CASES = [
    ("isqrt sweep to 2*10^5", lambda k: sum(k.isqrt(x) for x in range(2, 200_000))),
    ("orbit_fill(9998, 10^6)", lambda k: len(k.orbit_fill(9998, 1_000_000))),
    ("confirm_plus3_run(2, 10^7)", lambda k: k.confirm_plus3_run(2, 10_000_000)),
    ("enum_tilings(3, 5)", lambda k: len(k.enum_tilings(3, 5))),
    ("enum_tilings(4, 4)", lambda k: len(k.enum_tilings(4, 4))),
]


def main():
    backends = [("pure", _kernel_py)]
    if _kernel_cy is not None:
        backends.append(("cython", _kernel_cy))
    else:
        print("compiled kernel not available; timing the fallback only")
    width = max(len(name) for name, _ in CASES)
    header = f"{'case':<{width}}  " + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for case_name, case in CASES:
        times = []
        results = []
        for _, kernel in backends:
            t, r = timed(case, kernel)
            times.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), f"backends disagree on {case_name}"
        row = f"{case_name:<{width}}  " + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

"""Benchmark: compiled elimination kernel versus the NumPy fallback.

Times reduced-row-echelon elimination over F_p on a few shapes that mirror
the package's real workloads (stacked action maps, Sylvester systems,
bilinear-form constraints).  Run after `pip install -e . --no-build-isolation`:

    python benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from spincert import _modp_fallback

try:
    from spincert import _modp_core
except ImportError:
    _modp_core = None

P = 1_000_003

SHAPES = [
    ("stacked action map", 106, 91),
    ("square dense", 300, 300),
    ("sylvester stack", 2560, 256),
    ("wide kernel", 200, 1200),
]


def bench(fn, a, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(a, P)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'shape':<22} {'rows x cols':<12} {'numpy':>10} {'cython':>10} {'speedup':>8}")
    for name, rows, cols in SHAPES:
        a = rng.integers(0, P, size=(rows, cols), dtype=np.int64)
        t_py = bench(_modp_fallback.rref, a, args.repeats)
        if _modp_core is not None:
            t_cy = bench(_modp_core.rref, a, args.repeats)
            r_py = _modp_fallback.rref(a, P)
            r_cy = _modp_core.rref(a, P)
            assert r_py[1] == r_cy[1] and np.array_equal(r_py[0], r_cy[0]), "backends disagree"
            print(f"{name:<22} {rows}x{cols:<8} {t_py*1e3:>8.1f}ms {t_cy*1e3:>8.1f}ms {t_py/t_cy:>7.1f}x")
        else:
            print(f"{name:<22} {rows}x{cols:<8} {t_py*1e3:>8.1f}ms {'absent':>10} {'-':>8}")
    if _modp_core is None:
        print("compiled kernel not built; install with `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()

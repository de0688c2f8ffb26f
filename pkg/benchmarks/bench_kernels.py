"""Benchmark: compiled quaternion kernel vs the numpy fallback.

The quaternion matrix product is the one kernel numpy has no native
dtype for, and every quaternionic composition in the campaigns goes
through it.  This script times both implementations across the square
sizes the campaigns use and prints the speedup.

    python benchmarks/bench_kernels.py [--repeats 200]
"""

import argparse
import time

import numpy as np

from daggerlab._quatmul_py import quat_matmul as numpy_kernel

try:
    from daggerlab._quatmul import quat_matmul as compiled_kernel
except ImportError:
    compiled_kernel = None


def time_kernel(fn, a, b, repeats):
    fn(a, b)  # warm up
    start = time.perf_counter()
    for _ in range(repeats):
        fn(a, b)
    return (time.perf_counter() - start) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--sizes", default="1,2,4,8,16,32,64")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'n':>4}  {'numpy (us)':>12}  {'compiled (us)':>14}  {'speedup':>8}")
    for n in sizes:
        a = np.ascontiguousarray(rng.normal(size=(n, n, 4)))
        b = np.ascontiguousarray(rng.normal(size=(n, n, 4)))
        t_py = time_kernel(numpy_kernel, a, b, args.repeats)
        if compiled_kernel is None:
            print(f"{n:>4}  {t_py * 1e6:>12.2f}  {'not built':>14}  {'-':>8}")
            continue
        t_c = time_kernel(compiled_kernel, a, b, args.repeats)
        np.testing.assert_allclose(compiled_kernel(a, b), numpy_kernel(a, b), atol=1e-12)
        print(f"{n:>4}  {t_py * 1e6:>12.2f}  {t_c * 1e6:>14.2f}  {t_py / t_c:>7.1f}x")

    if compiled_kernel is None:
        print("\ncompiled kernel unavailable; the package is running on the numpy fallback")


if __name__ == "__main__":
    main()

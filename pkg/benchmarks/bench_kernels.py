#!/usr/bin/env python3
"""Compare the compiled convolution kernels against the pure-Python fallback.

Runs the raw kernels on representative workloads and a full recursion build,
and prints a timing table.  Usage: python3 benchmarks/bench_kernels.py
"""

import random
import time

from qident import _kernels_py

try:
    from qident import _kernels
except ImportError:
    _kernels = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_pair(name, make_args, runner):
    args = make_args()
    t_py = timeit(lambda: runner(_kernels_py, *args))
    row = f"{name:<42} python {t_py * 1e3:9.2f} ms"
    if _kernels is not None:
        t_cy = timeit(lambda: runner(_kernels, *args))
        row += f"   cython {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:5.2f}x"
        assert runner(_kernels, *args) == runner(_kernels_py, *args)
    print(row)


def main():
    rng = random.Random(1)

    def univariate():
        c1 = [rng.randint(-10**6, 10**6) for _ in range(400)]
        c2 = [rng.randint(-10**6, 10**6) for _ in range(400)]
        return (c1, c2, 400)

    def bivariate():
        m1 = [[rng.randint(-100, 100) for _ in range(150)] for _ in range(10)]
        m2 = [[rng.randint(-100, 100) for _ in range(150)] for _ in range(10)]
        return (m1, m2, 10, 150)

    bench_pair("univariate conv, order 400", univariate, lambda k, *a: k.conv_trunc(*a))
    bench_pair("bivariate mul, 10 x 150", bivariate, lambda k, *a: k.bivar_mul(*a))

    # end-to-end: the recursion build dominated by the kernels
    import qident._backend as backend
    from qident import appell

    def build():
        appell.build_R(2, 80, 80)

    for name, kernels in [("python", _kernels_py)] + (
        [("cython", _kernels)] if _kernels is not None else []
    ):
        backend.conv_trunc = kernels.conv_trunc
        backend.bivar_mul = kernels.bivar_mul
        # series.py binds the kernels at import; rebind for the benchmark
        import qident.series as series

        series.conv_trunc = kernels.conv_trunc
        series.bivar_mul = kernels.bivar_mul
        print(f"{'build_R(k=2, j_max=80, q_order=80)':<42} {name:<6} {timeit(build) * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()

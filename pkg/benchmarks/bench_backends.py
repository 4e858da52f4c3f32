"""Timing comparison for the two kernel backends and the dense oracle.

Runs matrix_power on a sweep of orders with the numba kernels and with
the pure-numpy fallback (selected through PENTAPOW_BACKEND), and times
dense repeated squaring on the same inputs.  Informative only; nothing
here gates the test suite.

    python benchmarks/bench_backends.py --sizes 8,32,128,512 --exponent 8
"""

import argparse
import os
import time

import numpy as np

from pentapow import build_matrix, dense_inverse, dense_power, matrix_power
from pentapow import PentaParams
from pentapow._backend import HAS_NUMBA

# mildly asymmetric non-degenerate defaults; eigenvalues stay simple and
# away from zero for every even order
DEFAULT_PARAMS = (0.3, -0.2, 1.1, 0.9, 0.7, 1.3)


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_backend(backend, sizes, exponent, repeats, max_oracle_n):
    os.environ["PENTAPOW_BACKEND"] = backend
    rows = []
    for n in sizes:
        p = PentaParams(*DEFAULT_PARAMS, n=n)
        result = matrix_power(p, exponent)  # warm (JIT, caches)
        closed = best_of(lambda: matrix_power(p, exponent), repeats)
        oracle = float("nan")
        gap = float("nan")
        if n <= max_oracle_n:
            dense = build_matrix(p)

            def oracle_power():
                base = dense if exponent >= 0 else dense_inverse(dense)
                return dense_power(base, abs(exponent))

            reference = oracle_power()
            oracle = best_of(oracle_power, repeats)
            scale = max(1.0, float(np.abs(reference).max()))
            gap = float(np.abs(result.matrix - reference).max()) / scale
        rows.append((n, closed, oracle, gap))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="8,32,128,512",
                        help="comma-separated even orders")
    parser.add_argument("--exponent", type=int, default=8)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--max-oracle-n", type=int, default=512,
                        help="skip dense timing above this order")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    if any(n < 2 or n % 2 for n in sizes):
        parser.error("orders must be even and >= 2")

    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    if not HAS_NUMBA:
        print("numba not installed; timing the numpy fallback only")

    saved = os.environ.get("PENTAPOW_BACKEND")
    try:
        print(f"exponent {args.exponent}, best of {args.repeats}")
        print(f"{'n':>6} {'backend':>8} {'closed-form':>12} "
              f"{'dense oracle':>12} {'rel gap':>10}")
        for backend in backends:
            rows = run_backend(backend, sizes, args.exponent, args.repeats,
                               args.max_oracle_n)
            for n, closed, oracle, gap in rows:
                print(f"{n:>6} {backend:>8} {closed * 1e3:>10.3f}ms "
                      f"{oracle * 1e3:>10.3f}ms {gap:>10.2e}")
    finally:
        if saved is None:
            os.environ.pop("PENTAPOW_BACKEND", None)
        else:
            os.environ["PENTAPOW_BACKEND"] = saved


if __name__ == "__main__":
    main()

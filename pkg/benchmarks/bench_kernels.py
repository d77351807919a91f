"""Benchmark the numba-jitted hot kernels against their pure-numpy fallbacks.

Usage:
    python benchmarks/bench_kernels.py [--repeats 50]

Run with JACKTORUS_DISABLE_NUMBA=1 to confirm the dispatch itself; this
script always times both implementations directly, whichever one the
package-level dispatch selected.
"""

import argparse
import time

import numpy as np

from jacktorus import _accel
from jacktorus.coeffs import CoeffStore
from jacktorus.kernels import FloatCoeffs
from jacktorus.scalars import make_kappa
from jacktorus.tableaux import Partition


def timeit(fn, repeats):
    fn()  # warm-up (includes JIT compilation)
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=50)
    args = parser.parse_args()

    print(f"numba active: {_accel.HAS_NUMBA}")
    rows = []

    # phase-weighted matrix sum over a realistic grade (shape (2,1), grade 8)
    store = CoeffStore(Partition((2, 1)), make_kappa(1, 5, (2, 1)))
    fc = FloatCoeffs(store)
    gammas, mats = fc.grade_arrays(8)
    theta = np.random.default_rng(0).uniform(-np.pi, np.pi, 3)
    if _accel.HAS_NUMBA:
        rows.append(
            (
                "phase_matrix_sum (48 terms)",
                timeit(lambda: _accel.phase_matrix_sum(gammas, mats, theta), args.repeats),
                timeit(lambda: _accel.phase_matrix_sum_np(gammas, mats, theta), args.repeats),
            )
        )

    # Hermitian Jacobi eigensolver on a 16x16 matrix (largest N<=6 module)
    rng = np.random.default_rng(1)
    a = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    h = (a + a.conj().T) / 2
    if _accel.HAS_NUMBA:
        rows.append(
            (
                "jacobi_eigvals (16x16)",
                timeit(lambda: _accel.jacobi_eigvals(h), args.repeats),
                timeit(lambda: _accel.jacobi_eigvals_np(h), args.repeats),
            )
        )

    # RK4 transport of the connection, 2000 steps
    theta0 = np.array([0.1, 2.0, 4.2])
    theta1 = theta0 + 0.3
    pmats = rng.normal(size=(3, 2, 2)).astype(np.complex128)
    pi = np.array([0, 0, 1])
    pj = np.array([1, 2, 2])

    def run_nb():
        _accel.rk4_transport(theta0, theta1, 2000, 0.25, 0.0, pmats, pi, pj)

    def run_np():
        _accel.rk4_transport_np(theta0, theta1, 2000, 0.25, 0.0, pmats, pi, pj)

    if _accel.HAS_NUMBA:
        rows.append(("rk4_transport (2000 steps)", timeit(run_nb, max(3, args.repeats // 10)), timeit(run_np, max(3, args.repeats // 10))))
    else:
        rows.append(("rk4_transport (2000 steps, numpy only)", timeit(run_np, 3), timeit(run_np, 3)))

    print(f"{'kernel':<40} {'jit (ms)':>10} {'numpy (ms)':>12} {'speedup':>9}")
    for name, t_nb, t_np in rows:
        print(f"{name:<40} {t_nb * 1e3:>10.3f} {t_np * 1e3:>12.3f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()

"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the Jacobi eigensolver and the partial-trace gather on representative
problem sizes and prints a timing table.  The numba path is skipped (with a
note) when numba is unavailable.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spinboost.constants import COMPOSITE_DIMS, JACOBI_OFF_TOL, MAX_JACOBI_SWEEPS
from spinboost.kernels import (
    HAS_NUMBA,
    jacobi_sweeps_numpy,
    ptrace_numpy,
)
from spinboost.linalg import _axis_offsets

if HAS_NUMBA:
    from spinboost.kernels import jacobi_sweeps_numba, ptrace_numba


def random_hermitian(n: int, rng) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2.0


def time_call(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(repeats: int) -> list[tuple[str, float, float | None]]:
    rng = np.random.default_rng(42)
    rows = []
    for n in (8, 16, 32):
        h = random_hermitian(n, rng)
        tol = JACOBI_OFF_TOL * max(1.0, np.linalg.norm(h))

        def run(kernel, h=h, tol=tol):
            a = h.copy()
            v = np.eye(len(h), dtype=np.complex128)
            kernel(a, v, MAX_JACOBI_SWEEPS, tol)

        t_np = time_call(run, jacobi_sweeps_numpy, repeats=repeats)
        t_nb = None
        if HAS_NUMBA:
            run(jacobi_sweeps_numba)  # JIT warmup
            t_nb = time_call(run, jacobi_sweeps_numba, repeats=repeats)
        rows.append((f"jacobi {n}x{n}", t_np, t_nb))
    return rows


def bench_ptrace(repeats: int) -> list[tuple[str, float, float | None]]:
    rng = np.random.default_rng(43)
    dim = int(np.prod(COMPOSITE_DIMS))
    amp = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    amp /= np.linalg.norm(amp)
    rho = np.outer(amp, amp.conj())
    cases = {
        "ptrace 216->8 (spins)": (1, 3, 5),
        "ptrace 216->27 (momenta)": (0, 2, 4),
        "ptrace 216->36 (one pair)": (0, 1),
    }
    rows = []
    for label, keep in cases.items():
        traced = tuple(i for i in range(len(COMPOSITE_DIMS)) if i not in keep)
        keep_off = _axis_offsets(COMPOSITE_DIMS, keep)
        tr_off = _axis_offsets(COMPOSITE_DIMS, traced)
        out = np.empty((keep_off.size, keep_off.size), dtype=np.complex128)

        t_np = time_call(ptrace_numpy, rho, keep_off, tr_off, out, repeats=repeats)
        t_nb = None
        if HAS_NUMBA:
            ptrace_numba(rho, keep_off, tr_off, out)  # JIT warmup
            t_nb = time_call(
                ptrace_numba, rho, keep_off, tr_off, out, repeats=repeats
            )
        rows.append((label, t_np, t_nb))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    rows = bench_jacobi(args.repeats) + bench_ptrace(args.repeats)
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numpy':>12}  {'numba':>12}  {'speedup':>8}")
    for label, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{label:<{width}}  {t_np * 1e6:>10.1f}us  {'n/a':>12}  {'':>8}")
        else:
            print(
                f"{label:<{width}}  {t_np * 1e6:>10.1f}us  {t_nb * 1e6:>10.1f}us"
                f"  {t_np / t_nb:>7.1f}x"
            )
    if not HAS_NUMBA:
        print("numba not available; only the numpy fallback was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

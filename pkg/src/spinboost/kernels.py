"""Hot numerical kernels: cyclic Jacobi diagonalization and partial trace.

Each kernel ships in two versions: an explicit-loop implementation
compiled with numba's @njit, and a vectorized pure-numpy fallback.  The
backend is chosen once at import time — numba when importable, unless
the environment variable SPINBOOST_NUMBA is set to 0/false/off, in
which case the numpy path is forced.  benchmarks/bench_kernels.py times
the two against each other.

Both versions implement the same algorithms; results agree to float
roundoff.  The Jacobi routine operates in place: `a` is rotated towards
diagonal form while unitary columns accumulate in `v`, and the return
value is the number of sweeps used (-1 if the off-diagonal Frobenius
norm never reached `tol` within `max_sweeps`).
"""

from __future__ import annotations

import os
import warnings

import numpy as np

_env = os.environ.get("SPINBOOST_NUMBA", "").strip().lower()
_numba_allowed = _env not in ("0", "false", "off", "no")

HAS_NUMBA = False
if _numba_allowed:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        warnings.warn("numba is not importable; using pure-numpy kernels")


def _jacobi_sweeps_py(a, v, max_sweeps, tol):
    # Explicit-loop cyclic Jacobi for Hermitian a.  For pivot (p, q) the
    # 2x2 block [[app, apq], [conj(apq), aqq]] is diagonalized by
    # J = [[c*ph, s*ph], [-s, c]] with ph = apq/|apq| and the classic
    # stable tangent t of the real rotation; a <- J^H a J, v <- v J.
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = a[p, q]
                off2 += x.real * x.real + x.imag * x.imag
        if np.sqrt(2.0 * off2) <= tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                ph = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * (ph * akp) - s * akq
                    a[k, q] = s * (ph * akp) + c * akq
                phc = ph.conjugate()
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * (phc * apk) - s * aqk
                    a[q, k] = s * (phc * apk) + c * aqk
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * (ph * vkp) - s * vkq
                    v[k, q] = s * (ph * vkp) + c * vkq
    off2 = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            x = a[p, q]
            off2 += x.real * x.real + x.imag * x.imag
    if np.sqrt(2.0 * off2) <= tol:
        return max_sweeps
    return -1


def jacobi_sweeps_numpy(a, v, max_sweeps, tol):
    """Cyclic Jacobi with vectorized row/column rotations (numpy fallback)."""
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = a - np.diag(np.diagonal(a))
        if np.linalg.norm(off) <= tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                ph = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = ph * a[:, p]
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = ph.conjugate() * a[p, :]
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                vp = ph * v[:, p]
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = a - np.diag(np.diagonal(a))
    if np.linalg.norm(off) <= tol:
        return max_sweeps
    return -1


def _ptrace_py(rho, keep_off, tr_off, out):
    # out[i, j] = sum_t rho[keep_off[i] + tr_off[t], keep_off[j] + tr_off[t]]
    kn = keep_off.shape[0]
    tn = tr_off.shape[0]
    for i in range(kn):
        for j in range(kn):
            acc = 0.0 + 0.0j
            for t in range(tn):
                acc += rho[keep_off[i] + tr_off[t], keep_off[j] + tr_off[t]]
            out[i, j] = acc
    return out


def ptrace_numpy(rho, keep_off, tr_off, out):
    """Partial trace by fancy-indexed gather (numpy fallback)."""
    idx = keep_off[:, None] + tr_off[None, :]
    gathered = rho[idx[:, None, :], idx[None, :, :]]
    np.sum(gathered, axis=2, out=out)
    return out


if HAS_NUMBA:
    jacobi_sweeps_numba = njit(cache=True)(_jacobi_sweeps_py)
    ptrace_numba = njit(cache=True)(_ptrace_py)
    jacobi_sweeps = jacobi_sweeps_numba
    ptrace_kernel = ptrace_numba
else:
    jacobi_sweeps = jacobi_sweeps_numpy
    ptrace_kernel = ptrace_numpy

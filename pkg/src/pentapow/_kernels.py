"""Numeric kernels, each in a numba flavor and a pure-numpy flavor.

The public functions at the bottom dispatch per call via _backend.use_numba().
Loop bodies and their vectorized twins keep the same operation order so the
two backends agree to rounding (structural zeros agree exactly: both start
from np.zeros and never write the zero-parity slots).
"""

import numpy as np

from ._backend import HAS_NUMBA, use_numba

if HAS_NUMBA:
    from numba import njit


# ---------------------------------------------------------------- sequences

def _ab_tables_loops(a1, a2, b1, b2, c1, c2, xs, m):
    npts = xs.shape[0]
    avals = np.zeros((npts, m + 1), np.complex128)
    bvals = np.zeros((npts, m + 1), np.complex128)
    for p in range(npts):
        x = xs[p]
        bvals[p, 0] = 1.0
        if m >= 1:
            avals[p, 1] = 1.0
        for idx in range(2, m + 1):
            if idx % 2 == 0:
                a, b, c = a1, b1, c1
            else:
                a, b, c = a2, b2, c2
            if idx >= 4:
                avals[p, idx] = ((x - a) * avals[p, idx - 2] - c * avals[p, idx - 4]) / b
                bvals[p, idx] = ((x - a) * bvals[p, idx - 2] - c * bvals[p, idx - 4]) / b
            else:
                avals[p, idx] = (x - a) * avals[p, idx - 2] / b
                bvals[p, idx] = (x - a) * bvals[p, idx - 2] / b
    return avals, bvals


def _ab_tables_numpy(a1, a2, b1, b2, c1, c2, xs, m):
    npts = xs.shape[0]
    avals = np.zeros((npts, m + 1), np.complex128)
    bvals = np.zeros((npts, m + 1), np.complex128)
    bvals[:, 0] = 1.0
    if m >= 1:
        avals[:, 1] = 1.0
    for idx in range(2, m + 1):
        if idx % 2 == 0:
            a, b, c = a1, b1, c1
        else:
            a, b, c = a2, b2, c2
        if idx >= 4:
            avals[:, idx] = ((xs - a) * avals[:, idx - 2] - c * avals[:, idx - 4]) / b
            bvals[:, idx] = ((xs - a) * bvals[:, idx - 2] - c * bvals[:, idx - 4]) / b
        else:
            avals[:, idx] = (xs - a) * avals[:, idx - 2] / b
            bvals[:, idx] = (xs - a) * bvals[:, idx - 2] / b
    return avals, bvals


# ------------------------------------------------------------ power assembly

def _assemble_power_loops(bod, aev, wq_odd, wq_even, r1sq, r2sq):
    t = bod.shape[0]
    n = bod.shape[1]
    out = np.zeros((n, n), np.complex128)
    scale = 1.0 + 0.0j
    for jj in range(0, n, 2):
        for ii in range(0, n, 2):
            acc = 0.0j
            for z in range(t):
                acc += wq_odd[z] * bod[z, ii] * bod[z, jj]
            out[ii, jj] = acc * scale
        scale = scale * r1sq
    scale = 1.0 + 0.0j
    for jj in range(1, n, 2):
        for ii in range(1, n, 2):
            acc = 0.0j
            for z in range(t):
                acc += wq_even[z] * aev[z, ii] * aev[z, jj]
            out[ii, jj] = acc * scale
        scale = scale * r2sq
    return out


def _assemble_power_numpy(bod, aev, wq_odd, wq_even, r1sq, r2sq):
    t = bod.shape[0]
    n = bod.shape[1]
    out = np.zeros((n, n), np.complex128)
    bsub = bod[:, 0::2]
    asub = aev[:, 1::2]
    r1p = np.cumprod(np.concatenate((np.ones(1, np.complex128),
                                     np.full(t - 1, r1sq, np.complex128))))
    r2p = np.cumprod(np.concatenate((np.ones(1, np.complex128),
                                     np.full(t - 1, r2sq, np.complex128))))
    out[0::2, 0::2] = (bsub.T @ (wq_odd[:, None] * bsub)) * r1p[None, :]
    out[1::2, 1::2] = (asub.T @ (wq_even[:, None] * asub)) * r2p[None, :]
    return out


# ------------------------------------------------------------ dense oracle

def _mat_mul_loops(a, b):
    n = a.shape[0]
    k = a.shape[1]
    m = b.shape[1]
    out = np.zeros((n, m), np.complex128)
    for i in range(n):
        for kk in range(k):
            aik = a[i, kk]
            for j in range(m):
                out[i, j] += aik * b[kk, j]
    return out


def _mat_mul_numpy(a, b):
    # einsum keeps plain sum-over-k semantics (no BLAS reassociation)
    return np.einsum("ik,kj->ij", a, b)


def _ge_inverse_loops(mat, tol):
    n = mat.shape[0]
    aug = np.zeros((n, 2 * n), np.complex128)
    for i in range(n):
        for j in range(n):
            aug[i, j] = mat[i, j]
        aug[i, n + i] = 1.0
    for k in range(n):
        p = k
        best = abs(aug[k, k])
        for i in range(k + 1, n):
            v = abs(aug[i, k])
            if v > best:
                best = v
                p = i
        if best <= tol:
            return aug[:, n:], k
        if p != k:
            for j in range(2 * n):
                tmp = aug[k, j]
                aug[k, j] = aug[p, j]
                aug[p, j] = tmp
        piv = aug[k, k]
        for i in range(k + 1, n):
            f = aug[i, k] / piv
            if f != 0.0:
                for j in range(k, 2 * n):
                    aug[i, j] = aug[i, j] - f * aug[k, j]
    inv = np.zeros((n, n), np.complex128)
    for k in range(n - 1, -1, -1):
        for j in range(n):
            acc = aug[k, n + j]
            for i in range(k + 1, n):
                acc -= aug[k, i] * inv[i, j]
            inv[k, j] = acc / aug[k, k]
    return inv, -1


def _ge_inverse_numpy(mat, tol):
    n = mat.shape[0]
    aug = np.concatenate((mat.astype(np.complex128, copy=True),
                          np.eye(n, dtype=np.complex128)), axis=1)
    for k in range(n):
        p = k + int(np.argmax(np.abs(aug[k:, k])))
        if abs(aug[p, k]) <= tol:
            return aug[:, n:], k
        if p != k:
            aug[[k, p]] = aug[[p, k]]
        f = aug[k + 1:, k] / aug[k, k]
        aug[k + 1:, k:] -= f[:, None] * aug[k, k:][None, :]
    inv = np.zeros((n, n), np.complex128)
    for k in range(n - 1, -1, -1):
        inv[k] = (aug[k, n:] - aug[k, k + 1:n] @ inv[k + 1:]) / aug[k, k]
    return inv, -1


def _ge_det_loops(mat):
    n = mat.shape[0]
    a = mat.copy()
    det = 1.0 + 0.0j
    for k in range(n):
        p = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            v = abs(a[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return 0.0j
        if p != k:
            for j in range(k, n):
                tmp = a[k, j]
                a[k, j] = a[p, j]
                a[p, j] = tmp
            det = -det
        piv = a[k, k]
        for i in range(k + 1, n):
            f = a[i, k] / piv
            if f != 0.0:
                for j in range(k + 1, n):
                    a[i, j] = a[i, j] - f * a[k, j]
        det *= piv
    return det


def _ge_det_numpy(mat):
    n = mat.shape[0]
    a = mat.astype(np.complex128, copy=True)
    det = 1.0 + 0.0j
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) == 0.0:
            return 0.0j
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        f = a[k + 1:, k] / a[k, k]
        a[k + 1:, k + 1:] -= f[:, None] * a[k, k + 1:][None, :]
        det *= a[k, k]
    return det


if HAS_NUMBA:
    _ab_tables_jit = njit(cache=True)(_ab_tables_loops)
    _assemble_power_jit = njit(cache=True)(_assemble_power_loops)
    _mat_mul_jit = njit(cache=True)(_mat_mul_loops)
    _ge_inverse_jit = njit(cache=True)(_ge_inverse_loops)
    _ge_det_jit = njit(cache=True)(_ge_det_loops)


def _c128(x):
    return np.ascontiguousarray(x, dtype=np.complex128)


def ab_tables(a1, a2, b1, b2, c1, c2, xs, m):
    """Tables of the two recurrence sequences at each point of xs.

    Returns (avals, bvals), each of shape (len(xs), m+1); column idx holds
    the degree-idx sequence value.
    """
    xs = _c128(np.atleast_1d(xs))
    args = (complex(a1), complex(a2), complex(b1),
            complex(b2), complex(c1), complex(c2), xs, int(m))
    if use_numba():
        return _ab_tables_jit(*args)
    return _ab_tables_numpy(*args)


def assemble_power(bod, aev, wq_odd, wq_even, r1sq, r2sq):
    """Assemble the full power matrix from per-eigenvalue tables.

    bod/aev: (t, n) sequence tables at the odd-family / even-family
    eigenvalues; wq_odd/wq_even: weight times eigenvalue power, length t;
    r1sq/r2sq: squared band ratios used for the column scaling.
    """
    args = (_c128(bod), _c128(aev), _c128(wq_odd), _c128(wq_even),
            complex(r1sq), complex(r2sq))
    if use_numba():
        return _assemble_power_jit(*args)
    return _assemble_power_numpy(*args)


def mat_mul(a, b):
    if use_numba():
        return _mat_mul_jit(_c128(a), _c128(b))
    return _mat_mul_numpy(_c128(a), _c128(b))


def ge_inverse(mat, tol):
    """Gauss elimination inverse; returns (inv, bad_step) with bad_step=-1 on success."""
    if use_numba():
        return _ge_inverse_jit(_c128(mat), float(tol))
    return _ge_inverse_numpy(_c128(mat), float(tol))


def ge_det(mat):
    if use_numba():
        return complex(_ge_det_jit(_c128(mat)))
    return complex(_ge_det_numpy(_c128(mat)))

"""Dense reference routines for verifying the closed-form results.

Everything here works on plain square complex ndarrays with elementary
algorithms: entrywise products, repeated squaring, Gaussian elimination with
partial pivoting on the modulus.  This module never imports the spectral or
power machinery; its independence is what makes the cross-checks meaningful.
"""

import logging

import numpy as np

from ._kernels import ge_det, ge_inverse, mat_mul
from .errors import DimensionMismatch, NonFinite, NumericallySingular

log = logging.getLogger(__name__)

# pivot gate relative to the row-sum norm of the input
PIVOT_RTOL = 1e-13


def _as_square(m, name):
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise NonFinite(f"{name} contains non-finite entries")
    return arr


def _norm_inf(m):
    return float(np.abs(m).sum(axis=1).max())


def dense_multiply(a, b):
    """Plain sum-over-k product of two equal-order square matrices."""
    a = _as_square(a, "left factor")
    b = _as_square(b, "right factor")
    if a.shape != b.shape:
        raise DimensionMismatch(
            f"orders differ: {a.shape[0]} vs {b.shape[0]}")
    return mat_mul(a, b)


def dense_power(m, s):
    """M^s for integer s >= 0 by repeated squaring; M^0 is the identity."""
    m = _as_square(m, "matrix")
    s = int(s)
    if s < 0:
        raise ValueError(
            "dense_power handles s >= 0 only; invert first for negative powers")
    result = np.eye(m.shape[0], dtype=np.complex128)
    base = m
    while s:
        if s & 1:
            result = dense_multiply(result, base)
        s >>= 1
        if s:
            base = dense_multiply(base, base)
    return result


def dense_inverse(m):
    """Inverse by Gaussian elimination, partial pivoting on modulus.

    Raises NumericallySingular when a pivot modulus drops to
    PIVOT_RTOL times the row-sum norm of the input.  The residual
    max-norm of M @ inv - I is reported on the debug log.
    """
    m = _as_square(m, "matrix")
    tol = PIVOT_RTOL * _norm_inf(m)
    inv, bad_step = ge_inverse(m, tol)
    if bad_step >= 0:
        raise NumericallySingular(
            f"pivot modulus at elimination step {bad_step} is below "
            f"{tol:.3e}")
    residual = float(np.abs(mat_mul(m, inv) - np.eye(m.shape[0])).max())
    log.debug("dense_inverse residual max|M@inv - I| = %.3e", residual)
    return inv


def dense_determinant(m):
    """Determinant as the signed product of elimination pivots.

    A singular matrix gives exactly 0, never an error.
    """
    m = _as_square(m, "matrix")
    return ge_det(m)

"""Integer powers W(s) = K_n^s assembled entrywise from the spectral closed form.

For 1-based indices, w_ij(s) vanishes exactly when i + j is odd.  Otherwise
with t = n/2 and l = j-1 (odd j) or j-2 (even j):

    odd  j:  w_ij = sum_z q_{2z-1} r1^l alpha_{2z-1}^s B_{i-1} B_{j-1}  at alpha_{2z-1}
    even j:  w_ij = sum_z q_{2z}   r2^l alpha_{2z}^s   A_{i-1} A_{j-1}  at alpha_{2z}

Negative s is legal once no eigenvalue is (numerically) zero; the scalar
powers are then taken of the reciprocals.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import ab_tables, assemble_power
from .errors import SingularMatrix, UnsupportedOddOrder
from .penta_core import validate_params
from .spectral import eigenvalues

# invertibility gate, relative to the spectral radius
SINGULARITY_RTOL = 1e-12


@dataclass(frozen=True)
class PowerResult:
    """A computed integer power and the spectrum it came from."""
    exponent: int
    matrix: np.ndarray
    spectrum_used: object

    def __post_init__(self):
        self.matrix.setflags(write=False)


@dataclass(frozen=True)
class InvertibilityReport:
    """Outcome of the zero-eigenvalue scan; truthy iff invertible.

    offending holds the 1-based indices k whose |alpha_k| fell at or below
    the threshold.
    """
    invertible: bool
    offending: tuple
    min_modulus: float
    threshold: float

    def __bool__(self):
        return self.invertible


def _ipow(values, s):
    """Elementwise integer power by binary exponentiation; s may be negative."""
    values = np.asarray(values, np.complex128)
    s = int(s)
    if s < 0:
        values = 1.0 / values
        s = -s
    out = np.ones_like(values)
    base = values.copy()
    while s:
        if s & 1:
            out = out * base
        s >>= 1
        if s:
            base = base * base
    return out


def check_invertible(p, spec):
    """Scan for (near-)zero eigenvalues; returns a truthy/falsy report."""
    validate_params(p)
    if p.n % 2 != 0:
        raise UnsupportedOddOrder(
            f"invertibility scan requires an even order, got n={p.n}")
    moduli = np.abs(spec.eigenvalues)
    threshold = SINGULARITY_RTOL * max(1.0, float(moduli.max()))
    offending = tuple(int(k) + 1 for k in np.nonzero(moduli <= threshold)[0])
    return InvertibilityReport(
        invertible=not offending,
        offending=offending,
        min_modulus=float(moduli.min()),
        threshold=threshold,
    )


def _gate_negative(p, spec, s):
    if s < 0:
        report = check_invertible(p, spec)
        if not report:
            raise SingularMatrix(
                f"negative power {s} impossible: eigenvalue index(es) "
                f"{report.offending} have modulus <= {report.threshold:.3e}")


def power_entry(p, spec, s, i, j):
    """Single entry w_ij(s), 1-based indices."""
    validate_params(p)
    n = int(p.n)
    if n % 2 != 0:
        raise UnsupportedOddOrder(
            f"power form requires an even order, got n={n}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must be in 1..{n}, got ({i}, {j})")
    s = int(s)
    _gate_negative(p, spec, s)
    if (i + j) % 2 == 1:
        return 0j
    fam = spec.eigenvalues[0::2] if j % 2 == 1 else spec.eigenvalues[1::2]
    q = spec.weights[0::2] if j % 2 == 1 else spec.weights[1::2]
    avals, bvals = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2,
                             fam, max(i, j) - 1)
    vals = bvals if j % 2 == 1 else avals
    r = spec.r1 if j % 2 == 1 else spec.r2
    l = j - 1 if j % 2 == 1 else j - 2
    rl = (r * r) ** (l // 2)
    total = np.sum(q * _ipow(fam, s) * vals[:, i - 1] * vals[:, j - 1])
    return complex(rl * total)


def matrix_power(p, s):
    """Full W(s) = K_n^s as a PowerResult.

    Raises SingularMatrix for s < 0 when an eigenvalue is numerically zero,
    DegenerateSpectrum when the spectrum fails the separation gate.
    """
    validate_params(p)
    n = int(p.n)
    if n % 2 != 0:
        raise UnsupportedOddOrder(
            f"power form requires an even order, got n={n}")
    s = int(s)
    spec = eigenvalues(p)
    _gate_negative(p, spec, s)
    alpha_odd = spec.eigenvalues[0::2]
    alpha_even = spec.eigenvalues[1::2]
    _, bod = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2, alpha_odd, n - 1)
    aev, _ = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2, alpha_even, n - 1)
    wq_odd = spec.weights[0::2] * _ipow(alpha_odd, s)
    wq_even = spec.weights[1::2] * _ipow(alpha_even, s)
    mat = assemble_power(bod, aev, wq_odd, wq_even,
                         spec.r1 * spec.r1, spec.r2 * spec.r2)
    return PowerResult(exponent=s, matrix=mat, spectrum_used=spec)

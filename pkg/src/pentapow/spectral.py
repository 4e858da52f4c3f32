"""Closed-form spectral data for even-order matrices.

For n = 2t the n eigenvalues interleave two independent families sharing one
set of angles theta_z = 2 z pi / (n + 2), z = 1..t:

    alpha_{2z-1} = a1 - 2 sqrt(b1 c1) cos(theta_z)
    alpha_{2z}   = a2 - 2 sqrt(b2 c2) cos(theta_z)

The weights q_k = 4 sin^2(theta_z) / (n + 2) are shared by the two families
and drive the closed-form inverse transform.  All square roots take the
principal branch (argument in (-pi/2, pi/2]); downstream power formulas use
only even powers of r1, r2, so results do not depend on that choice.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import ab_tables
from .errors import DegenerateSpectrum, UnsupportedOddOrder
from .penta_core import validate_params
from .poly_seq import chebyshev_U, eval_sequences

# eigenvalue separation gate, relative to the spectral radius
SEPARATION_RTOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues alpha_1..alpha_n (interleaved family order), weights, band ratios."""
    eigenvalues: np.ndarray
    weights: np.ndarray
    r1: complex
    r2: complex

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def order(self):
        return self.eigenvalues.size


@dataclass(frozen=True)
class TransformPair:
    """Diagonalizing matrix (eigenvector columns) and its closed-form inverse."""
    l_matrix: np.ndarray
    l_inverse: np.ndarray

    def __post_init__(self):
        self.l_matrix.setflags(write=False)
        self.l_inverse.setflags(write=False)


def _require_even(p):
    validate_params(p)
    if p.n % 2 != 0:
        raise UnsupportedOddOrder(
            f"spectral form requires an even order, got n={p.n}")


def _check_separation(alpha):
    gaps = np.abs(alpha[:, None] - alpha[None, :])
    np.fill_diagonal(gaps, np.inf)
    min_gap = float(gaps.min())
    limit = SEPARATION_RTOL * max(1.0, float(np.abs(alpha).max()))
    if min_gap < limit:
        i, j = np.unravel_index(int(np.argmin(gaps)), gaps.shape)
        raise DegenerateSpectrum(
            f"eigenvalues {i + 1} and {j + 1} coincide within {min_gap:.3e} "
            f"(threshold {limit:.3e})")


def eigenvalues(p):
    """Closed-form Spectrum of K_n for even n.

    Raises DegenerateSpectrum when two eigenvalues come closer than
    1e-9 * max(1, spectral radius); the diagonalization below needs
    simple eigenvalues.
    """
    _require_even(p)
    n = int(p.n)
    t = n // 2
    theta = np.arange(1, t + 1) * (2.0 * np.pi / (n + 2))
    cos_t = np.cos(theta)
    sb1 = np.sqrt(complex(p.b1) * complex(p.c1))
    sb2 = np.sqrt(complex(p.b2) * complex(p.c2))
    alpha = np.empty(n, np.complex128)
    alpha[0::2] = complex(p.a1) - 2.0 * sb1 * cos_t
    alpha[1::2] = complex(p.a2) - 2.0 * sb2 * cos_t
    _check_separation(alpha)
    q = (4.0 - 4.0 * cos_t * cos_t) / (n + 2)
    weights = np.empty(n, np.complex128)
    weights[0::2] = q
    weights[1::2] = q
    r1 = complex(np.sqrt(complex(p.b1) / complex(p.c1)))
    r2 = complex(np.sqrt(complex(p.b2) / complex(p.c2)))
    return Spectrum(eigenvalues=alpha, weights=weights, r1=r1, r2=r2)


def eigenvector(p, spec, j):
    """Eigenvector for alpha_j (1-based j): B-polynomial values for odd j,
    A-polynomial values for even j, unnormalized."""
    _require_even(p)
    n = int(p.n)
    if not 1 <= j <= n:
        raise ValueError(f"eigenvalue index must be in 1..{n}, got {j}")
    x = np.array([spec.eigenvalues[j - 1]])
    avals, bvals = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2, x, n - 1)
    return bvals[0].copy() if j % 2 == 1 else avals[0].copy()


def _ratio_powers(r, n):
    # exponent for column j (1-based): j-1 for odd j, j-2 for even j
    exps = np.arange(n) - (np.arange(n) % 2)
    return (r * r) ** (exps // 2)


def build_transform(p, spec):
    """Eigenvector matrix L and its closed-form inverse.

    Row i of the inverse scales the same polynomial values by q_i and an
    even power of r1 (odd i) or r2 (even i).
    """
    _require_even(p)
    n = int(p.n)
    _check_separation(spec.eigenvalues)
    avals, bvals = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2,
                             spec.eigenvalues, n - 1)
    l_matrix = np.empty((n, n), np.complex128)
    l_matrix[:, 0::2] = bvals[0::2, :].T
    l_matrix[:, 1::2] = avals[1::2, :].T
    rowvals = np.empty((n, n), np.complex128)
    rowvals[0::2, :] = bvals[0::2, :]
    rowvals[1::2, :] = avals[1::2, :]
    scale = np.empty((n, n), np.complex128)
    scale[0::2, :] = _ratio_powers(spec.r1, n)[None, :]
    scale[1::2, :] = _ratio_powers(spec.r2, n)[None, :]
    l_inverse = spec.weights[:, None] * scale * rowvals
    return TransformPair(l_matrix=l_matrix, l_inverse=l_inverse)


def char_poly_eval(p, x, form="chebyshev"):
    """det(x I - K_n) for even n, in closed form.

    form="chebyshev": product of two Chebyshev-U factors with the band
    scale factors; form="sequences": the equivalent product of the two
    degree-n/2 recurrence polynomials.  The two routes share no
    intermediate values, so their agreement is a real cross-check.
    """
    _require_even(p)
    n = int(p.n)
    t = n // 2
    x = complex(x)
    if form == "chebyshev":
        sb1 = complex(np.sqrt(complex(p.b1) * complex(p.c1)))
        sb2 = complex(np.sqrt(complex(p.b2) * complex(p.c2)))
        u1 = chebyshev_U(t, (x - complex(p.a1)) / (2.0 * sb1))
        u2 = chebyshev_U(t, (x - complex(p.a2)) / (2.0 * sb2))
        return sb1 ** t * sb2 ** t * u1 * u2
    if form == "sequences":
        ev = eval_sequences(p, x, n + 1)
        return complex((complex(p.b1) * complex(p.b2)) ** t
                       * ev.a_values[n + 1] * ev.b_values[n])
    raise ValueError(f"unknown form {form!r}")

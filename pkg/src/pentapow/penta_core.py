"""Parameters and construction of pentadiagonal 2-Toeplitz matrices.

The matrix K_n is zero except on the main diagonal and the second super- and
subdiagonals; along each of those three bands two values alternate:

    diag:          a1, a2, a1, a2, ...
    superdiag(+2): b1, b2, b1, ...
    subdiag(-2):   c1, c2, c1, ...
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import BadOrder, NonFinite, ZeroBandParameter


@dataclass(frozen=True)
class PentaParams:
    """Scalar data defining K_n: three alternating bands plus the order."""
    a1: complex
    a2: complex
    b1: complex
    b2: complex
    c1: complex
    c2: complex
    n: int


def validate_params(p):
    """Check a PentaParams instance, raising on the first violation.

    Returns the instance unchanged so calls can be chained.
    """
    if isinstance(p.n, bool) or not isinstance(p.n, (int, np.integer)):
        raise BadOrder(f"order n must be an integer, got {type(p.n).__name__}")
    if p.n < 2:
        raise BadOrder(f"order n must be at least 2, got {p.n}")
    for name in ("a1", "a2", "b1", "b2", "c1", "c2"):
        val = complex(getattr(p, name))
        if not (cmath.isfinite(val)):
            raise NonFinite(f"parameter {name} is not finite: {val}")
    for name in ("b1", "b2", "c1", "c2"):
        if complex(getattr(p, name)) == 0:
            raise ZeroBandParameter(f"band parameter {name} must be nonzero")
    return p


def build_matrix(p):
    """Dense n-by-n complex ndarray with the alternating three-band pattern."""
    validate_params(p)
    n = int(p.n)
    mat = np.zeros((n, n), dtype=np.complex128)
    idx = np.arange(n)
    mat[idx, idx] = np.where(idx % 2 == 0, complex(p.a1), complex(p.a2))
    if n > 2:
        idx = np.arange(n - 2)
        mat[idx, idx + 2] = np.where(idx % 2 == 0, complex(p.b1), complex(p.b2))
        mat[idx + 2, idx] = np.where(idx % 2 == 0, complex(p.c1), complex(p.c2))
    return mat

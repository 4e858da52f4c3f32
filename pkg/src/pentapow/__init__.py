"""Closed-form integer powers of complex pentadiagonal 2-Toeplitz matrices."""

from ._backend import HAS_NUMBA, active_backend
from .errors import (BadOrder, DegenerateSpectrum, DimensionMismatch,
                     NonFinite, NumericallySingular, PentaError,
                     SingularMatrix, UnsupportedOddOrder, ZeroBandParameter)
from .oracle import (dense_determinant, dense_inverse, dense_multiply,
                     dense_power)
from .penta_core import PentaParams, build_matrix, validate_params
from .poly_seq import (PolyCoefficients, SeqEvaluation, chebyshev_U,
                       coefficient_sequences, eval_P, eval_sequences)
from .powers import (InvertibilityReport, PowerResult, check_invertible,
                     matrix_power, power_entry)
from .spectral import (Spectrum, TransformPair, build_transform,
                       char_poly_eval, eigenvalues, eigenvector)

__version__ = "0.1.0"

__all__ = [
    "HAS_NUMBA", "active_backend",
    "PentaError", "BadOrder", "ZeroBandParameter", "NonFinite",
    "UnsupportedOddOrder", "DegenerateSpectrum", "SingularMatrix",
    "DimensionMismatch", "NumericallySingular",
    "PentaParams", "validate_params", "build_matrix",
    "SeqEvaluation", "PolyCoefficients", "eval_sequences", "eval_P",
    "coefficient_sequences", "chebyshev_U",
    "Spectrum", "TransformPair", "eigenvalues", "eigenvector",
    "build_transform", "char_poly_eval",
    "PowerResult", "InvertibilityReport", "power_entry", "matrix_power",
    "check_invertible",
    "dense_multiply", "dense_power", "dense_inverse", "dense_determinant",
    "__version__",
]

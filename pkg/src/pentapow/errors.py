"""Exception types shared across the package."""


class PentaError(Exception):
    """Base class for all errors raised by this package."""


class BadOrder(PentaError):
    """Matrix order n is not a positive integer of the required size."""


class ZeroBandParameter(PentaError):
    """One of the band parameters b1, b2, c1, c2 is zero."""


class NonFinite(PentaError):
    """A parameter is nan or infinite."""


class UnsupportedOddOrder(PentaError):
    """Operation requires an even matrix order."""


class DegenerateSpectrum(PentaError):
    """Two eigenvalues coincide to within the separation threshold."""


class SingularMatrix(PentaError):
    """A negative power was requested for a matrix with a (near-)zero eigenvalue."""


class DimensionMismatch(PentaError):
    """Array arguments have incompatible or non-square shapes."""


class NumericallySingular(PentaError):
    """Gaussian elimination hit a pivot too small to divide by."""

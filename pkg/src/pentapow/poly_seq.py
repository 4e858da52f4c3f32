"""The two alternating-coefficient polynomial sequences and their relatives.

Both sequences satisfy the same interleaved three-term recurrence

    S_idx(x) = ((x - a) * S_{idx-2}(x) - c * S_{idx-4}(x)) / b

where (a, b, c) = (a1, b1, c1) for even idx and (a2, b2, c2) for odd idx,
and terms with negative index count as zero.  They differ only in the seed:
A_0 = 0, A_1 = 1 versus B_0 = 1, B_1 = 0.  Consequences used everywhere
downstream: A vanishes identically at even indices, B at odd indices.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import ab_tables
from .penta_core import validate_params


@dataclass(frozen=True)
class SeqEvaluation:
    """Values A_0..A_m and B_0..B_m at a single point."""
    point: complex
    a_values: np.ndarray
    b_values: np.ndarray


@dataclass(frozen=True)
class PolyCoefficients:
    """One polynomial as an ascending-degree complex coefficient array.

    The identically-zero polynomial is stored as a single zero entry.
    """
    coeffs: np.ndarray

    def degree(self):
        """Highest index with a nonzero coefficient, or -1 for the zero polynomial."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else -1

    def leading(self):
        d = self.degree()
        return complex(self.coeffs[d]) if d >= 0 else 0j

    def evaluate(self, x):
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * x + c
        return acc


def eval_sequences(p, x, m):
    """Evaluate A_0..A_m and B_0..B_m at x by forward recurrence."""
    validate_params(p)
    m = int(m)
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    avals, bvals = ab_tables(p.a1, p.a2, p.b1, p.b2, p.c1, p.c2,
                             np.array([complex(x)]), m)
    return SeqEvaluation(point=complex(x), a_values=avals[0], b_values=bvals[0])


def eval_P(p, x, i):
    """The 2x2 cross determinant P_i(x) = A_n(x) B_i(x) - A_i(x) B_n(x)."""
    validate_params(p)
    i = int(i)
    if i < 0:
        raise ValueError(f"index i must be non-negative, got {i}")
    n = int(p.n)
    ev = eval_sequences(p, x, max(n, i))
    return complex(ev.a_values[n] * ev.b_values[i] - ev.a_values[i] * ev.b_values[n])


def _shrink(arr):
    nz = np.nonzero(arr)[0]
    return arr[:nz[-1] + 1] if nz.size else arr[:1]


def _coeff_step(prev, prev2, a, b, c):
    out = np.zeros(prev.size + 1, np.complex128)
    out[1:] = prev
    out[:prev.size] -= a * prev
    if prev2 is not None:
        out[:prev2.size] -= c * prev2
    out /= b
    return _shrink(out)


def coefficient_sequences(p, m):
    """Exact coefficient arrays for A_0..A_m and B_0..B_m.

    Multiplication by x becomes an index shift; everything else is the same
    recurrence the evaluator uses.
    """
    validate_params(p)
    m = int(m)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    a_list = [PolyCoefficients(np.zeros(1, np.complex128))]
    b_list = [PolyCoefficients(np.array([1.0 + 0j]))]
    if m >= 1:
        a_list.append(PolyCoefficients(np.array([1.0 + 0j])))
        b_list.append(PolyCoefficients(np.zeros(1, np.complex128)))
    for idx in range(2, m + 1):
        if idx % 2 == 0:
            a, b, c = complex(p.a1), complex(p.b1), complex(p.c1)
        else:
            a, b, c = complex(p.a2), complex(p.b2), complex(p.c2)
        older_a = a_list[idx - 4].coeffs if idx >= 4 else None
        older_b = b_list[idx - 4].coeffs if idx >= 4 else None
        a_list.append(PolyCoefficients(
            _coeff_step(a_list[idx - 2].coeffs, older_a, a, b, c)))
        b_list.append(PolyCoefficients(
            _coeff_step(b_list[idx - 2].coeffs, older_b, a, b, c)))
    return a_list, b_list


def chebyshev_U(m, x):
    """Chebyshev polynomial of the second kind, U_m(x), by the three-term recurrence."""
    m = int(m)
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    x = complex(x)
    prev = 1.0 + 0j
    if m == 0:
        return prev
    cur = 2 * x
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur

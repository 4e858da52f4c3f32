import numpy as np
import pytest

from conftest import draw_params
from golden import EIGS10, PARAMS8, PARAMS10
from pentapow import (DegenerateSpectrum, PentaParams, UnsupportedOddOrder,
                      build_matrix, build_transform, char_poly_eval,
                      chebyshev_U, dense_determinant, eigenvalues,
                      eigenvector, eval_sequences)


def test_order_6_closed_forms():
    p = PentaParams(1 + 1j, -2, 3, 4 - 1j, 5, 6j, 6)
    spec = eigenvalues(p)
    off1 = np.sqrt(2 * complex(p.b1) * complex(p.c1))
    off2 = np.sqrt(2 * complex(p.b2) * complex(p.c2))
    expected = np.array([p.a1 - off1, p.a2 - off2, p.a1, p.a2,
                         p.a1 + off1, p.a2 + off2])
    assert np.abs(spec.eigenvalues - expected).max() < 1e-12


def test_order_10_reference_values():
    spec = eigenvalues(PARAMS10)
    assert np.abs(spec.eigenvalues.imag).max() == 0
    assert np.abs(spec.eigenvalues.real - EIGS10).max() < 1e-4


def test_order_8_complex_reference_value():
    spec = eigenvalues(PARAMS8)
    assert abs(spec.eigenvalues[1] - (-5.280 - 0.668j)) < 1e-3


def test_matches_dense_eigensolver(rng):
    for n in (4, 6, 8, 10):
        p = draw_params(rng, n)
        ours = np.sort_complex(eigenvalues(p).eigenvalues)
        dense = np.sort_complex(np.linalg.eigvals(build_matrix(p)))
        assert np.abs(ours - dense).max() < 1e-10 * max(1, np.abs(dense).max())


def test_odd_order_rejected():
    p = PentaParams(1, 2, 3, 4, 5, 6, 7)
    with pytest.raises(UnsupportedOddOrder):
        eigenvalues(p)
    with pytest.raises(UnsupportedOddOrder):
        char_poly_eval(p, 0.5)


def test_coincident_families_detected():
    with pytest.raises(DegenerateSpectrum):
        eigenvalues(PentaParams(1, 1, 3, 3, 5, 5, 8))


def test_weight_identity_both_families():
    for p in (PARAMS10, PARAMS8):
        spec = eigenvalues(p)
        n = p.n
        sb1 = np.sqrt(complex(p.b1) * complex(p.c1))
        sb2 = np.sqrt(complex(p.b2) * complex(p.c2))
        for k in range(n):
            alpha = spec.eigenvalues[k]
            if k % 2 == 0:
                ratio = (alpha - p.a1) / sb1
            else:
                ratio = (alpha - p.a2) / sb2
            expected = (4 - ratio ** 2) / (n + 2)
            assert abs(spec.weights[k] - expected) < 1e-12


def test_weights_positive_for_real_symmetric_families():
    spec = eigenvalues(PentaParams(0.3, -1.2, 2.0, 3.0, 0.5, 1.5, 10))
    assert np.all(spec.weights.real > 0)
    assert np.all(spec.weights.imag == 0)


def test_odd_family_untouched_by_a2():
    base = eigenvalues(PentaParams(1 + 1j, 2, 3, 4, 5, 6, 8))
    moved = eigenvalues(PentaParams(1 + 1j, 2.75 - 1j, 3, 4, 5, 6, 8))
    assert np.array_equal(base.eigenvalues[0::2], moved.eigenvalues[0::2])
    assert not np.array_equal(base.eigenvalues[1::2], moved.eigenvalues[1::2])


def test_spectrum_arrays_frozen():
    spec = eigenvalues(PARAMS10)
    with pytest.raises(ValueError):
        spec.eigenvalues[0] = 0


# ------------------------------------------------------------ eigenvectors

def test_eigenvector_seed_entries():
    spec = eigenvalues(PARAMS10)
    v_odd = eigenvector(PARAMS10, spec, 1)
    assert v_odd[0] == 1
    v_even = eigenvector(PARAMS10, spec, 2)
    assert v_even[0] == 0 and v_even[1] == 1


def test_eigenvector_index_range():
    spec = eigenvalues(PARAMS10)
    for j in (0, 11):
        with pytest.raises(ValueError):
            eigenvector(PARAMS10, spec, j)


def test_eigenpair_residuals():
    p = PentaParams(1, 2, 3, 4, 5, 6, 6)
    dense = build_matrix(p)
    spec = eigenvalues(p)
    for j in range(1, 7):
        v = eigenvector(p, spec, j)
        alpha = spec.eigenvalues[j - 1]
        residual = np.abs(dense @ v - alpha * v).max()
        assert residual <= 1e-9 * (1 + abs(alpha)) * np.abs(v).max()


def test_eigenvectors_match_transform_columns():
    spec = eigenvalues(PARAMS8)
    pair = build_transform(PARAMS8, spec)
    for j in range(1, 9):
        assert np.array_equal(pair.l_matrix[:, j - 1],
                              eigenvector(PARAMS8, spec, j))


# -------------------------------------------------------------- transform

def test_transform_inverse_identity(rng):
    for n in (4, 6, 8, 10):
        p = draw_params(rng, n)
        pair = build_transform(p, eigenvalues(p))
        eye = pair.l_matrix @ pair.l_inverse
        assert np.abs(eye - np.eye(n)).max() <= 1e-8


def test_transform_reference_params_identity():
    pair = build_transform(PARAMS10, eigenvalues(PARAMS10))
    assert np.abs(pair.l_matrix @ pair.l_inverse - np.eye(10)).max() <= 1e-8


def test_transform_parity_zeros_exact():
    pair = build_transform(PARAMS8, eigenvalues(PARAMS8))
    ii, jj = np.indices((8, 8))
    odd_slots = (ii + jj) % 2 == 1
    assert np.all(pair.l_matrix[odd_slots] == 0)
    assert np.all(pair.l_inverse[odd_slots] == 0)


def test_transform_first_row_layout(rng):
    p = draw_params(rng, 6)
    spec = eigenvalues(p)
    pair = build_transform(p, spec)
    ev = eval_sequences(p, spec.eigenvalues[0], 5)
    q1 = spec.weights[0]
    r1sq = spec.r1 ** 2
    expected = q1 * np.array([
        ev.b_values[0], ev.b_values[1],
        r1sq * ev.b_values[2], r1sq * ev.b_values[3],
        r1sq ** 2 * ev.b_values[4], r1sq ** 2 * ev.b_values[5]])
    gap = np.abs(pair.l_inverse[0] - expected).max()
    assert gap < 1e-12 * max(1.0, float(np.abs(expected).max()))


def test_first_weight_order_6():
    spec = eigenvalues(PentaParams(1, 2, 3, 4, 5, 6, 6))
    assert abs(spec.weights[0] - 0.25) < 1e-12


def test_diagonalization_reconstructs_matrix():
    spec = eigenvalues(PARAMS8)
    pair = build_transform(PARAMS8, spec)
    rebuilt = pair.l_matrix @ np.diag(spec.eigenvalues) @ pair.l_inverse
    assert np.abs(rebuilt - build_matrix(PARAMS8)).max() < 1e-8


# ---------------------------------------------------------------- charpoly

def test_charpoly_two_forms_agree(rng):
    for n in (4, 6, 8, 10):
        p = draw_params(rng, n)
        for _ in range(5):
            x = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            f1 = char_poly_eval(p, x)
            f2 = char_poly_eval(p, x, form="sequences")
            assert abs(f1 - f2) <= 1e-10 * max(1, abs(f1))


def test_charpoly_matches_oracle_determinant(rng):
    for n in (4, 6, 8, 10):
        p = draw_params(rng, n)
        dense = build_matrix(p)
        for _ in range(3):
            x = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            det = dense_determinant(x * np.eye(n) - dense)
            assert abs(char_poly_eval(p, x) - det) <= 1e-8 * max(1, abs(det))


def test_charpoly_vanishes_on_spectrum(rng):
    # scale the root residual by the polynomial's natural magnitude: the
    # band factors times the non-vanishing Chebyshev factor
    for n in (4, 6, 8, 10):
        p = draw_params(rng, n)
        t = n // 2
        spec = eigenvalues(p)
        sb1 = np.sqrt(complex(p.b1) * complex(p.c1))
        sb2 = np.sqrt(complex(p.b2) * complex(p.c2))
        scale = max(1.0, (abs(sb1) * abs(sb2)) ** t) * (t + 1) ** 2
        for k, alpha in enumerate(spec.eigenvalues):
            if k % 2 == 0:
                other = abs(chebyshev_U(t, (alpha - p.a2) / (2 * sb2)))
            else:
                other = abs(chebyshev_U(t, (alpha - p.a1) / (2 * sb1)))
            bound = 1e-8 * scale * max(1.0, other)
            assert abs(char_poly_eval(p, alpha)) <= bound


def test_charpoly_explicit_product_order_6():
    p = PentaParams(1 + 1j, -2, 3, 4 - 1j, 5, 6j, 6)
    x = 0.3 - 1.7j
    f1 = (x - p.a1) * ((x - p.a1) ** 2 - 2 * p.b1 * p.c1)
    f2 = (x - p.a2) * ((x - p.a2) ** 2 - 2 * p.b2 * p.c2)
    expected = f1 * f2
    got = char_poly_eval(p, x)
    assert abs(got - expected) <= 1e-10 * max(1, abs(expected))


def test_charpoly_unknown_form_rejected():
    with pytest.raises(ValueError):
        char_poly_eval(PARAMS10, 0.1, form="horner")

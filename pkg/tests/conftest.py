import os

import numpy as np
import pytest

from pentapow import (DegenerateSpectrum, PentaParams, build_matrix,
                      dense_determinant, dense_inverse, dense_power,
                      eigenvalues, matrix_power)
from pentapow._backend import HAS_NUMBA

SEED = 20260819


def rel_gap(computed, reference):
    """Normwise relative gap: max|delta| / max(1, max|reference|).

    The absolute floor keeps near-zero reference entries from inflating
    the metric; the same definition backs the CLI --verify report.
    """
    reference = np.asarray(reference)
    scale = max(1.0, float(np.abs(reference).max()))
    return float(np.abs(np.asarray(computed) - reference).max()) / scale


def draw_params(rng, n, min_eig_modulus=0.0):
    """One random parameter set inside the tested envelope.

    |a| <= 5 componentwise, band moduli in [0.5, 5] (keeps the transform
    conditioning sane for 1e-8 level comparisons).  Draws that trip the
    degeneracy gate are redrawn; min_eig_modulus adds an invertibility
    floor for negative-power tests.
    """
    while True:
        a1 = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        a2 = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        bands = []
        for _ in range(4):
            mod = rng.uniform(0.5, 5.0)
            ang = rng.uniform(-np.pi, np.pi)
            bands.append(complex(mod * np.cos(ang), mod * np.sin(ang)))
        p = PentaParams(a1, a2, *bands, n=n)
        try:
            spec = eigenvalues(p)
        except DegenerateSpectrum:
            continue
        if min_eig_modulus and float(np.abs(spec.eigenvalues).min()) < min_eig_modulus:
            continue
        return p


_SWEEP_CACHE = {}


def sweep_draws(n, count=20, min_eig_modulus=0.0):
    """Deterministic per-order draw list, shared across test modules."""
    key = (n, count, min_eig_modulus)
    if key not in _SWEEP_CACHE:
        rng = np.random.default_rng(SEED + n + int(min_eig_modulus * 1000))
        _SWEEP_CACHE[key] = [draw_params(rng, n, min_eig_modulus)
                             for _ in range(count)]
    return _SWEEP_CACHE[key]


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(params=["numpy"] + (["numba"] if HAS_NUMBA else []))
def backend(request, monkeypatch):
    monkeypatch.setenv("PENTAPOW_BACKEND", request.param)
    return request.param


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # pay JIT compilation once, before anything is timed
    if HAS_NUMBA:
        saved = os.environ.get("PENTAPOW_BACKEND")
        os.environ["PENTAPOW_BACKEND"] = "numba"
        p = PentaParams(0.3, -0.2, 1.1, 0.9, 0.7, 1.3, 4)
        matrix_power(p, 2)
        matrix_power(p, -1)
        dense = build_matrix(p)
        dense_power(dense, 2)
        dense_inverse(dense)
        dense_determinant(dense)
        if saved is None:
            os.environ.pop("PENTAPOW_BACKEND", None)
        else:
            os.environ["PENTAPOW_BACKEND"] = saved
    yield


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(label): labeled acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        term = item.config.pluginmanager.get_plugin("terminalreporter")
        if term is not None:
            status = "PASS" if rep.passed else "FAIL"
            term.write_line(f"criterion {marker.args[0]}: {status}")

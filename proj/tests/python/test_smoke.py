"""Smoke tests for the Python bindings: thin checks that the module loads and
the main operations round-trip sensibly. The heavy numerical validation lives
in the C++ test binaries."""

import cmath
import math

import pytest

import bergman_adjoint as ba


def test_partial_sum_closed_form():
    assert math.isclose(ba.geom_partial_closed(5, 0.25), 4.720703125, rel_tol=1e-12)
    direct = sum((k + 1) * (k + 2) * 0.36**k for k in range(21))
    assert math.isclose(ba.geom_partial_closed(20, 0.36), direct, rel_tol=1e-10)
    with pytest.raises(ValueError):
        ba.geom_partial_closed(3, 1.5)


def test_polynomial_evaluation():
    f = ba.AnalyticFn.polynomial([0, 1, 0.5])
    z = 0.3 + 0.2j
    assert cmath.isclose(f.eval(z), z + 0.5 * z * z, rel_tol=1e-14)
    assert cmath.isclose(f.deriv(z), 1 + z, rel_tol=1e-14)
    # (z^2 f')' = 2 z f' + z^2 f''
    assert cmath.isclose(f.pderiv(z), 2 * z * (1 + z) + z * z, rel_tol=1e-13)
    with pytest.raises(ValueError):
        f.eval(1.5 + 0j)


def test_adjoint_forms_agree_pointwise():
    g = ba.AnalyticFn.polynomial([0, 1, 0, 0.25])
    z = 0.4 + 0.1j
    series = ba.adjoint_series(g, 2.0, z)
    spec = ba.QuadratureSpec()
    spec.angular_nodes = 512
    quad = ba.adjoint_quad(g, 2.0, z, spec)
    assert abs(quad - series) <= 1e-7 * (1 + abs(series))


def test_integrate_disk_accepts_python_callables():
    res = ba.integrate_disk(lambda w: 1.0 + 0j)
    assert res.converged
    assert abs(res.value - 1.0) < 1e-12


def test_norms_of_log_witness():
    g = ba.AnalyticFn.log_extremal()
    assert abs(ba.bloch_norm(g) - 1.0) <= 1e-9
    assert abs(ba.extremal_ratio(g) - 2.0) <= 5e-3


def test_projection_reproduces_polynomials():
    p = ba.AnalyticFn.polynomial([0.2, 0.5, 0.3])
    z = 0.4 + 0.0j
    assert abs(ba.project_polynomial_closed(p, z, 0.999) - p.eval(z)) < 5e-3


def test_run_single_check():
    cfg = ba.VerifyConfig()
    cfg.only = ["series_closed_form"]
    reports = ba.run_all(cfg)
    assert len(reports) == 1
    assert reports[0].pass_
    assert ba.aggregate_pass(reports)


def test_search_tiny_and_deterministic():
    cfg = ba.SearchConfig()
    cfg.degree = 2
    cfg.restarts = 1
    cfg.iterations = 50
    cfg.seed = 5
    r1 = ba.search(cfg)
    r2 = ba.search(cfg)
    assert r1.best_value == r2.best_value
    assert 0.0 < r1.best_value <= 4.0 + 1e-6

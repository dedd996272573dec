"""Smoke tests for the Python bindings: every exposed operation is callable
and the routes agree with each other on reference points."""

import math

import pytest

import caputo


def test_scalar_special_functions():
    assert caputo.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert caputo.log_gamma(50.0) == pytest.approx(144.5657439463448860089, rel=1e-14)
    assert caputo.gen_binomial(0.5, 2) == pytest.approx(-0.125, rel=1e-15)
    assert caputo.gen_binomial(1.0, 3) == 0.0
    assert caputo.sinc_factor(0.5, 0) == pytest.approx(2.0 / math.pi, rel=1e-15)
    assert caputo.sinc_factor(1.0, 1) == 1.0
    r = caputo.phyperg([1.0], [1.0, 1.5], 1.0)
    assert r.converged
    assert r.value == pytest.approx(1.813430203923509383834, rel=1e-15)


def test_function_models_and_jets():
    f = caputo.make_function("sinh", 2.0)
    assert f.value(0.3) == pytest.approx(math.sinh(0.6), rel=1e-15)
    assert f.derivative(0.3, 1) == pytest.approx(2.0 * math.cosh(0.6), rel=1e-14)
    jet = f.jet_at(0.3, 4)
    assert jet.order == 4
    assert jet.value == pytest.approx(math.sinh(0.6), rel=1e-15)
    h = caputo.compose(caputo.make_function("exp"), caputo.make_function("sin"))
    assert h.value(0.6) == pytest.approx(math.exp(math.sin(0.6)), rel=1e-14)
    assert h.name == "exp(sin)"


def test_derivative_routes_agree():
    f = caputo.make_function("sinh")
    closed = caputo.caputo_sinh(1.0, 0.5, 1.0)
    assert caputo.caputo_quadrature(f, 0.5, 1.0) == pytest.approx(closed, rel=1e-10)
    series = caputo.caputo_series(f, 0.5, 1.0, n_terms=40)
    assert series.converged
    assert series.value == pytest.approx(closed, rel=1e-12)


def test_tanh_and_product_rule():
    ref = 0.7327971740028997396407  # D^(1/2) tanh at x = 1, 40-digit arithmetic
    assert caputo.caputo_tanh(1.0, 0.5, 1.0).value == pytest.approx(ref, rel=1e-4)
    # The same construction assembled by hand with a Python closed-form map.
    by_hand = caputo.product_rule(
        caputo.make_function("sinh"),
        caputo.make_function("sech"),
        0.5,
        1.0,
        closed_form=lambda l, x: caputo.caputo_sinh_shifted(1.0, 0.5, l, x),
    )
    assert by_hand.value == caputo.caputo_tanh(1.0, 0.5, 1.0).value


def test_repeated_integration_lift():
    base = caputo.HypSeriesSpec([1.0], [1.5], kappa=0.5, zeta=0.4, m=1)
    lifted = caputo.eit_lift(base, 1)
    assert lifted.series.kappa == 1.5
    assert lifted.series.lower == [2.5]  # appended upper 1.5 cancelled the old lower 1.5
    model = caputo.from_power_series(base)
    direct = caputo.cauchy_repeated_integral(model, 1, 1.0, nodes=40, subdivisions=12)
    assert lifted.evaluate(1.0) == pytest.approx(direct, rel=1e-9)
    value = caputo.eit_transform_check(base, 1.5, 2.5, 0.4, validate_tol=1e-9)
    assert math.isfinite(value)


def test_composition_rules():
    f = caputo.make_function("exp")
    g = caputo.make_function("sin")
    comp = caputo.compose(f, g)
    for k in range(5):
        jet = comp.jet_at(0.7, k)
        assert caputo.di_bruno_kth(f, g, k, 0.7) == pytest.approx(
            jet.derivative(k), rel=1e-9, abs=1e-9
        )
    ch = caputo.make_function("cosh")
    sech = caputo.make_function("sech")
    for n in range(5):
        assert caputo.inverse_derivative(ch, n, 0.9) == pytest.approx(
            sech.derivative(0.9, n), rel=1e-9, abs=1e-9
        )
    assert caputo.chain_weight(g, 0.5, 0, 0.9, 10) == 1.0
    r = caputo.chain_rule(
        caputo.make_function("sinh"), caputo.make_function("x"), 0.5, 0.5,
        terms=20, inner_terms=20,
    )
    assert r.value == pytest.approx(caputo.caputo_sinh(1.0, 0.5, 0.5), rel=1e-6)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        caputo.caputo_quadrature(caputo.make_function("exp"), 1.5, 1.0)
    with pytest.raises(ValueError):
        caputo.caputo_quadrature(caputo.make_function("exp"), 0.5, -1.0)
    with pytest.raises(ValueError):
        caputo.make_function("nosuch")
    with pytest.raises(ValueError):
        caputo.phyperg([1.0], [-2.0], 0.5)

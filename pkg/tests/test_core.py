import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsfrac import (CAPUTO_FABRIZIO, ONE, ClosedFormFunction, FractionalOrder,
                    Grid, NormalizationRule, SampledFunction, make_order,
                    normalization_value, sample)
from nsfrac.errors import (InvalidGrid, InvalidNormalization, NonFiniteSample,
                           OrderOutOfRange)

open_unit = st.floats(min_value=1e-12, max_value=1 - 1e-12, exclude_min=True, exclude_max=True)


def test_make_order_half():
    o = make_order(0.5)
    assert (o.nu, o.psi, o.rate) == (0.5, 1.0, 1.0)


def test_make_order_point_three():
    o = make_order(0.3)
    assert o.psi == pytest.approx(7 / 3, rel=1e-15)
    assert o.rate == pytest.approx(3 / 7, rel=1e-15)
    assert o.psi * o.nu == pytest.approx(1 - o.nu, rel=1e-15)


@pytest.mark.parametrize("nu", [0.0, 1.0, -0.2, 1.5, float("nan"), float("inf")])
def test_make_order_rejects(nu):
    with pytest.raises(OrderOutOfRange):
        make_order(nu)


@given(open_unit)
def test_order_identities(nu):
    o = make_order(nu)
    assert o.psi > 0 and o.rate > 0
    assert abs(o.nu * (o.psi + 1) - 1) <= 1e-15
    assert abs(o.rate * (1 - o.nu) - o.nu) <= 1e-15 * o.nu


def test_from_psi():
    assert FractionalOrder.from_psi(1.0).nu == 0.5
    assert FractionalOrder.from_psi(7 / 3).nu == pytest.approx(0.3, rel=1e-15)


def test_normalization_examples():
    assert normalization_value(ONE, make_order(0.6)) == 1.0
    assert normalization_value(CAPUTO_FABRIZIO, make_order(0.5)) == pytest.approx(4 / 3, rel=1e-15)
    assert normalization_value(CAPUTO_FABRIZIO, make_order(1 - 1e-12)) == pytest.approx(2.0, rel=1e-11)
    assert CAPUTO_FABRIZIO.at(1.0) == 2.0
    assert ONE.at(0.0) == ONE.at(1.0) == 1.0


@given(open_unit, open_unit)
def test_cf_rule_increasing(a, b):
    if a == b:
        return
    lo, hi = sorted((a, b))
    assert CAPUTO_FABRIZIO.at(lo) <= CAPUTO_FABRIZIO.at(hi)
    assert normalization_value(ONE, make_order(a)) == 1.0


def test_custom_rule():
    rule = NormalizationRule.custom(lambda nu: 1 + nu * (1 - nu))
    assert rule(make_order(0.5)) == 1.25
    with pytest.raises(InvalidNormalization):
        NormalizationRule.custom(lambda nu: -1.0)(make_order(0.5))
    with pytest.raises(InvalidNormalization):
        NormalizationRule.custom(lambda nu: float("nan"))(make_order(0.5))


def test_grid_nodes_are_not_accumulated():
    g = Grid(0.0, 0.1, 1001)
    assert g.nodes[1000] == 0.0 + 1000 * 0.1
    assert g.node(1000) == g.nodes[1000]
    assert g.end == 100.0


@pytest.mark.parametrize("args", [(0, 0.0, 5), (0, -1.0, 5), (0, 0.1, 1), (0, 0.1, 2.5)])
def test_grid_rejects(args):
    with pytest.raises(InvalidGrid):
        Grid(*args)


def test_grid_span():
    g = Grid.span(0.0, 1.0, 3)
    assert g.step == 0.5 and g.count == 3


def test_sampled_function_checks():
    g = Grid(0.0, 0.5, 3)
    with pytest.raises(InvalidGrid):
        SampledFunction(g, [1.0, 2.0])
    with pytest.raises(NonFiniteSample):
        SampledFunction(g, [1.0, np.nan, 2.0])
    f = SampledFunction(g, [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        f.values[0] = 5.0


def test_sample_examples():
    g = Grid.span(0.0, 1.0, 3)
    assert sample(ClosedFormFunction.constant(1), g).values.tolist() == [1, 1, 1]
    assert sample(ClosedFormFunction.monomial(1), g).values.tolist() == [0, 0.5, 1]
    e = sample(ClosedFormFunction.exponential(-1), g).values[-1]
    assert e == pytest.approx(0.36787944117144233, rel=1e-15)


def test_sample_non_finite():
    with pytest.raises(NonFiniteSample):
        sample(ClosedFormFunction.exponential(1000.0), Grid(0.0, 1.0, 3))


BASIS = [
    ClosedFormFunction.constant(2.5),
    ClosedFormFunction.monomial(0),
    ClosedFormFunction.monomial(1),
    ClosedFormFunction.monomial(3),
    ClosedFormFunction.exponential(-1.3),
    ClosedFormFunction.sine(2.0),
    ClosedFormFunction.cosine(0.7),
    2.0 * ClosedFormFunction.monomial(1) + 1.0,
    ClosedFormFunction.sine(1.0) - 3.0 * ClosedFormFunction.exponential(0.4),
]


@pytest.mark.parametrize("f", BASIS, ids=str)
def test_sample_matches_pointwise_evaluation(f):
    g = Grid(0.1, 0.013, 400)
    v = sample(f, g).values
    for i in range(g.count):
        assert v[i] == f(g.node(i))


@pytest.mark.parametrize("f", BASIS, ids=str)
def test_derivative_against_finite_differences(f):
    x = np.linspace(0.2, 2.0, 17)
    h = 1e-5
    fd = (f(x + h) - f(x - h)) / (2 * h)
    np.testing.assert_allclose(f.derivative()(x), fd, rtol=1e-8, atol=1e-8)


@pytest.mark.parametrize("f", BASIS, ids=str)
def test_laplace_image_against_quadrature(f):
    integrate = pytest.importorskip("scipy.integrate")
    image = f.laplace()
    for s in (1.0, 2.5, 6.0):
        # tail beyond x=80 is below exp(-48) for every s used here
        ref, _ = integrate.quad(lambda x: math.exp(-s * x) * float(f(x)), 0, 80, limit=400)
        assert float(image(s)) == pytest.approx(ref, rel=1e-9, abs=1e-12)

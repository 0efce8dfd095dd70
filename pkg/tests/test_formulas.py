from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from augdesign import DesignParams, a_test, e_aug, e_con_from_a_abd, e_res, e_test, v_star
from augdesign.errors import InvalidParams, NonPositiveValue


def test_e_res_examples():
    assert e_res(5, 3, 1.0) == pytest.approx(14 / 22, abs=1e-15)
    assert round(e_res(10, 3, 0.705895), 6) == 0.467749
    assert e_res(4, 2, 1.0) == pytest.approx(7 / 13, abs=1e-15)


def test_e_aug_examples():
    assert e_aug(5, 3, 1.0) == pytest.approx(12 / (4 + 40 / 3), abs=1e-15)
    assert e_aug(5, 3, 22 / 27) == pytest.approx(33 / 56, abs=1e-14)
    assert round(e_aug(12, 3, 0.68006), 6) == 0.505979


def test_e_test_examples():
    et = e_test(12, 3, 0.68006)
    assert round(et, 6) == 0.499066
    assert round(a_test(et), 4) == 4.0075
    assert e_test(5, 3, 1.0) == pytest.approx(9 / (1 + 40 / 3), abs=1e-15)
    assert e_test(5, 3, 22 / 27) == pytest.approx(99 / 191, abs=1e-14)


def test_a_test():
    assert a_test(0.5) == 4.0
    assert a_test(1.0) == 2.0
    assert round(a_test(0.499066), 4) == 4.0075
    assert a_test(0.499066) == pytest.approx(4.00748, abs=1e-5)
    with pytest.raises(NonPositiveValue):
        a_test(0.0)


@pytest.mark.parametrize(
    "k,a_abd,expected", [(3, 0.9167, 0.727246), (4, 0.6333, 0.789515), (5, 0.4833, 0.827643)]
)
def test_e_con_from_a_abd(k, a_abd, expected):
    assert e_con_from_a_abd(k, a_abd) == pytest.approx(expected, abs=1e-6)


def test_design_params_object_form():
    p = DesignParams(12, 3, 0.68006)
    assert e_test(p) == e_test(12, 3, 0.68006)


@pytest.mark.parametrize(
    "args", [(3, 1, 0.5), (5, 4, 0.5), (5, 3, 0.0), (5, 3, 1.2), (5, 3, float("nan"))]
)
def test_invalid_params(args):
    with pytest.raises(InvalidParams):
        e_aug(*args)


def test_invalid_a_abd():
    with pytest.raises(InvalidParams):
        e_con_from_a_abd(1, 0.5)
    with pytest.raises(InvalidParams):
        e_con_from_a_abd(3, -1.0)


def test_v_star():
    assert v_star(5, 3) == 13
    assert v_star(12, 3) == 111


def _exact_e_aug(v, k, e):
    vs = v * v - k * (v - 1)
    return Fraction(vs - 1) / ((vs - 2 * v + 1) + Fraction(2 * v * (v - 1)) / (k * e))


@st.composite
def params(draw):
    v = draw(st.integers(4, 40))
    k = draw(st.integers(2, v - 2))
    e = draw(st.floats(1e-3, 1.0))
    return v, k, e


@given(params())
def test_against_exact_arithmetic(p):
    v, k, e = p
    assert e_aug(v, k, e) == pytest.approx(float(_exact_e_aug(v, k, Fraction(e))), rel=1e-13)


@given(params())
def test_aug_test_consistency(p):
    v, k, e = p
    vs = v_star(v, k)
    assert (vs - 1) / e_aug(v, k, e) - (vs - 1 - k) / e_test(v, k, e) == pytest.approx(k, abs=1e-10 * vs)


@given(params())
def test_ordering(p):
    v, k, e = p
    assert e_test(v, k, e) < e_aug(v, k, e) < 1


@pytest.mark.parametrize("v,k", [(5, 3), (10, 3), (16, 4), (26, 4), (9, 7)])
def test_monotone_in_e_con(v, k):
    grid = np.linspace(0.05, 1.0, 60)
    for f in (e_res, e_aug, e_test):
        vals = [f(v, k, float(x)) for x in grid]
        assert np.all(np.diff(vals) > 0)

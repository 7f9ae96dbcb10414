from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasidim.exactnum import PeriodicRational
from quasidim.latcount import count_simplex, count_VA
from quasidim.quasipoly import (
    InterpolationError,
    QuasiPolynomial,
    interpolate,
    qp_arith,
    qp_degree,
    qp_eval,
    qp_format,
    qp_leading_coefficient,
    qp_scale,
    qp_shift,
)

F = Fraction
LAM21 = QuasiPolynomial([[1, "3/4"], 1, "1/4"])
CHI = QuasiPolynomial([[5, "9/2"], "1/2"])


def test_eval_examples():
    assert qp_eval(LAM21, 3) == 6
    assert qp_eval(QuasiPolynomial.zero(), 12) == 0
    assert qp_eval(CHI, 7) == 8
    assert count_VA([(2, 1), (0, 3)], (2, 1), 7) == 8


def test_arith_examples():
    f = QuasiPolynomial([1, 1])
    assert (LAM21 - LAM21).is_zero()
    assert qp_arith(f, f, "add") == QuasiPolynomial([2, 2])
    combo = LAM21 - LAM21.shift(3) - LAM21.shift(5) + LAM21.shift(7)
    assert combo == CHI
    assert qp_scale(f, "1/2") == QuasiPolynomial(["1/2", "1/2"])


def test_shift_examples():
    assert qp_shift(QuasiPolynomial([1, 1]), 2) == QuasiPolynomial([-1, 1])
    assert qp_shift(QuasiPolynomial([[1, "3/4"]]), 1) == QuasiPolynomial([["3/4", 1]])
    # lambda_(2,1) shifted by 3 at 8 counts {2x + y <= 5}
    assert qp_shift(LAM21, 3)(8) == count_simplex((2, 1), 5) == 12
    with pytest.raises(ValueError):
        qp_shift(LAM21, -1)


def test_degree_leading_format():
    assert qp_degree(CHI) == 1
    assert qp_leading_coefficient(LAM21) == PeriodicRational(["1/4"])
    assert qp_format(QuasiPolynomial.zero()) == "0"
    assert qp_format(CHI) == "(1/2) t + [5, 9/2]_t"
    assert qp_format(LAM21) == "(1/4) t^2 + t + [1, 3/4]_t"
    assert qp_format(QuasiPolynomial([-1, -1])) == "-t - 1"
    assert qp_format(QuasiPolynomial([0, "-1/2", 3])) == "3 t^2 - (1/2) t"
    assert QuasiPolynomial.zero().degree == 0
    assert QuasiPolynomial.zero().period == 1


def test_json_round_trip():
    d = LAM21.to_json()
    assert d == {"degree": 2, "period": 2, "coefficients": [["1", "3/4"], ["1"], ["1/4"]]}
    assert QuasiPolynomial.from_json(d) == LAM21
    with pytest.raises(ValueError):
        QuasiPolynomial.from_json({**d, "degree": 3})


def test_interpolate_examples():
    assert interpolate(lambda n: n + 1, 1, 1, 0) == QuasiPolynomial([1, 1])
    assert interpolate(lambda n: count_simplex((2, 1), n), 2, 2, 0) == LAM21


def test_interpolate_with_base():
    chi = interpolate(lambda r: count_VA([(2, 1), (0, 3)], (2, 1), r), 2, 2, 7)
    assert chi == CHI


def test_interpolate_rejects_wrong_hypothesis():
    # floor(n/3) needs period 3
    with pytest.raises(InterpolationError, match="hypothesis violated"):
        interpolate(lambda n: n // 3, 1, 2, 0)
    with pytest.raises(InterpolationError):
        interpolate(lambda n: n**3, 2, 1, 0)


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)
periodics = st.lists(rationals, min_size=1, max_size=4).map(PeriodicRational)
qps = st.lists(periodics, min_size=0, max_size=4).map(QuasiPolynomial)


@given(qps, qps, st.integers(-40, 40))
def test_add_sub_pointwise(f, g, n):
    assert (f + g)(n) == f(n) + g(n)
    assert (f - g)(n) == f(n) - g(n)


@given(qps, st.integers(0, 12), st.integers(0, 12), st.integers(-30, 30))
def test_shift_laws(f, a, b, n):
    g = f.shift(a)
    assert g(n) == f(n - a)
    assert g.shift(b) == f.shift(a + b)
    assert f.shift(0) == f
    assert g.degree == f.degree
    # a periodic leading coefficient rotates; a constant one is untouched
    assert g.leading_coefficient() == f.leading_coefficient().shift(a)
    if f.leading_coefficient().is_constant():
        assert g.leading_coefficient() == f.leading_coefficient()
    assert f.period % g.period == 0


@given(qps, st.integers(0, 6))
def test_interpolation_recovers_any_quasipolynomial(f, s0):
    q = f.period
    assert interpolate(f, f.degree, q, s0) == f

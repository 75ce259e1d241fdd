from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svquant.enveloping import ONE, TensorUEAElement, UEAElement, gen, tensor
from svquant.lie import L, M, Y
from svquant.series import (Series, binomial_series, embed, insert_unit_leg,
                            invert, multiply_legs, series_tensor,
                            tensor_apply)

import oracles

e = gen(M(1))
N = 5


def geometric(x, order):
    return Series([x ** k for k in range(order + 1)], order)


def test_unit_and_geometric():
    s = embed(gen(L(1)) * gen(Y("1/2")), N)
    assert Series.one(N) * s == s
    assert binomial_series(e, 1, N) * geometric(e, N) == Series.one(N)
    assert invert(binomial_series(e, 1, N)) == geometric(e, N)
    assert invert(Series.one(N)) == Series.one(N)


def test_binomial_series_values():
    assert binomial_series(e, 0, 4) == Series.one(4)
    assert binomial_series(e, 1, 4) == Series([ONE, -e], 4)
    half = binomial_series(e, Q(1, 2), 2)
    assert half.coeffs == (ONE, e.scale(Q(-1, 2)), (e * e).scale(Q(-1, 8)))
    assert half * half == binomial_series(e, 1, 2)


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-4, max_value=4, max_denominator=6),
       st.fractions(min_value=-4, max_value=4, max_denominator=6))
def test_binomial_exponents_add(a, b):
    x = gen(M(2))
    assert binomial_series(x, a, 4) * binomial_series(x, b, 4) == binomial_series(x, a + b, 4)
    for k in range(5):
        assert binomial_series(x, a, 4)[k] == (x ** k).scale(oracles.gbinom(a, k) * (-1) ** k)


def test_invert_requires_unit_constant():
    with pytest.raises(ValueError):
        invert(Series([ONE.scale(2)], 3))


def test_invert_noncommutative():
    s = Series([ONE, gen(L(1)), gen(L(0)) * gen(Y("1/2"))], 4)
    assert s * invert(s) == Series.one(4)
    assert invert(s) * s == Series.one(4)


def test_embed_and_truncate():
    s = embed(gen(L(1)), 3)
    assert s[0] == gen(L(1))
    assert all(not c for c in s.coeffs[1:])
    long = binomial_series(e, Q(1, 3), 6)
    assert long.truncate(3) == binomial_series(e, Q(1, 3), 3)
    with pytest.raises(ValueError):
        long.truncate(7)


def test_truncation_commutes_with_products():
    a = binomial_series(gen(L(0)) + gen(M(1)), Q(2, 3), 6)
    b = invert(Series([ONE, gen(Y("1/2")), gen(L(-1))], 6))
    assert (a * b).truncate(3) == a.truncate(3) * b.truncate(3)


def test_ring_axioms_small():
    a = Series([ONE, gen(L(1)), gen(M(0))], 3)
    b = Series([gen(Y("1/2")), ONE, gen(L(-1))], 3)
    c = binomial_series(gen(L(0)), Q(1, 2), 3)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * b != b * a


def test_shift_and_order_mismatch():
    s = Series([ONE, e], 3).shift(2)
    assert s.coeffs == (UEAElement(), UEAElement(), ONE, e)
    with pytest.raises(ValueError):
        Series.one(2, 2) + Series.one(2, 1)
    # mixed orders meet at the lower one
    assert (Series.one(2) + Series.one(5)).order == 2


def test_tensor_series_and_counit():
    F = series_tensor(Series.one(3), binomial_series(e, 2, 3))
    assert F.degree == 2
    assert F[1] == tensor(1, e).scale(-2)
    assert tensor_apply("counit", F, 1) == Series.one(3)
    assert tensor_apply("counit", F, 0) == binomial_series(e, 2, 3)
    lifted = insert_unit_leg(F, 0)
    assert lifted.degree == 3 and lifted[1] == TensorUEAElement({((), (), (M(1),)): -2}, 3)


def test_multiply_legs_with_middle():
    X = series_tensor(embed(gen(L(1)), 2), embed(gen(L(0)), 2))
    mid = Series([ONE, e], 2)
    out = multiply_legs(X, mid)
    assert out[0] == gen(L(1)) * gen(L(0))
    assert out[1] == gen(L(1)) * e * gen(L(0))


def test_render_and_json():
    s = Series([tensor(1, M(1)) + tensor(M(1), 1), tensor(M(1), M(1)).scale(-1)], 1)
    assert s.render() == "1⊗M(1) + M(1)⊗1 + (-1)·M(1)⊗M(1)·t"
    assert s.to_json() == [[["1", ["1", "M(1)"]], ["1", ["M(1)", "1"]]], [["-1", ["M(1)", "M(1)"]]]]
    assert Series.zero(2).render() == "0"

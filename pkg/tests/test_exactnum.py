from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from narayana_hankel.exactnum import ONE, T, ZERO, PolyT, RatFuncT, as_ratfunc, polyt_gcd, ratfunc_arith

t = as_ratfunc(T)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, min_size=0, max_size=4).map(PolyT)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RatFuncT, polys, nonzero_polys)


def test_add_example():
    assert ratfunc_arith(t, 1 - t, "add") == ONE
    assert str(ratfunc_arith(t, 1 - t, "add")) == "1"


def test_mul_example_monic_denominator():
    r = ratfunc_arith(1 / (1 - t), 1 / (1 + t), "mul")
    assert r.den == PolyT([-1, 0, 1])
    assert r.num == PolyT([-1])
    assert str(r) == "(-1) / (-1 + t^2)"


def test_sub_self_is_zero():
    x = (1 + t) / (2 - t * t)
    z = ratfunc_arith(x, x, "sub")
    assert z == ZERO and z.den == PolyT([1])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(t, 0, "div")


@pytest.mark.parametrize("a, b, g", [
    (PolyT([-1, 0, 1]), PolyT([-1, 1]), PolyT([-1, 1])),
    (T, PolyT([1]), PolyT([1])),
    (PolyT([1, 1]) ** 2, PolyT([1, 1]) * PolyT([1, 0, 1]), PolyT([1, 1])),
])
def test_gcd_examples(a, b, g):
    assert polyt_gcd(a, b) == g


def test_gcd_both_zero():
    with pytest.raises(ValueError):
        polyt_gcd(PolyT(), PolyT())


def test_rendering():
    assert str(PolyT([1, 3, 1])) == "1 + 3*t + t^2"
    assert str(PolyT([Fraction(1, 2), -1])) == "1/2 - t"
    assert str(as_ratfunc(PolyT())) == "0"


def test_canonical_zero_and_fraction_reduction():
    r = RatFuncT(PolyT([0, 2]), PolyT([0, 4]))
    assert r == as_ratfunc(Fraction(1, 2))
    assert RatFuncT(PolyT(), PolyT([3, 1])).den == PolyT([1])


@settings(max_examples=60, deadline=None)
@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(ratfuncs)
def test_canonical_idempotent(a):
    again = RatFuncT(a.num, a.den)
    assert again == a and again.num == a.num and again.den == a.den
    assert a.den.leading == 1


@settings(max_examples=80, deadline=None)
@given(polys, polys, nonzero_polys)
def test_gcd_monic_and_maximal(a, b, c):
    a, b = a * c, b * c
    if a.is_zero() and b.is_zero():
        return
    g = polyt_gcd(a, b)
    assert g.leading == 1
    assert (a.exact_div(g) * g) == a and (b.exact_div(g) * g) == b
    assert polyt_gcd(c, g) == c.monic()
    if not a.is_zero() and not b.is_zero():
        assert polyt_gcd(a.exact_div(g), b.exact_div(g)) == PolyT([1])

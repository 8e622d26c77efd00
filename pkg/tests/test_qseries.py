import pytest
from hypothesis import given, settings, strategies as st

from narayana_hankel.closedforms import beta_poly
from narayana_hankel.exactnum import T, PolyT, as_ratfunc
from narayana_hankel.qseries import PolyQ, SeriesQ, series_arith, series_invert, series_pow, series_shift
from narayana_hankel.sequences import narayana_series

t = as_ratfunc(T)

coeff = st.lists(st.integers(-3, 3), min_size=1, max_size=2).map(lambda c: as_ratfunc(PolyT(c)))


def series(order=8, unit=False):
    def build(cs):
        if unit and not cs[0]:
            cs = [as_ratfunc(1)] + cs[1:]
        return SeriesQ(cs, order)
    return st.lists(coeff, min_size=order, max_size=order).map(build)


def test_mul_example():
    a = SeriesQ([1, 1], 5)
    b = SeriesQ([1, -1], 5)
    assert series_arith(a, b, "mul") == SeriesQ([1, 0, -1], 5)


def test_add_example():
    q = SeriesQ([0, 1], 6)
    assert series_arith(q, q, "add") == SeriesQ([0, 2], 6)


def test_narayana_square():
    g = narayana_series(6)
    sq = series_arith(g, g, "mul")
    assert sq[2] == 3 + 2 * t  # 2*(1+t) + 1
    # gamma solves -1 + (1 - q + tq) g - tq g^2 = 0
    lhs = g * PolyQ([1, t - 1]) - sq * PolyQ([0, t]) - SeriesQ.one(6)
    assert lhs.is_zero()


def test_invert_examples():
    assert series_invert(SeriesQ([1, -1], 7)) == SeriesQ([1] * 7, 7)
    assert series_invert(SeriesQ.one(4)) == SeriesQ.one(4)
    b = beta_poly(2).to_series(12)
    assert (b * series_invert(b)) == SeriesQ.one(12)


def test_invert_non_unit():
    with pytest.raises(ValueError, match="not a unit"):
        series_invert(SeriesQ([0, 1], 5))


def test_shift_examples():
    assert series_shift(SeriesQ([0, 0, 1, 1], 6), -2) == SeriesQ([1, 1], 4)
    assert series_shift(SeriesQ.one(5), 3) == SeriesQ([0, 0, 0, 1], 8)
    g1 = narayana_series(10) - SeriesQ.one(10)
    assert series_shift(g1 * g1, -2)[0] == 1


def test_shift_refuses_nonzero_low_terms():
    with pytest.raises(ValueError, match="not divisible by q"):
        series_shift(SeriesQ([0, 1, 1], 5), -2)


def test_pow_examples():
    assert series_pow(SeriesQ([1, 1], 6), 2) == SeriesQ([1, 2, 1], 6)
    assert series_pow(SeriesQ([3, 1], 6), 0) == SeriesQ.one(6)
    g1 = narayana_series(8) - SeriesQ.one(8)
    cube = series_pow(g1, 3)
    assert cube.valuation() == 3 and cube[3] == 1


def test_rendering():
    assert str(SeriesQ([1, 1, 1 + t], 3)) == "1 + q + (1 + t)*q^2 + O(q^3)"


def test_truncation_is_strict():
    a = SeriesQ([1, 2], 3)
    with pytest.raises(ValueError):
        a.truncate(5)
    with pytest.raises(IndexError):
        a[3]
    assert (a + SeriesQ([1], 10)).order == 3


@settings(max_examples=50, deadline=None)
@given(series(8, unit=True))
def test_invert_round_trip(a):
    assert a * series_invert(a) == SeriesQ.one(8)


@settings(max_examples=25, deadline=None)
@given(series(6), st.integers(0, 6))
def test_pow_matches_repeated_mul(a, m):
    want = SeriesQ.one(6)
    for _ in range(m):
        want = want * a
    assert series_pow(a, m) == want


@settings(max_examples=40, deadline=None)
@given(series(8), st.integers(0, 4))
def test_shift_involution(a, e):
    assert series_shift(series_shift(a, e), -e) == a


@settings(max_examples=40, deadline=None)
@given(series(10), series(10), st.integers(0, 3), st.integers(0, 3))
def test_valuation_additive(a, b, i, j):
    a, b = series_shift(a, i), series_shift(b, j)
    if a.is_zero() or b.is_zero():
        return
    p = a * b
    if p.valuation() < p.order and a.valuation() + b.valuation() < p.order:
        assert p.valuation() == a.valuation() + b.valuation()

from fractions import Fraction

import pytest

from narayana_hankel.closedforms import (
    _Q3, alpha_poly, beta_poly, cigler_det, cigler_r, conjectured_six_tuples, expected_hfrac,
    fib_lucas_closed_check, fib_poly, lucas_poly, main_det, odd_case_triple, qint, r_poly,
    rho_poly, rho_poly_alt, rs_relations, s_poly, stream_entry,
)
from narayana_hankel.exactnum import T, PolyT, as_ratfunc
from narayana_hankel.qseries import PolyQ, SeriesQ
from narayana_hankel.hfrac import hfrac_expand
from narayana_hankel.sequences import FamilySpec, family_series, narayana_series

t = as_ratfunc(T)


def test_qint():
    assert qint(3, 1) == PolyT([1, 1, 1])
    assert qint(0, 5) == PolyT()
    assert qint(2, 2) == PolyT([1, 0, 1])
    assert qint(1, 7) == PolyT([1])


def test_rho():
    for m in range(1, 8):
        assert rho_poly(m, m) == PolyT([1]) + PolyT.monomial(m)
        assert rho_poly(m, 0) == PolyT([1])
        assert rho_poly(m, 1) == PolyT([m, m])
    with pytest.raises(ValueError):
        rho_poly(2, 3)


def test_rho_cross_form():
    assert all(rho_poly(m, d) == rho_poly_alt(m, d) for m in range(1, 11) for d in range(m))


def test_beta_alpha():
    assert beta_poly(2) == PolyQ([1, -2 - 2 * t, 1 + t ** 2])
    for m in range(1, 11):
        b = beta_poly(m)
        assert b[0] == 1
        assert b[m - 1] * (-1) ** (m - 1) == as_ratfunc(qint(m) * m)
    for m in range(2, 11):
        tail = PolyQ.monomial(m - 1, as_ratfunc(qint(m) * m) * (-1) ** (m - 1)) \
            + PolyQ.monomial(m, (1 + t ** m) * (-1) ** m)
        assert beta_poly(m) - alpha_poly(m) == tail
    with pytest.raises(ValueError):
        alpha_poly(1)


def test_r_s():
    for m in range(1, 6):
        assert r_poly(m, 0) == qint(m) * m
        for n in range(1, 5):
            assert s_poly(m, n) == r_poly(m, n) + PolyT.monomial(m) * r_poly(m, n - 1)
    assert r_poly(3, 1) == qint(3) * 3 * PolyT([1, 0, 0, 3, 0, 0, 1])
    assert cigler_r(1) == PolyT([1, 0, 0, 3, 0, 0, 1])


def test_rs_relations():
    for m in range(1, 7):
        for j in range(7):
            for label, lhs, rhs in rs_relations(m, j):
                assert lhs == rhs, (m, j, label)


def test_lucas_fib():
    x, s = PolyT([0, 1]), PolyT([3])
    assert lucas_poly(0)(x, s) == 2
    assert lucas_poly(1)(x, s) == x
    X, S = as_ratfunc(Fraction(3)), as_ratfunc(Fraction(5))
    assert lucas_poly(2)(X, S) == X * X + S * 2
    assert fib_poly(3)(X, S) == X * X + S
    assert fib_poly(0)(X, S) == 0 and fib_poly(1)(X, S) == 1
    for n in range(2, 10):
        assert lucas_poly(n)(X, S) == X * lucas_poly(n - 1)(X, S) + S * lucas_poly(n - 2)(X, S)
        assert fib_poly(n)(X, S) == X * fib_poly(n - 1)(X, S) + S * fib_poly(n - 2)(X, S)


def test_main_det_examples():
    d = main_det(FamilySpec(2, 1), 4)
    assert d.value == t ** 4 and d.case_label == "N=mn"
    assert main_det(FamilySpec(3, 3), 1).value == 1
    z = main_det(FamilySpec(3, 1), 4)
    assert z.value == 0 and z.case_label == "otherwise"
    assert main_det(FamilySpec(2, 0), 0).value == 1


def test_main_det_precondition():
    with pytest.raises(ValueError):
        main_det(FamilySpec(2, 2), -1)
    with pytest.raises(ValueError):
        FamilySpec(2, 3)


def test_main_det_m1_overlap_reported():
    d = main_det(FamilySpec(1, 0), 3)
    assert d.also_matched == ("N=mn+1",)


def test_cigler_examples():
    assert cigler_det(4, 3) == -(t ** 2) * (1 + t ** 2)
    assert cigler_det(6, 2) == -3 * (1 + t + t ** 2)
    assert cigler_det(3, 0) == 1


def test_expected_hfrac_examples():
    for m in range(1, 5):
        h = expected_hfrac(FamilySpec(m, 1), 5)
        assert all(q.k == m - 1 for q in h.quotients)
        assert h.quotients[0].v == 1 and all(q.v == t ** m for q in h.quotients[1:])
        assert all(PolyQ([1]) + q.u.shift(1) == beta_poly(m) for q in h.quotients)
    for m in range(3, 6):
        # (gamma - 1)^m / q^3 starts with +1, so v_0 = 1 (not -1)
        v0 = expected_hfrac(FamilySpec(m, 3), 1).quotients[0].v
        assert v0 == 1 == hfrac_expand(family_series(FamilySpec(m, 3), 8)).quotients[0].v


def test_expected_hfrac_rejects_bad_exponent():
    with pytest.raises(ValueError, match="exponent"):
        expected_hfrac(FamilySpec(1, 0), 3)


def test_stream_examples():
    for m in range(2, 6):
        for j in range(3):
            e = stream_entry("Q2", m, 2 * j + 1)
            assert e.C == PolyQ.monomial(m, -1) and e.D == PolyQ([1])
    for m in range(3, 6):
        q3 = _Q3(m)
        for j in range(3):
            assert stream_entry("Q3", m, 3 * j).D == q3.alpha
            assert stream_entry("Q3", m, 3 * j + 1).D == PolyQ([1, q3.v(j)])


def test_stream_undefined_index():
    with pytest.raises(ValueError):
        _Q3(3).v(-1)
    with pytest.raises(ValueError):
        conjectured_six_tuples("Q3", 3, -1)
    with pytest.raises(ValueError):
        conjectured_six_tuples("Q5", 3, 0)


def test_fib_lucas_closed():
    assert fib_lucas_closed_check(1, "fib")
    assert fib_lucas_closed_check(3, "fib")
    assert fib_lucas_closed_check(3, "lucas")
    assert all(fib_lucas_closed_check(n, "lucas") for n in range(13))


@pytest.mark.parametrize("m,m0", [(1, 0), (2, 1), (3, 3)])
def test_odd_case_examples(m, m0):
    g = narayana_series(20 + m0)
    f = (g * (g - SeriesQ.one(20 + m0)) ** m).shift(-m0)
    assert odd_case_triple(m, m0).residual(f).is_zero()


def test_odd_case_rejects():
    with pytest.raises(ValueError):
        odd_case_triple(0, 1)

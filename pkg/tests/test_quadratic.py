import random

import pytest

from narayana_hankel.closedforms import beta_poly, conjectured_six_tuples
from narayana_hankel.exactnum import ONE, T, PolyT, as_ratfunc
from narayana_hankel.hfrac import hfrac_expand
from narayana_hankel.qseries import PolyQ, SeriesQ
from narayana_hankel.quadratic import (
    QuadTriple, family_quadratic, hfrac_from_quadratic, iterate_next_abc, next_abc, quad_power,
    quad_scale, quad_shift, quad_solve_series,
)
from narayana_hankel.sequences import FamilySpec, family_series, narayana_series

t = as_ratfunc(T)
# -1 + (1 - q + tq) gamma - tq gamma^2 = 0
NARAYANA = QuadTriple(PolyQ([-1]), PolyQ([1, t - 1]), PolyQ([0, -t]))


def gm1(order):
    return narayana_series(order) - SeriesQ.one(order)


def random_triple(rng):
    def poly(lo, n):
        return PolyQ([0] * lo + [as_ratfunc(PolyT([rng.randint(-2, 2), rng.randint(-2, 2)]))
                                 for _ in range(n)])
    A = poly(rng.randint(0, 2), 2)
    while A.is_zero():
        A = poly(0, 2)
    C = poly(rng.randint(1, 2), 2)
    while C.is_zero():
        C = PolyQ([0, 0, 1])
    return QuadTriple(A, PolyQ([1]) + poly(1, 2), C)


def test_solve_examples():
    assert quad_solve_series(family_quadratic(1, 0), 10) == gm1(10)
    assert quad_solve_series(family_quadratic(2, 2), 12) == family_series(FamilySpec(2, 2), 12)
    geo = QuadTriple(PolyQ([-1]), PolyQ([1, -1]), PolyQ())
    assert quad_solve_series(geo, 8) == SeriesQ([1] * 8, 8)


def test_scale_examples():
    tq = family_quadratic(1, 0)
    assert quad_scale(tq, PolyQ([1])) == tq
    assert quad_solve_series(quad_scale(tq, PolyQ([3])), 8) == gm1(8) * 3
    assert quad_solve_series(quad_scale(tq, PolyQ([1, 1])), 10) == gm1(10) * PolyQ([1, 1])
    with pytest.raises(ValueError):
        quad_scale(tq, PolyQ([0, 1]))


def test_shift_examples():
    assert quad_shift(NARAYANA, PolyQ()) == NARAYANA
    shifted = quad_shift(NARAYANA, PolyQ([-1]))
    assert shifted == QuadTriple(PolyQ([0, -1]), PolyQ([1, -1 - t]), PolyQ([0, -t]))
    assert shifted == family_quadratic(1, 0)
    assert quad_shift(shifted, PolyQ([1])) == NARAYANA


def test_power_examples():
    tq = family_quadratic(1, 0)
    assert quad_power(tq, 1) == tq
    sq = quad_power(tq, 2)
    A, B, C = tq.A, tq.B, tq.C
    assert sq == QuadTriple(-(A * A), B * B - A * C * 2, -(C * C))
    f = gm1(12)
    assert sq.residual(f * f).is_zero()
    with pytest.raises(ValueError):
        quad_power(tq, 0)


def test_family_quadratic_examples():
    assert family_quadratic(2, 2) == QuadTriple(PolyQ([-1]), beta_poly(2), PolyQ.monomial(4, -t ** 2))
    tq = family_quadratic(3, 3)
    assert tq.A == PolyQ([-1]) and tq.C == PolyQ.monomial(6, -t ** 3)
    with pytest.raises(ValueError):
        family_quadratic(1, 2)


@pytest.mark.parametrize("m", range(1, 5))
def test_family_quadratic_solution(m):
    for m0 in range(0, min(m, 3) + 1):
        got = quad_solve_series(family_quadratic(m, m0), 15)
        assert got == family_series(FamilySpec(m, m0), 15)


def test_next_abc_examples():
    st = next_abc(family_quadratic(2, 2))
    assert st.k == 0 and st.a == -1
    assert st.d == PolyQ([1, -2 - 2 * t])
    assert st.d == beta_poly(2) - PolyQ.monomial(2, 1 + t ** 2)
    for m in range(2, 6):
        st = next_abc(family_quadratic(m, 2))
        assert (st.k, st.a) == (m - 2, -1)


def test_next_abc_invariants_random():
    rng = random.Random(7)
    for _ in range(30):
        tq = random_triple(rng)
        st = next_abc(tq)
        assert st.b_star[0] == ONE and not st.c_star[0]
        assert st.d[0] == ONE and st.d.degree <= st.k + 1
        assert next_abc(tq, shortcut=False) == st


def test_next_abc_preconditions():
    with pytest.raises(ValueError):
        next_abc(QuadTriple(PolyQ(), PolyQ([1]), PolyQ([0, 1])))
    with pytest.raises(ValueError):
        next_abc(QuadTriple(PolyQ([1]), PolyQ([1]), PolyQ()))


def test_iterate_examples():
    assert iterate_next_abc(family_quadratic(2, 2), 0) == []
    for variant, m in (("Q2", 2), ("Q3", 3)):
        stream = iterate_next_abc(family_quadratic(m, int(variant[1])), 6)
        for n, st in enumerate(stream):
            assert st == conjectured_six_tuples(variant, m, n)


def test_hfrac_from_quadratic_examples():
    h = hfrac_from_quadratic(family_quadratic(2, 2), 6)
    g = hfrac_expand(family_series(FamilySpec(2, 2), 24))
    n = min(len(h), len(g))
    assert n >= 5 and h.quotients[:n] == g.quotients[:n]
    h1 = hfrac_from_quadratic(family_quadratic(1, 1), 6)
    assert all(q.k == 0 for q in h1.quotients)
    assert h1.quotients[0].v == 1 and all(q.v == t for q in h1.quotients[1:])
    for m in range(1, 5):
        assert hfrac_from_quadratic(family_quadratic(m, m), 1).quotients[0].v == 1


def test_rational_tail_stops():
    # F = q solves -q - q^4 + F + q^2 F^2 = 0; the stream ends after one step
    tq = QuadTriple(PolyQ([0, -1, 0, 0, -1]), PolyQ([1]), PolyQ([0, 0, 1]))
    stream = iterate_next_abc(tq, 5)
    assert len(stream) == 1 and stream[0].a_star.is_zero()
    h = hfrac_from_quadratic(tq, 5)
    assert str(h.status) == "Complete" and h.ks == [1]

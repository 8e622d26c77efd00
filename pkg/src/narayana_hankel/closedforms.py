"""Explicit formulas: q-integers, rho/R/S, beta/alpha, Lucas and Fibonacci
polynomials, determinant closed forms, expected H-fractions and the
conjectured NextABC streams."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .exactnum import ONE, ONE_T, T, ZERO_T, PolyT, RatFuncT, as_ratfunc
from .hfrac import HFraction, Quotient, Status
from .qseries import PolyQ
from .sequences import FamilySpec


# ---------------------------------------------------------------------------
# basic polynomials in t
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def qint(n: int, e: int = 1) -> PolyT:
    """[n]_{t^e} = 1 + t^e + ... + t^(e(n-1))."""
    if n < 0:
        raise ValueError("q-integer of a negative number")
    c = [0] * (e * (n - 1) + 1) if n else []
    for i in range(n):
        c[e * i] += 1
    return PolyT(c)


def _tpow(k: int) -> PolyT:
    if k < 0:
        raise ValueError(f"negative power t^{k}")
    return PolyT.monomial(k)


@lru_cache(maxsize=None)
def rho_poly(m: int, d: int) -> PolyT:
    if not 0 <= d <= m:
        raise ValueError(f"rho needs 0 <= d <= m, got m={m}, d={d}")
    if d == m:
        # the sum is 0/0 at its endpoints here; its limit is 1 + t^m
        return ONE_T + _tpow(m)
    return PolyT([Fraction(m * (m - d), (m - i) * (m - d + i)) * comb(m - d + i, i)
                  * comb(m - i, d - i) for i in range(d + 1)])


def rho_poly_alt(m: int, d: int) -> PolyT:
    """The m/(m-d) form, valid for d < m."""
    if not 0 <= d < m:
        raise ValueError(f"alternative rho needs 0 <= d < m, got m={m}, d={d}")
    return PolyT([Fraction(m, m - d) * comb(m - 1 - d + i, i) * comb(m - 1 - i, d - i)
                  for i in range(d + 1)])


@lru_cache(maxsize=None)
def beta_poly(m: int) -> PolyQ:
    if m < 1:
        raise ValueError("beta needs m >= 1")
    return PolyQ([rho_poly(m, d) * (-1) ** d for d in range(m + 1)])


@lru_cache(maxsize=None)
def alpha_poly(m: int) -> PolyQ:
    if m < 2:
        raise ValueError("alpha needs m >= 2 (it is an empty sum at m = 1)")
    return PolyQ([rho_poly(m, d) * (-1) ** d for d in range(m - 1)])


def _weighted(m: int, n: int, w: Callable[[int], int]) -> PolyT:
    c = [0] * (2 * m * n + 1)
    for i in range(2 * n + 1):
        c[m * i] = w(min(i, 2 * n - i))
    return PolyT(c)


@lru_cache(maxsize=None)
def r_poly(m: int, n: int) -> PolyT:
    """R(m;t,n); R(m;t,-1) = 0."""
    if n < -1:
        raise ValueError("R(m;t,n) needs n >= -1")
    if n == -1:
        return ZERO_T
    return qint(m) * m * _weighted(m, n, lambda i: comb(i + 2, 2))


@lru_cache(maxsize=None)
def s_poly(m: int, n: int) -> PolyT:
    if n < -1:
        raise ValueError("S(m;t,n) needs n >= -1")
    if n == -1:
        return ZERO_T
    return qint(m) * m * _weighted(m, n, lambda i: (i + 1) ** 2)


def rs_relations(m: int, j: int) -> list[tuple[str, PolyT, PolyT]]:
    """The identities tying R and S together, denominators cleared.

    Each entry is (label, lhs, rhs); the relation holds when lhs == rhs.
    """
    if j < 0:
        raise ValueError("relations need j >= 0")
    mm = qint(m) * m
    tm = _tpow(m)
    R, S = lambda n: r_poly(m, n), lambda n: s_poly(m, n)  # noqa: E731
    j1, j2 = qint(j + 1, m) ** 2, qint(j + 2, m) ** 2
    return [
        ("2R(j)-S(j)", mm * j1, R(j) * 2 - S(j)),
        ("S(j+1)-2t^mR(j)", mm * j2, S(j + 1) - tm * R(j) * 2),
        ("S(j)-2t^mR(j-1)", mm * j1, S(j) - tm * R(j - 1) * 2),
        ("R(j)-t^mR(j-1)", mm * j1, R(j) - tm * R(j - 1)),
        ("S(j)=R(j)+t^mR(j-1)", S(j), R(j) + tm * R(j - 1)),
    ]


def cigler_r(n: int) -> PolyT:
    r = _weighted(3, n, lambda i: comb(i + 2, 2))
    assert r * (qint(3) * 3) == r_poly(3, n), "r_n disagrees with R(3;t,n)/(3[3]_t)"
    return r


# ---------------------------------------------------------------------------
# Lucas and Fibonacci polynomials over any commutative ring
# ---------------------------------------------------------------------------

def lucas_poly(n: int):
    """Evaluator (x, s) -> L_n(x, s) built from the defining sum."""
    if n < 0:
        raise ValueError("negative Lucas index")

    def ev(x, s):
        if n == 0:
            return x ** 0 * 2
        total = x * 0
        for i in range(n // 2 + 1):
            total = total + s ** i * x ** (n - 2 * i) * (n * comb(n - i, i) // (n - i))
        return total
    return ev


def fib_poly(n: int):
    """Evaluator (x, s) -> F_n(x, s) built from the defining sum."""
    if n < 0:
        raise ValueError("negative Fibonacci index")

    def ev(x, s):
        total = x * 0
        for k in range((n - 1) // 2 + 1):
            total = total + s ** k * x ** (n - 1 - 2 * k) * comb(n - 1 - k, k)
        return total
    return ev


def _three_term(n: int, x, s, p0, p1):
    if n == 0:
        return p0
    a, b = p0, p1
    for _ in range(n - 1):
        a, b = b, x * b + s * a
    return b


def lucas_rec(n: int, x, s):
    return _three_term(n, x, s, x ** 0 * 2, x)


def fib_rec(n: int, x, s):
    return _three_term(n, x, s, x * 0, x ** 0)


def fib_closed(n: int, x, s):
    u = x * x + s * 4
    total = x * 0
    for k in range(1, (n + 1) // 2 + 1):
        total = total + u ** (k - 1) * x ** (n - 2 * k + 1) * comb(n, 2 * k - 1)
    return total * Fraction(1, 2 ** (n - 1)) if n else total


def lucas_closed(n: int, x, s):
    u = x * x + s * 4
    total = x * 0
    for k in range(n // 2 + 1):
        total = total + u ** k * x ** (n - 2 * k) * comb(n, 2 * k)
    return total * (Fraction(1, 2 ** (n - 1)) if n else 2)


def fib_lucas_closed_check(n: int, which: str) -> bool:
    """Closed form against the recurrence at x = t and enough sampled s."""
    if which == "fib":
        if n < 1:
            raise ValueError("fib check needs n >= 1")
        closed, rec = fib_closed, fib_rec
    elif which == "lucas":
        if n < 0:
            raise ValueError("lucas check needs n >= 0")
        closed, rec = lucas_closed, lucas_rec
    else:
        raise ValueError(f"unknown family {which!r}")
    x = as_ratfunc(T)
    samples = [Fraction(i + 1, 2 + i % 3) * (-1) ** i for i in range((n + 1) // 2 + 2)]
    return all(closed(n, x, as_ratfunc(s)) == rec(n, x, as_ratfunc(s)) for s in samples)


# ---------------------------------------------------------------------------
# Hankel determinant closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DetCase:
    family: FamilySpec
    size: int
    value: RatFuncT
    case_label: str
    also_matched: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.value}  [{self.case_label}]"


_MIN_M = {0: 1, 1: 1, 2: 2, 3: 3}


def _half(x: int) -> int:
    assert x % 2 == 0, "odd exponent in a halved power"
    return x // 2


def _branches(m: int, shift: int, N: int) -> list[tuple[str, RatFuncT]]:
    """Every branch of the governing theorem that matches size N, in order."""
    qi = lambda n: qint(n, m)  # noqa: E731
    xi = lambda n: (-1) ** (n * m * (m - 1) // 2)  # noqa: E731
    hits: list[tuple[str, PolyT]] = []

    def match(label: str, offset: int, nmin: int, fn):
        if (N - offset) % m == 0 and (N - offset) // m >= nmin:
            hits.append((label, fn((N - offset) // m)))

    if shift == 0:
        if N == 0:
            hits.append(("N=0", ONE_T))
        match("N=mn", 0, 1, lambda n: -xi(n) * _tpow(_half(m * (n - 1) * (m * n - 2))) * qi(n - 1))
        match("N=mn+1", 1, 0, lambda n: (-1) ** m * xi(n) * _tpow(_half(m * m * n * (n - 1))) * qi(n))
    elif shift == 1:
        match("N=mn", 0, 0, lambda n: xi(n) * _tpow(_half(m * m * n * (n - 1))))
    elif shift == 2:
        # signs as confirmed by the oracle; an extra (-1)^(mn) breaks odd m
        match("N=mn", 0, 0, lambda n: xi(n) * _tpow(_half(m * m * n * (n - 1))) * qi(n + 1))
        match("N=mn-1", -1, 1, lambda n: (-1) ** (m - 1) * xi(n)
              * _tpow(_half(m * (n - 1) * (m * n - 2))) * qi(n))
    else:
        match("N=mn", 0, 0, lambda n: xi(n) * _tpow(_half(m * m * n * (n - 1))) * qi(n + 1) ** 2)
        match("N=mn-1", -1, 1, lambda n: (-1) ** (m - 1) * xi(n)
              * _tpow(_half(m * (n - 1) * (m * n - 2))) * r_poly(m, n - 1))
        match("N=mn-2", -2, 1, lambda n: -xi(n) * _tpow(_half(m * (n - 1) * (m * n - 4))) * qi(n) ** 2)
    return [(label, as_ratfunc(v)) for label, v in hits]


def main_det(family: FamilySpec, size: int) -> DetCase:
    m, shift = family.m, family.shift
    if m < _MIN_M[shift]:
        raise ValueError(f"shift {shift} closed form requires m >= {_MIN_M[shift]}, got m={m}")
    if size < 0:
        raise ValueError("negative size")
    hits = _branches(m, shift, size)
    if not hits:
        return DetCase(family, size, as_ratfunc(0), "otherwise")
    label, value = hits[0]
    for other, v in hits[1:]:
        if v != value:
            raise ValueError(f"branches {label} and {other} disagree at N={size}: {value} vs {v}")
    return DetCase(family, size, value, label, tuple(o for o, _ in hits[1:]))


def cigler_det(variant: int, size: int) -> RatFuncT:
    N = size
    if variant == 3:
        top = comb(N, 2)
        c = [0] * (top + 1)
        for k in range(N // 2 + 1):
            c[top - k] += (-1) ** k * comb(N - k, k)
        return as_ratfunc(PolyT(c))
    if variant == 4:
        n, r = divmod(N, 2)
        e = 2 * n * (n - 1) if r == 0 else 2 * n * n
        return as_ratfunc((-1) ** n * _tpow(e) * qint(n + 1, 2))
    if variant == 6:
        n, r = divmod(N, 3)
        if r == 0:
            return as_ratfunc((-1) ** n * _tpow(9 * n * (n - 1) // 2) * qint(n + 1, 3) ** 2)
        if r == 1:
            return as_ratfunc((-1) ** n * _tpow(3 * n * (3 * n - 1) // 2) * qint(n + 1, 3) ** 2)
        return as_ratfunc((-1) ** (n + 1) * 3 * _tpow(3 * n * (3 * n + 1) // 2)
                          * qint(3) * cigler_r(n))
    raise ValueError(f"unknown Cigler variant {variant}; expected 3, 4 or 6")


# ---------------------------------------------------------------------------
# expected H-fractions
# ---------------------------------------------------------------------------

def _mq(e: int, c=1) -> PolyQ:
    """c * (-q)^e."""
    return PolyQ.monomial(e, as_ratfunc(c) * (-1) ** e)


def _u_of(one_plus_uq: PolyQ) -> PolyQ:
    return (one_plus_uq - PolyQ([ONE])).shift(-1)


def _r(x) -> RatFuncT:
    return as_ratfunc(x)


def _q0_quotient(m: int, j: int) -> tuple[int, RatFuncT, PolyQ]:
    tm = _tpow(m)
    beta = beta_poly(m)
    d_even = beta - _mq(m, ONE_T + tm)
    if j == 0:
        return m, ONE, _u_of(beta)
    i, odd = divmod(j - 1, 2)
    if not odd:  # j = 2i + 1
        if i == 0:
            v = _r(tm)
        else:
            v = -_r((-1) ** m * tm) * _r(qint(i, m)) / _r(qint(i + 1, m))
        return m - 2, v, _u_of(d_even)
    # j = 2i + 2
    v = _r((-1) ** (m + 1) * qint(i + 2, m)) / _r(qint(i + 1, m))
    return 0, v, PolyQ()


def _q1_quotient(m: int, j: int) -> tuple[int, RatFuncT, PolyQ]:
    v = ONE if j == 0 else _r(_tpow(m))
    return m - 1, v, _u_of(beta_poly(m))


def _q2_quotient(m: int, j: int) -> tuple[int, RatFuncT, PolyQ]:
    i, odd = divmod(j, 2)
    if not odd:
        if i == 0:
            v = ONE
        else:
            v = -_r((-1) ** m * _tpow(m)) * _r(qint(i, m)) / _r(qint(i + 1, m))
        return m - 2, v, _u_of(beta_poly(m) - _mq(m, ONE_T + _tpow(m)))
    v = _r((-1) ** (m + 1) * qint(i + 2, m)) / _r(qint(i + 1, m))
    return 0, v, PolyQ()


def _q3_quotient(m: int, j: int) -> tuple[int, RatFuncT, PolyQ]:
    i, r = divmod(j, 3)
    J1, J2 = _r(qint(i + 1, m)), _r(qint(i + 2, m))
    R = lambda n: _r(r_poly(m, n))  # noqa: E731
    if r == 0:
        # v_0 = 1 and the leading sign of v_{3j}: see the decisions ledger
        v = ONE if i == 0 else -_r((-1) ** m * _tpow(m)) * R(i - 1) / J1 ** 2
        return m - 3, v, _u_of(alpha_poly(m))
    if r == 1:
        v = _r((-1) ** m) * R(i) / J1 ** 2
        return 0, v, PolyQ([J1 * J2 / R(i)])
    v = -(J1 * J2) ** 2 / R(i) ** 2
    return 0, v, PolyQ([-(J1 * J2) / R(i)])


_EXPECTED = {0: (2, _q0_quotient), 1: (1, _q1_quotient), 2: (2, _q2_quotient), 3: (3, _q3_quotient)}


def expected_hfrac(family: FamilySpec, terms: int) -> HFraction:
    m, shift = family.m, family.shift
    mmin, fn = _EXPECTED[shift]
    if m < mmin:
        raise ValueError(f"shift {shift} H-fraction needs m >= {mmin}: "
                         f"exponent m-{mmin} = {m - mmin} is negative")
    qs = [Quotient(*fn(m, j)) for j in range(terms)]
    return HFraction(qs, 2, Status.MAX_TERMS_REACHED)


# ---------------------------------------------------------------------------
# conjectured NextABC streams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StreamEntry:
    """(A_n, B_n, C_n, k_n, a_n, D_n) at one index n of a stream."""

    A: PolyQ
    B: PolyQ
    C: PolyQ
    k: int
    a: RatFuncT
    D: PolyQ


def _q2_entry(m: int, n: int) -> StreamEntry:
    if m < 2:
        raise ValueError("the Q2 stream needs m >= 2")
    j, odd = divmod(n, 2)
    J0, J1, J2 = (_r(qint(j + e, m)) for e in range(3))
    tm = _r(_tpow(m))
    beta = beta_poly(m)
    qm = PolyQ.monomial(m)
    sgn = (-1) ** m
    if not odd:
        if j == 0:
            A = PolyQ.monomial(m - 2, -1)
            C = PolyQ.monomial(m + 2, -tm)
            a = -ONE
        else:
            a = sgn * tm * J0 / J1
            A = PolyQ.monomial(m - 2, a)
            C = -beta.shift(2) - _mq(m + 2, 1 / J1 - _r(_tpow(m * j)) / J0 - 2)
        B = beta + _mq(m, 2 * (1 / J1 - 1))
        D = beta - _mq(m, ONE_T + _tpow(m))
        return StreamEntry(A, B, C, m - 2, a, D)
    a = sgn * J2 / J1
    tj = _r(_tpow(m * (j + 1)))
    A = beta * a + qm * ((1 - 2 * J2) / J1 - tj * J2 / J1 ** 2)
    B = beta - _mq(m, 2 * (tj / J1 + 1))
    C = PolyQ.monomial(m, -1)
    return StreamEntry(A, B, C, 0, a, PolyQ([ONE]))


class _Q3:
    """Shorthands u(j), v(j), w_1, w_2, w_3 of the Q3 stream for one m."""

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("the Q3 stream needs m >= 3")
        self.m = m
        self.alpha = alpha_poly(m)
        self.mm = _r(qint(m) * m)

    def J(self, n: int) -> RatFuncT:
        return _r(qint(n, self.m))

    def R(self, n: int) -> RatFuncT:
        return _r(r_poly(self.m, n))

    def u(self, j: int) -> RatFuncT:
        return (-1) ** (self.m + 1) * self.R(j) / self.J(j + 1) ** 2

    def v(self, j: int) -> RatFuncT:
        if j < 0:
            raise ValueError("v(j) is undefined for j < 0 (R(-1) = 0)")
        return self.J(j + 1) * self.J(j + 2) / self.R(j)

    def w2(self, j: int) -> PolyQ:
        J1 = self.J(j + 1)
        return (_mq(self.m - 1, _r(s_poly(self.m, j)) / J1 ** 2)
                + _mq(self.m, (1 + _r(_tpow(self.m * (j + 1)))) / J1))

    def w3_times_r(self, j: int) -> RatFuncT:
        # w_3(j) R(j-1), written without v(j-1) so that j = 0 is defined
        J0, J1 = self.J(j), self.J(j + 1)
        return self.mm * J0 * J1 - (1 + _r(_tpow(self.m * (j + 1)))) * self.R(j - 1) / J1

    def w3(self, j: int) -> RatFuncT:
        return self.mm * self.v(j - 1) - (1 + _r(_tpow(self.m * (j + 1)))) / self.J(j + 1)

    def A1(self, j: int) -> PolyQ:
        m = self.m
        J1, J2 = self.J(j + 1), self.J(j + 2)
        first = self.alpha * PolyQ([self.u(j), (-1) ** m * J2 / J1])
        rj = self.R(j - 1)
        inner = PolyQ([(-1) ** (m + 1) * self.u(j) * rj, self.w3_times_r(j),
                       _r(_tpow(m * j))])
        return first - inner * PolyQ.monomial(m - 1, _r(_tpow(m)) / J1 ** 2)

    def w1(self, j: int) -> PolyQ:
        return self.A1(j) * self.u(j).inverse()

    def C0(self, j: int) -> PolyQ:
        m = self.m
        if j == 0:
            return PolyQ.monomial(m + 3, -_r(_tpow(m)))
        return (-(self.alpha.shift(2) * PolyQ([ONE, self.v(j - 1)]))
                - PolyQ.monomial(m + 1, self.u(j))
                + _mq(m + 2, self.w3(j))
                - _mq(m + 3, _r(_tpow(m * j)) / self.R(j - 1)))

    def entry(self, n: int) -> StreamEntry:
        m = self.m
        j, r = divmod(n, 3)
        if r == 0:
            if j == 0:
                A, a = PolyQ.monomial(m - 3, -1), -ONE
            else:
                a = (-1) ** m * _r(_tpow(m)) * self.R(j - 1) / self.J(j + 1) ** 2
                A = PolyQ.monomial(m - 3, a)
            return StreamEntry(A, self.alpha + self.w2(j), self.C0(j), m - 3, a, self.alpha)
        vj = self.v(j)
        if r == 1:
            return StreamEntry(self.A1(j), self.alpha - self.w2(j), PolyQ.monomial(m - 1, -1),
                               0, self.u(j), PolyQ([ONE, vj]))
        w1 = self.w1(j)
        A = (self.C0(j + 1) * (-vj ** 2)).shift(-2)
        B = PolyQ([ONE, vj]) * w1 * 2 - self.alpha + self.w2(j)
        return StreamEntry(A, B, -w1.shift(2), 0, vj ** 2, PolyQ([ONE, -vj]))


@lru_cache(maxsize=None)
def stream_entry(variant: str, m: int, n: int) -> StreamEntry:
    if n < 0:
        raise ValueError("negative stream index")
    if variant == "Q2":
        return _q2_entry(m, n)
    if variant == "Q3":
        return _Q3(m).entry(n)
    raise ValueError(f"unknown stream variant {variant!r}; expected Q2 or Q3")


def conjectured_six_tuples(variant: str, m: int, n: int):
    """The claimed NextABC output on step n: (A,B,C)_{n+1} with (k,a,D)_n."""
    from .quadratic import SixTuple

    cur, nxt = stream_entry(variant, m, n), stream_entry(variant, m, n + 1)
    return SixTuple(nxt.A, nxt.B, nxt.C, cur.k, cur.a, cur.D)


def stream_start(variant: str, m: int):
    from .quadratic import QuadTriple

    e = stream_entry(variant, m, 0)
    return QuadTriple(e.A, e.B, e.C)


# ---------------------------------------------------------------------------
# the odd convolution powers
# ---------------------------------------------------------------------------

def odd_case_triple(m: int, m0: int):
    """Quadratic for gamma * (gamma - 1)^m / q^m0."""
    from .quadratic import QuadTriple

    if not 0 <= m0 <= m:
        raise ValueError(f"need 0 <= m0 <= m, got m={m}, m0={m0}")
    t = _r(T)
    x = PolyQ([-1, 1 + t])
    s = PolyQ([0, 0, -t])
    lead = PolyQ([1, t - 1])
    disc = PolyQ([1, 1 - t]) ** 2 - PolyQ([0, 4])
    big_t = lead * lucas_poly(m)(x, s) - disc * fib_poly(m)(x, s)
    return QuadTriple.normalized(PolyQ.monomial(m - m0, -2), big_t * (-1) ** m,
                                 PolyQ.monomial(m + m0 + 1, -2 * t ** (m + 1)))

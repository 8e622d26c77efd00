"""Quadratic power series A + B F + C F^2 = 0 and Algorithm NextABC."""
from __future__ import annotations

from dataclasses import dataclass

from .closedforms import beta_poly, lucas_poly
from .exactnum import ONE, ZERO, RatFuncT, T, as_ratfunc
from .hfrac import HFraction, Quotient, Status
from .qseries import PolyQ, SeriesQ


class AlgorithmInvariantError(ArithmeticError):
    """An exact division inside NextABC left a remainder."""

    def __init__(self, detail: str):
        super().__init__(f"algorithm invariant violated: {detail}")


@dataclass(frozen=True)
class QuadTriple:
    """(A, B, C) with B(0) = 1 and C(0) = 0, standing for A + B F + C F^2 = 0."""

    A: PolyQ
    B: PolyQ
    C: PolyQ

    def __post_init__(self):
        if self.B[0] != ONE:
            raise ValueError(f"B(0) must be 1, got {self.B[0]}")
        if self.C[0]:
            raise ValueError(f"C(0) must be 0, got {self.C[0]}")

    @classmethod
    def normalized(cls, A: PolyQ, B: PolyQ, C: PolyQ) -> QuadTriple:
        b0 = B[0]
        if not b0:
            raise ValueError("B has zero constant term; cannot normalize")
        if b0 == ONE:
            return cls(A, B, C)
        c = b0.inverse()
        return cls(A.scale(c), B.scale(c), C.scale(c))

    def residual(self, f: SeriesQ) -> SeriesQ:
        return f * f * self.C + f * self.B + self.A

    def __str__(self) -> str:
        return f"A={self.A} B={self.B} C={self.C}"


@dataclass(frozen=True)
class SixTuple:
    a_star: PolyQ
    b_star: PolyQ
    c_star: PolyQ
    k: int
    a: RatFuncT
    d: PolyQ

    def __post_init__(self):
        object.__setattr__(self, "a", as_ratfunc(self.a))

    @property
    def triple(self) -> QuadTriple:
        return QuadTriple(self.a_star, self.b_star, self.c_star)

    def __str__(self) -> str:
        return (f"k={self.k} a={self.a} D={self.d} "
                f"A*={self.a_star} B*={self.b_star} C*={self.c_star}")


def quad_solve_series(tq: QuadTriple, order: int) -> SeriesQ:
    """The power series root, one coefficient at a time from F = -(A + C F^2)/B."""
    A, B, C = tq.A, tq.B, tq.C
    f: list[RatFuncT] = []
    sq: list[RatFuncT] = []  # coefficients of F^2 known so far
    for n in range(order):
        acc = -A[n]
        for i in range(1, min(n, B.degree) + 1):
            if B[i]:
                acc = acc - B[i] * f[n - i]
        for i in range(1, min(n, C.degree) + 1):
            if C[i]:
                acc = acc - C[i] * sq[n - i]
        f.append(acc)
        s = ZERO
        for i in range(n + 1):
            if f[i] and f[n - i]:
                s = s + f[i] * f[n - i]
        sq.append(s)
    return SeriesQ(f, order)


def quad_scale(tq: QuadTriple, U: PolyQ) -> QuadTriple:
    """Triple for U * F."""
    if not U[0]:
        raise ValueError("scaling needs U(0) != 0 to keep B a unit")
    return QuadTriple.normalized(tq.A * U * U, tq.B * U, tq.C)


def quad_shift(tq: QuadTriple, U: PolyQ) -> QuadTriple:
    """Triple for F + U."""
    A, B, C = tq.A, tq.B, tq.C
    return QuadTriple.normalized(A - B * U + C * U * U, B - C * U * 2, C)


def quad_power(tq: QuadTriple, n: int) -> QuadTriple:
    """Triple for F^n."""
    if n < 1:
        raise ValueError(f"power {n} gives a degenerate triple")
    A, B, C = tq.A, tq.B, tq.C
    mid = lucas_poly(n)(B, -(A * C)) * (-1) ** (n + 1)
    return QuadTriple.normalized(A ** n, mid, C ** n)


def family_quadratic(m: int, m0: int) -> QuadTriple:
    """Triple solved by (gamma - 1)^m / q^m0."""
    if m < 1:
        raise ValueError("m must be positive")
    if m0 < 0 or m0 > m:
        raise ValueError(f"need 0 <= m0 <= m, got m={m}, m0={m0}")
    tm = as_ratfunc(T) ** m
    return QuadTriple(PolyQ.monomial(m - m0, -1), beta_poly(m), PolyQ.monomial(m + m0, -tm))


def _div_q(p: PolyQ, e: int, what: str) -> PolyQ:
    try:
        return p.shift(-e)
    except ValueError:
        raise AlgorithmInvariantError(f"q^{e} does not divide {what}") from None


def next_abc(tq: QuadTriple, shortcut: bool = True) -> SixTuple:
    A, B, C = tq.A, tq.B, tq.C
    if A.is_zero():
        raise ValueError("NextABC needs A != 0")
    if C.is_zero():
        raise ValueError("NextABC needs C != 0")
    k = A.valuation()
    a = A[k]
    unit = _div_q(A, k, "A").scale(a.inverse())  # A / (a q^k), constant term 1
    prec = k + 2
    if shortcut and C.valuation() >= 2:
        # a q^k C / B is O(q^(k+2)) and drops out
        if unit.degree == 0:
            d = B.truncate(prec)
        else:
            d = (B.to_series(prec) / unit.to_series(prec)).to_poly()
    else:
        bs = B.to_series(prec)
        d = (bs / unit.to_series(prec)
             - (C.to_series(prec) * a).shift(k).truncate(prec) / bs).to_poly()
    if d[0] != ONE:
        raise AlgorithmInvariantError(f"D(0) = {d[0]}, expected 1")
    qk = PolyQ.monomial(k)
    num = -(d * d * A).scale(a.inverse()) + B * d * qk - (C * qk * qk).scale(a)
    a_star = _div_q(num, 2 * k + 2, "the A* numerator")
    b_star = unit * d * 2 - B
    c_star = A.shift(2).scale(-a.inverse())
    if b_star[0] != ONE or c_star[0]:
        raise AlgorithmInvariantError("output triple lost B*(0) = 1 or C*(0) = 0")
    return SixTuple(a_star, b_star, c_star, k, a, d)


def iterate_next_abc(start: QuadTriple, steps: int, shortcut: bool = True) -> list[SixTuple]:
    """Chain NextABC; stops early after a step whose A* is zero."""
    out: list[SixTuple] = []
    tq = start
    for _ in range(steps):
        st = next_abc(tq, shortcut)
        out.append(st)
        if st.a_star.is_zero():
            break
        tq = st.triple
    return out


def hfrac_from_quadratic(start: QuadTriple, steps: int) -> HFraction:
    stream = iterate_next_abc(start, steps)
    qs = [Quotient(st.k, -st.a, (st.d - PolyQ([ONE])).shift(-1)) for st in stream]
    done = bool(stream) and stream[-1].a_star.is_zero()
    return HFraction(qs, 2, Status.COMPLETE if done else Status.MAX_TERMS_REACHED)

"""Super delta-fractions: expansion, evaluation and Hankel determinants."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .exactnum import ONE, ZERO, FieldLike, RatFuncT, as_ratfunc
from .qseries import PolyQ, SeriesQ


class Status(enum.Enum):
    COMPLETE = "Complete"
    PRECISION_EXHAUSTED = "PrecisionExhausted"
    MAX_TERMS_REACHED = "MaxTermsReached"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Quotient:
    """One level v q^k / (1 + u q - ...) of the fraction.

    ``u`` is the polynomial sitting in this level's own denominator, so
    quotient j carries u_{j+1} in the usual numbering.
    """

    k: int
    v: RatFuncT
    u: PolyQ = field(default_factory=PolyQ)

    def __post_init__(self):
        object.__setattr__(self, "v", as_ratfunc(self.v))
        if self.k < 0:
            raise ValueError(f"negative exponent k={self.k}")
        if not self.v:
            raise ValueError("partial numerator v must be nonzero")

    def __str__(self) -> str:
        return f"k={self.k} v={self.v} u={self.u}"


@dataclass
class HFraction:
    quotients: list[Quotient]
    delta: int = 2
    status: Status = Status.COMPLETE
    order: int | None = None  # precision of the expanded series, if any
    consumed: int | None = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.delta < 1:
            raise ValueError("delta must be positive")
        for j, qt in enumerate(self.quotients):
            if qt.u.degree > qt.k + self.delta - 2:
                raise ValueError(
                    f"quotient {j}: deg u = {qt.u.degree} exceeds k + delta - 2 = "
                    f"{qt.k + self.delta - 2}")

    def __len__(self) -> int:
        return len(self.quotients)

    @property
    def ks(self) -> list[int]:
        return [qt.k for qt in self.quotients]

    @property
    def vs(self) -> list[RatFuncT]:
        return [qt.v for qt in self.quotients]

    def indices(self) -> list[int]:
        """s_0, ..., s_J for the J stored quotients."""
        s = [0]
        for k in self.ks:
            s.append(s[-1] + k + 1)
        return s

    def __str__(self) -> str:
        return "\n".join(str(qt) for qt in self.quotients)


def _head_quotient(num: SeriesQ, den: SeriesQ, n: int) -> list[RatFuncT]:
    """First n coefficients of num/den for a unit den."""
    inv0 = den[0].inverse()
    out: list[RatFuncT] = []
    for i in range(n):
        acc = num[i]
        for j in range(1, i + 1):
            if den[j]:
                acc = acc - den[j] * out[i - j]
        out.append(acc * inv0)
    return out


def hfrac_expand(f: SeriesQ, delta: int = 2, max_terms: int = 64) -> HFraction:
    if delta < 1:
        raise ValueError("delta must be positive")
    if f.is_zero():
        raise ValueError("cannot expand zero series")
    # Each remainder is kept as p / q with q a unit, so a step needs only
    # k + delta coefficients of a quotient instead of a full inversion:
    #   F' = ((1 + u q) p - v q^k q) / (q^(2k+delta) * (p / q^k)).
    quotients: list[Quotient] = []
    p, q = f, SeriesQ.one(f.order)
    used = 0  # orders of f spent on the emitted quotients
    while True:
        o = min(p.order, q.order)
        k = p.valuation()
        if len(quotients) >= max_terms:
            status = Status.MAX_TERMS_REACHED
            break
        # E = v q^k / F is known to order o - k and u needs degrees up to k + delta - 1
        if o - k < k + delta:
            status = Status.PRECISION_EXHAUSTED
            break
        pk = p.shift(-k)
        v = pk[0] / q[0]
        e = _head_quotient(q * v, pk, k + delta)
        u = PolyQ(e[1:])
        quotients.append(Quotient(k, v, u))
        used += 2 * k + delta
        rest = o - 2 * k - delta
        if rest <= 0:
            k = 0
            status = Status.PRECISION_EXHAUSTED
            break
        top = ((PolyQ([ONE]) + u.shift(1)) * p - (q * v).shift(k)).truncate(o)
        p = SeriesQ(top.coeffs[2 * k + delta:], rest)
        q = pk.truncate(o - k)
        if p.is_zero():
            k = rest
            status = Status.COMPLETE if rest >= delta + 1 else Status.PRECISION_EXHAUSTED
            break
    return HFraction(quotients, delta, status, f.order, used + k)


def hfrac_eval(h: HFraction, order: int) -> SeriesQ:
    if order < 1:
        raise ValueError("order must be at least 1")
    # convergents A_j / B_j of the fraction, kept modulo q^order
    a_prev, a_cur = PolyQ([ONE]), PolyQ()
    b_prev, b_cur = PolyQ(), PolyQ([ONE])
    prev_k = None
    for qt in h.quotients:
        if prev_k is None:
            num = PolyQ.monomial(qt.k, qt.v)
        else:
            num = PolyQ.monomial(prev_k + qt.k + h.delta, -qt.v)
        bj = PolyQ([ONE]) + qt.u.shift(1)
        a_prev, a_cur = a_cur, (bj * a_cur + num * a_prev).truncate(order)
        b_prev, b_cur = b_cur, (bj * b_cur + num * b_prev).truncate(order)
        prev_k = qt.k
    return SeriesQ(_head_quotient(a_cur.to_series(order), b_cur.to_series(order), order), order)


def hankel_from_hfrac(h: HFraction, max_index: int) -> list[tuple[int, RatFuncT]]:
    """Nonvanishing Hankel determinants H_{s_j} for s_j <= max_index."""
    if h.delta != 2:
        raise ValueError("determinant formula needs delta = 2")
    out = [(0, ONE)]
    s = [0]
    eps = 0
    for j, qt in enumerate(h.quotients, start=1):
        s.append(s[-1] + qt.k + 1)
        if s[j] > max_index:
            break
        eps += qt.k * (qt.k + 1) // 2
        val = ONE
        for i in range(j):
            val = val * h.quotients[i].v ** (s[j] - s[i])
        out.append((s[j], -val if eps % 2 else val))
    return out


def known_limit(h: HFraction) -> int | None:
    """Largest size whose determinant the fraction settles; None if unbounded."""
    if h.status is Status.COMPLETE:
        return None
    return h.indices()[-1]


def hankel_dets(h: HFraction, max_index: int) -> dict[int, RatFuncT]:
    """All determinants H_0..H_max_index, zeros included."""
    lim = known_limit(h)
    if lim is not None and max_index > lim:
        raise ValueError(f"fraction only determines sizes up to {lim}")
    dets = {n: ZERO for n in range(max_index + 1)}
    dets.update(hankel_from_hfrac(h, max_index))
    return dets


def hfrac_from_values(triples: list[tuple[int, FieldLike, PolyQ]], delta: int = 2,
                      status: Status = Status.COMPLETE) -> HFraction:
    return HFraction([Quotient(k, v, u) for k, v, u in triples], delta, status)

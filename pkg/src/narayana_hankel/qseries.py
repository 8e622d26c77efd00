"""Polynomials and truncated power series in q with coefficients in Q(t)."""
from __future__ import annotations

from typing import Iterable, Sequence, Union

from .exactnum import ONE, ZERO, FieldLike, RatFuncT, as_ratfunc, render_terms


def _coerce(c) -> RatFuncT:
    r = as_ratfunc(c)
    if r is NotImplemented:
        raise TypeError(f"cannot use {type(c).__name__} as a Q(t) coefficient")
    return r


def _conv(a: Sequence[RatFuncT], b: Sequence[RatFuncT], n: int) -> list[RatFuncT]:
    """First n coefficients of the product of two coefficient lists."""
    out = [ZERO] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[:n - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


class PolyQ:
    """Polynomial in q with Q(t) coefficients, ascending and stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[FieldLike] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[RatFuncT, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: FieldLike = 1) -> PolyQ:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __getitem__(self, i: int) -> RatFuncT:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (RatFuncT, int)):
            return self == PolyQ([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({self})"

    def __str__(self) -> str:
        return render_terms(self.coeffs, "q")

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self.coeffs)

    def __add__(self, other) -> PolyQ:
        other = _as_polyq(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyQ([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other) -> PolyQ:
        other = _as_polyq(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PolyQ:
        other = _as_polyq(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> PolyQ:
        if isinstance(other, SeriesQ):
            return NotImplemented
        other = _as_polyq(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return PolyQ(x * c for x in self.coeffs)
        n = len(self.coeffs) + len(other.coeffs) - 1
        return PolyQ(_conv(self.coeffs, other.coeffs, n))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyQ:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = PolyQ([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: FieldLike) -> PolyQ:
        c = _coerce(c)
        return PolyQ(x * c for x in self.coeffs)

    def shift(self, e: int) -> PolyQ:
        """Multiply by q^e; for e < 0 the division by q^-e must be exact."""
        if e >= 0:
            return PolyQ([ZERO] * e + list(self.coeffs)) if self.coeffs else self
        k = -e
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by q^{k}")
        return PolyQ(self.coeffs[k:])

    def truncate(self, n: int) -> PolyQ:
        """Terms of degree < n."""
        return PolyQ(self.coeffs[:n])

    def to_series(self, order: int) -> SeriesQ:
        return SeriesQ(self.coeffs[:order], order)


def _as_polyq(x) -> PolyQ:
    if isinstance(x, PolyQ):
        return x
    if isinstance(x, SeriesQ):
        return NotImplemented
    r = as_ratfunc(x)
    if r is NotImplemented:
        return NotImplemented
    return PolyQ([r])


Q = PolyQ([0, 1])


class SeriesQ:
    """Power series in q known exactly modulo q^order.

    Nothing is claimed about degrees >= order; every operation reports the
    precision it can certify and refuses to invent coefficients.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[FieldLike], order: int):
        if order < 1:
            raise ValueError("series order must be at least 1")
        cs = [_coerce(c) for c in coeffs][:order]
        cs.extend([ZERO] * (order - len(cs)))
        self.coeffs: tuple[RatFuncT, ...] = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order: int) -> SeriesQ:
        return cls([ONE], order)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; ``order`` if none is known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, n: int) -> RatFuncT:
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} beyond known order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesQ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"SeriesQ({self})"

    def __str__(self) -> str:
        body = render_terms(self.coeffs, "q")
        if body == "0":
            return f"O(q^{self.order})"
        return f"{body} + O(q^{self.order})"

    def truncate(self, order: int) -> SeriesQ:
        if order > self.order:
            raise ValueError(f"series known to order {self.order}, {order} requested")
        return SeriesQ(self.coeffs[:order], order)

    def agrees_with(self, other: SeriesQ, order: int | None = None) -> bool:
        n = min(self.order, other.order) if order is None else order
        if n > self.order or n > other.order:
            raise ValueError(f"cannot compare to order {n}")
        return self.coeffs[:n] == other.coeffs[:n]

    def to_poly(self) -> PolyQ:
        return PolyQ(self.coeffs)

    def __neg__(self) -> SeriesQ:
        return SeriesQ([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> SeriesQ:
        if isinstance(other, SeriesQ):
            n = min(self.order, other.order)
            b = other.coeffs
        else:
            other = _as_polyq(other)
            if other is NotImplemented:
                return NotImplemented
            n = self.order
            b = other.coeffs[:n]
        out = list(self.coeffs[:n])
        for i, y in enumerate(b[:n]):
            out[i] = out[i] + y
        return SeriesQ(out, n)

    __radd__ = __add__

    def __sub__(self, other) -> SeriesQ:
        if isinstance(other, SeriesQ):
            return self + (-other)
        other = _as_polyq(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> SeriesQ:
        return (-self) + other

    def __mul__(self, other) -> SeriesQ:
        if isinstance(other, SeriesQ):
            va, vb = self.valuation(), other.valuation()
            n = min(self.order + vb, other.order + va)
            return SeriesQ(_conv(self.coeffs, other.coeffs, n), n)
        if isinstance(other, PolyQ):
            if other.is_zero():
                # exact zero: the product is zero to any precision we hold
                return SeriesQ([], self.order)
            n = self.order + other.valuation()
            return SeriesQ(_conv(self.coeffs, other.coeffs, n), n)
        c = as_ratfunc(other)
        if c is NotImplemented:
            return NotImplemented
        return SeriesQ([x * c for x in self.coeffs], self.order)

    __rmul__ = __mul__

    def shift(self, e: int) -> SeriesQ:
        """Multiply by q^e, adjusting the order by e."""
        if e >= 0:
            return SeriesQ([ZERO] * e + list(self.coeffs), self.order + e)
        k = -e
        if k >= self.order:
            raise ValueError(f"division by q^{k} leaves no known coefficients")
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by q^{k}")
        return SeriesQ(self.coeffs[k:], self.order - k)

    def invert(self) -> SeriesQ:
        a = self.coeffs
        if not a[0]:
            raise ValueError("not a unit: constant term is zero")
        inv0 = a[0].inverse()
        b = [inv0]
        for n in range(1, self.order):
            acc = ZERO
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * b[n - k]
            b.append(-acc * inv0)
        return SeriesQ(b, self.order)

    def __truediv__(self, other) -> SeriesQ:
        if not isinstance(other, SeriesQ):
            if isinstance(other, PolyQ):
                other = other.to_series(self.order)
            else:
                c = as_ratfunc(other)
                if c is NotImplemented:
                    return NotImplemented
                return self * c.inverse()
        v = other.valuation()
        if v >= other.order:
            raise ZeroDivisionError("division by a series with no known nonzero term")
        return self.shift(-v) * other.shift(-v).invert() if v else self * other.invert()

    def __pow__(self, m: int) -> SeriesQ:
        if m < 0:
            raise ValueError("use invert() for negative powers")
        result, base = None, self
        while m:
            if m & 1:
                result = base if result is None else result * base
            m >>= 1
            if m:
                base = base * base
        return SeriesQ.one(self.order) if result is None else result


def series_arith(a: SeriesQ, b: SeriesQ, op: str) -> SeriesQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def series_invert(a: SeriesQ) -> SeriesQ:
    return a.invert()


def series_shift(a: SeriesQ, e: int) -> SeriesQ:
    return a.shift(e)


def series_pow(a: SeriesQ, m: int) -> SeriesQ:
    return a ** m


SeriesLike = Union[SeriesQ, PolyQ]

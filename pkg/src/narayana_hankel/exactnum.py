"""Exact coefficient arithmetic: rationals, polynomials in t, and the field Q(t).

Rationals are :class:`fractions.Fraction`.  A :class:`PolyT` keeps integer
numerators over a single positive common denominator, so nearly all work
happens on Python ints; long products go through Kronecker substitution.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

# Below this length schoolbook products beat packing into one big integer.
_KRONECKER_MIN = 12


# ---------------------------------------------------------------------------
# integer coefficient vectors
# ---------------------------------------------------------------------------

def _strip(c: list[int]) -> list[int]:
    while c and not c[-1]:
        c.pop()
    return c


def _content(c: Sequence[int]) -> int:
    return reduce(gcd, c, 0)


def _maxbits(c: Sequence[int]) -> int:
    return max(abs(x) for x in c).bit_length()


def _pack(c: Sequence[int], bits: int) -> int:
    v = 0
    for x in reversed(c):
        v = (v << bits) + x
    return v


def _unpack(v: int, bits: int, n: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(n):
        x = v & mask
        if x >= half:
            x -= 1 << bits
        out.append(x)
        v = (v - x) >> bits
    if v:
        raise ArithmeticError("kronecker unpack overflow")
    return out


def _imul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if min(la, lb) < _KRONECKER_MIN:
        res = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return _strip(res)
    bits = _maxbits(a) + _maxbits(b) + min(la, lb).bit_length() + 2
    return _strip(_unpack(_pack(a, bits) * _pack(b, bits), bits, la + lb - 1))


def _iexact_div(a: Sequence[int], b: Sequence[int]) -> list[int] | None:
    """Integer quotient a/b when b divides a in Z[t]; None otherwise."""
    if not a:
        return []
    dq = len(a) - len(b)
    if dq < 0:
        return None
    if len(b) == 1:
        d = b[0]
        if any(x % d for x in a):
            return None
        return [x // d for x in a]
    # Mignotte: an integer factor of a has coefficients below 2^dq * |a|_2.
    bits = _maxbits(a) + dq + (len(a)).bit_length() + 3
    av, bv = _pack(a, bits), _pack(b, bits)
    qv, rv = divmod(av, bv)
    if rv:
        return None
    try:
        q = _strip(_unpack(qv, bits, dq + 1))
    except ArithmeticError:
        return None
    if _imul(q, b) != list(a):
        return None
    return q


def _iprimitive(c: Sequence[int]) -> list[int]:
    g = _content(c)
    if g in (0, 1):
        return list(c)
    return [x // g for x in c]


def _iprem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive part of the pseudo-remainder of a by b."""
    r = list(a)
    n = len(b)
    lc = b[-1]
    while len(r) >= n:
        c = r[-1]
        s = len(r) - n
        if lc != 1:
            r = [x * lc for x in r]
        for j in range(n):
            r[s + j] -= c * b[j]
        r.pop()
        _strip(r)
        r = _iprimitive(r)
    return r


def _heu_candidate(v: int, bits: int, n: int, a, b) -> list[int] | None:
    try:
        h = _iprimitive(_strip(_unpack(v, bits, n)))
    except ArithmeticError:
        return None
    if not h:
        return None
    if h[-1] < 0:
        h = [-x for x in h]
    if _iexact_div(a, h) is None or _iexact_div(b, h) is None:
        return None
    return h


def _iheu_gcd(a: list[int], b: list[int]) -> list[int] | None:
    """Evaluate at a large power of two, take the integer gcd, read it back.

    With 2^bits above 2*min(|a|, |b|) + 2 a candidate dividing both inputs is
    the gcd, so a verified candidate is always correct; None means retry
    with the primitive PRS.
    """
    bits = min(_maxbits(a), _maxbits(b)) + 3
    for _ in range(4):
        av, bv = _pack(a, bits), _pack(b, bits)
        hv = gcd(av, bv)
        n = min(len(a), len(b))
        h = _heu_candidate(hv, bits, n, a, b)
        if h is not None:
            return h
        # the cofactor of the shorter input sometimes reconstructs when h does not
        co = _heu_candidate(bv // hv, bits, len(b), b, b)
        if co is not None:
            h = _iexact_div(b, co)
            if h:
                h = _iprimitive(h)
            if h and _iexact_div(a, h) is not None:
                return h if h[-1] > 0 else [-x for x in h]
        bits = bits * 2 + 7
    return None


def _igcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    a, b = _iprimitive(a), _iprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    if len(b) > 1:
        h = _iheu_gcd(a, b)
        if h is not None:
            return h
    while b:
        if len(b) == 1:
            return [1]
        a, b = b, _iprem(a, b)
    if a[-1] < 0:
        a = [-x for x in a]
    return a


# ---------------------------------------------------------------------------
# PolyT
# ---------------------------------------------------------------------------

PolyLike = Union["PolyT", int, Fraction]


class PolyT:
    """Polynomial in t over Q, stored as ``num / den`` with integer ``num``.

    Normal form: no trailing zero numerators, ``den > 0`` and
    ``gcd(content(num), den) == 1``.  Zero is the empty tuple over 1.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        cs = [Fraction(c) for c in coeffs]
        den = reduce(lcm, (c.denominator for c in cs), 1)
        num = [c.numerator * (den // c.denominator) for c in cs]
        self._set(num, den)

    def _set(self, num: list[int], den: int) -> None:
        _strip(num)
        if not num:
            den = 1
        else:
            g = gcd(_content(num), den)
            if g != 1:
                num = [x // g for x in num]
                den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def _make(cls, num: list[int], den: int = 1) -> PolyT:
        p = cls.__new__(cls)
        if den < 0:
            num, den = [-x for x in num], -den
        p._set(num, den)
        return p

    @classmethod
    def monomial(cls, k: int, c: int | Fraction = 1) -> PolyT:
        return cls([0] * k + [c])

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def degree(self) -> int:
        return len(self._num) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def is_integral(self) -> bool:
        return self._den == 1

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyT):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == PolyT([other])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyT({self})"

    def __str__(self) -> str:
        return render_terms(self.coeffs, "t")

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> PolyT:
        return PolyT._make([-x for x in self._num], self._den)

    def _addsub(self, other: PolyT, sign: int) -> PolyT:
        d = lcm(self._den, other._den)
        fa, fb = d // self._den, sign * (d // other._den)
        a, b = self._num, other._num
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] = x * fa
        for i, x in enumerate(b):
            out[i] += x * fb
        return PolyT._make(out, d)

    def __add__(self, other: PolyLike) -> PolyT:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> PolyT:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other: PolyLike) -> PolyT:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other._addsub(self, -1)

    def __mul__(self, other: PolyLike) -> PolyT:
        if isinstance(other, int):
            return PolyT._make([x * other for x in self._num], self._den)
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyT._make(_imul(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyT:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE_T, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int | Fraction) -> PolyT:
        c = Fraction(c)
        return PolyT._make([x * c.numerator for x in self._num],
                           self._den * c.denominator)

    def shift(self, k: int) -> PolyT:
        """Multiply by t^k."""
        if not self._num:
            return self
        return PolyT._make([0] * k + list(self._num), self._den)

    def divmod(self, other: PolyT) -> tuple[PolyT, PolyT]:
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        lc = b[-1]
        q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
        for i in range(len(r) - len(b), -1, -1):
            c = r[i + len(b) - 1] / lc
            q[i] = c
            if c:
                for j, y in enumerate(b):
                    r[i + j] -= c * y
        return PolyT(q), PolyT(r[:len(b) - 1])

    def exact_div(self, other: PolyLike) -> PolyT:
        """Quotient self/other; raises ValueError when other does not divide self."""
        other = _as_poly(other)
        if other is NotImplemented:
            raise TypeError("exact_div needs a polynomial")
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = _iexact_div(self._num, other._num)
        if q is not None:
            return PolyT._make(q, self._den).scale(Fraction(other._den))
        quo, rem = self.divmod(other)
        if rem:
            raise ValueError("polynomial division is not exact")
        return quo

    def monic(self) -> PolyT:
        if not self._num:
            return self
        return PolyT._make(list(self._num), self._num[-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, e: int) -> PolyT:
        """Polynomial in t^e: p(t) -> p(t^e)."""
        if e < 1:
            raise ValueError("exponent must be positive")
        out = [0] * (e * self.degree + 1) if self._num else []
        for i, x in enumerate(self._num):
            out[e * i] = x
        return PolyT._make(out, self._den)


def _as_poly(x) -> PolyT:
    if isinstance(x, PolyT):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyT([x])
    return NotImplemented


ZERO_T = PolyT()
ONE_T = PolyT([1])
T = PolyT([0, 1])


def polyt_gcd(a: PolyT, b: PolyT) -> PolyT:
    """Monic greatest common divisor of two polynomials, not both zero."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return ONE_T
    return PolyT._make(_igcd(a._num, b._num)).monic()


# ---------------------------------------------------------------------------
# RatFuncT
# ---------------------------------------------------------------------------

FieldLike = Union["RatFuncT", PolyT, int, Fraction]


class RatFuncT:
    """Element of Q(t) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: PolyLike = 0, den: PolyLike = 1):
        num, den = _as_poly(num), _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFuncT needs polynomial-like numerator and denominator")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = ONE_T
        elif den.is_constant():
            num, den = num.scale(1 / den.leading), ONE_T
        else:
            g = polyt_gcd(num, den)
            if g != ONE_T:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: PolyT, den: PolyT) -> RatFuncT:
        # caller guarantees coprimality; only the monic scaling remains
        r = cls.__new__(cls)
        lc = den.leading
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        if num.is_zero():
            den = ONE_T
        r.num, r.den, r._hash = num, den, None
        return r

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE_T

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFuncT):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (PolyT, int, Fraction)):
            return self.den == ONE_T and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFuncT({self})"

    def __str__(self) -> str:
        if self.den == ONE_T:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> RatFuncT:
        return RatFuncT._reduced(-self.num, self.den)

    def _add(self, other: RatFuncT, sign: int) -> RatFuncT:
        n2 = other.num if sign > 0 else -other.num
        if self.den == other.den:
            if self.den == ONE_T:
                return RatFuncT._reduced(self.num + n2, ONE_T)
            return RatFuncT(self.num + n2, self.den)
        if self.den == ONE_T:
            return RatFuncT._reduced(self.num * other.den + n2, other.den)
        if other.den == ONE_T:
            return RatFuncT._reduced(self.num + n2 * self.den, self.den)
        g = polyt_gcd(self.den, other.den)
        if g == ONE_T:
            return RatFuncT._reduced(self.num * other.den + n2 * self.den,
                                     self.den * other.den)
        d1, d2 = self.den.exact_div(g), other.den.exact_div(g)
        return RatFuncT(self.num * d2 + n2 * d1, d1 * other.den)

    def __add__(self, other: FieldLike) -> RatFuncT:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other: FieldLike) -> RatFuncT:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other, -1)

    def __rsub__(self, other: FieldLike) -> RatFuncT:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other._add(self, -1)

    def __mul__(self, other: FieldLike) -> RatFuncT:
        if isinstance(other, (int, Fraction)):
            return RatFuncT._reduced(self.num.scale(other), self.den)
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return ZERO
        if b == ONE_T and d == ONE_T:
            return RatFuncT._reduced(a * c, ONE_T)
        if d != ONE_T:
            g = polyt_gcd(a, d)
            if g != ONE_T:
                a, d = a.exact_div(g), d.exact_div(g)
        if b != ONE_T:
            g = polyt_gcd(c, b)
            if g != ONE_T:
                c, b = c.exact_div(g), b.exact_div(g)
        return RatFuncT._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatFuncT:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return RatFuncT._reduced(self.den, self.num)

    def __truediv__(self, other: FieldLike) -> RatFuncT:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: FieldLike) -> RatFuncT:
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> RatFuncT:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFuncT._reduced(self.num ** e, self.den ** e)

    def __call__(self, x):
        return self.num(x) / self.den(x)


def as_ratfunc(x) -> RatFuncT:
    if isinstance(x, RatFuncT):
        return x
    if isinstance(x, PolyT):
        return RatFuncT._reduced(x, ONE_T)
    if isinstance(x, (int, Fraction)):
        return RatFuncT._reduced(PolyT([x]), ONE_T)
    return NotImplemented


def ratfunc_arith(a: FieldLike, b: FieldLike, op: str) -> RatFuncT:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div`` on Q(t) values."""
    a, b = as_ratfunc(a), as_ratfunc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


ZERO = as_ratfunc(0)
ONE = as_ratfunc(1)
TT = as_ratfunc(T)


def render_terms(coeffs: Sequence, var: str) -> str:
    """Ascending-degree text for a coefficient sequence in ``var``.

    Coefficients that print as more than one token are parenthesised.
    """
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            s = str(c)
            if _is_atom(s):
                parts.append(f"{s}*{mono}")
            else:
                parts.append(f"({s})*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _is_atom(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return " " not in body

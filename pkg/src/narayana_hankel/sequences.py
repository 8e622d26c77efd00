"""Narayana polynomials, their convolution powers and the shifted families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactnum import ONE_T, T, ZERO_T, PolyT
from .qseries import SeriesQ


@dataclass(frozen=True)
class FamilySpec:
    """The series (gamma - 1)^m / q^shift."""

    m: int
    shift: int

    def __post_init__(self):
        if not 0 <= self.shift <= 3:
            raise ValueError(f"shift must be in 0..3, got {self.shift}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.m < self.shift:
            raise ValueError(f"(gamma-1)^{self.m}/q^{self.shift} has negative valuation")

    def __str__(self) -> str:
        return f"m={self.m},shift={self.shift}"


def narayana_poly(n: int) -> PolyT:
    if n < 0:
        raise ValueError("negative index")
    if n == 0:
        return ONE_T
    return PolyT([Fraction(comb(n, k) * comb(n - 1, k), k + 1) for k in range(n)])


def _mul_trunc(a: tuple[PolyT, ...], b: tuple[PolyT, ...], n: int) -> tuple[PolyT, ...]:
    out = [ZERO_T] * n
    for i, x in enumerate(a[:n]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[:n - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return tuple(out)


@lru_cache(maxsize=None)
def _narayana_coeffs(count: int) -> tuple[PolyT, ...]:
    # gamma = 1 + q*gamma - t*q*gamma + t*q*gamma^2, read off degree by degree
    g = [ONE_T]
    sq = [ONE_T]  # coefficients of gamma^2 known so far
    for n in range(1, count):
        g.append(g[n - 1] - T * g[n - 1] + T * sq[n - 1])
        sq.append(sum((g[i] * g[n - i] for i in range(n + 1)), ZERO_T))
    return tuple(g[:count])


def narayana_series(order: int) -> SeriesQ:
    if order < 1:
        raise ValueError("order must be at least 1")
    return SeriesQ(_narayana_coeffs(order), order)


@lru_cache(maxsize=None)
def _conv_power(tau: int, count: int) -> tuple[PolyT, ...]:
    if count <= 0:
        return ()
    gam = _narayana_coeffs(count + 1)
    shifted = gam[1:count + 1]  # G = (gamma - 1)/q
    m, odd = divmod(tau, 2)
    acc = gam[:count] if odd else (ONE_T,) + (ZERO_T,) * (count - 1)
    base, e = shifted, m
    while e:
        if e & 1:
            acc = _mul_trunc(acc, base, count)
        e >>= 1
        if e:
            base = _mul_trunc(base, base, count)
    return acc


def conv_power_seq(tau: int, count: int) -> list[PolyT]:
    """gamma^(tau)_n for n < count."""
    if tau < 1:
        raise ValueError("tau must be positive")
    return list(_conv_power(tau, count))


def family_entry(spec: FamilySpec, i: int) -> PolyT:
    n = i + spec.shift - spec.m
    if n < 0:
        return ZERO_T
    return _conv_power(2 * spec.m, _bucket(n + 1))[n]


def _bucket(count: int) -> int:
    # prefixes are consistent, so round up to share cache entries
    b = 16
    while b < count:
        b *= 2
    return b


def family_sequence(spec: FamilySpec, count: int) -> list[PolyT]:
    lead = spec.m - spec.shift
    body = _conv_power(2 * spec.m, max(count - lead, 0))
    return ([ZERO_T] * lead + list(body))[:count]


def family_series(spec: FamilySpec, order: int) -> SeriesQ:
    return SeriesQ(family_sequence(spec, order), order)


def fibonacci_number(n: int) -> int:
    if n < 0:
        raise ValueError("negative index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_conv_power_at_one(tau: int, n: int) -> Fraction:
    """Integer value of gamma^(tau)_n at t = 1."""
    return Fraction(tau, 2 * n + tau) * comb(2 * n + tau, n)

"""Hankel matrices over Q(t) and their exact determinants."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .exactnum import ONE, ONE_T, ZERO, PolyT, RatFuncT, as_ratfunc


@dataclass(frozen=True)
class HankelMatrix:
    entries: tuple[tuple[RatFuncT, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Hankel matrix must be square")
            for j, x in enumerate(row):
                if x != self.entries[(i + j) - min(i + j, n - 1)][min(i + j, n - 1)]:
                    raise ValueError(f"entry ({i},{j}) breaks Hankel symmetry")

    @property
    def size(self) -> int:
        return len(self.entries)


def build_hankel(entry_fn: Callable[[int], object], size: int) -> HankelMatrix:
    vals = [as_ratfunc(entry_fn(k)) for k in range(max(2 * size - 1, 0))]
    return HankelMatrix(tuple(tuple(vals[i + j] for j in range(size))
                              for i in range(size)))


def det_cofactor(rows) -> RatFuncT:
    """Laplace expansion along the first row; exponential, for small oracles."""
    rows = [[as_ratfunc(x) for x in r] for r in rows]
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j, x in enumerate(rows[0]):
        if not x:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * det_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def _bareiss(a: list[list], one, div) -> object:
    n = len(a)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return None
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = div(row_i[j] * pivot - aik * row_k[j], prev)
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_exact(m: HankelMatrix) -> RatFuncT:
    """Exact determinant: cofactors up to 3x3, fraction-free elimination above."""
    rows = m.entries if isinstance(m, HankelMatrix) else m
    n = len(rows)
    if n == 0:
        return ONE
    if n <= 3:
        return det_cofactor(rows)
    if all(x.is_poly() for r in rows for x in r):
        # stay in Q[t]: every Bareiss intermediate is a minor, so divisions are exact
        a = [[x.num for x in r] for r in rows]
        d = _bareiss(a, ONE_T, PolyT.exact_div)
        return ZERO if d is None else as_ratfunc(d)
    a = [list(r) for r in rows]
    d = _bareiss(a, ONE, lambda x, y: x / y)
    return ZERO if d is None else d


def hankel_det(values, size: int) -> RatFuncT:
    """Determinant of (values[i+j]) for i, j < size."""
    return det_exact(build_hankel(lambda k: values[k], size))

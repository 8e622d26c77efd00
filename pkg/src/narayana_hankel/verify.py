"""Named cross-check suites and their tab-separated reports."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterator

from .closedforms import (
    beta_poly, cigler_det, conjectured_six_tuples, expected_hfrac, fib_lucas_closed_check,
    lucas_poly, main_det, odd_case_triple, stream_start, _MIN_M,
)
from .exactnum import T, PolyT, as_ratfunc
from .hankel import build_hankel, det_exact, hankel_det
from .hfrac import Status, hankel_from_hfrac, hfrac_eval, hfrac_expand
from .qseries import PolyQ, SeriesQ
from .quadratic import family_quadratic, iterate_next_abc
from .sequences import (
    FamilySpec, catalan, conv_power_seq, family_entry, family_series, fibonacci_number,
    narayana_series,
)

SUITES = ("main-dets", "cigler", "sumcc", "hfrac-lemmas", "nextabc-q2", "nextabc-q3",
          "beta-lucas", "fib-lucas-closed", "odd-case", "roundtrip", "zero-pattern")

# smallest m each expected H-fraction accepts, by shift
_HFRAC_MIN_M = {0: 2, 1: 1, 2: 2, 3: 3}


class UnknownSuiteError(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    """Suite bounds; None means the suite's own acceptance-grid default."""

    m_min: int | None = None
    m_max: int | None = None
    n_max: int | None = None
    j_max: int | None = None
    order: int | None = None
    shift: int | None = None
    samples: int | None = None
    seed: int = 20240

    def get(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v


@dataclass
class CheckRecord:
    suite: str
    params: tuple[tuple[str, object], ...]
    status: str
    expected: str
    actual: str
    elapsed_us: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def params_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)

    def to_line(self) -> str:
        fields = (self.suite, self.params_text(), self.status, self.expected, self.actual,
                  str(self.elapsed_us))
        return "\t".join(_one_line(f) for f in fields)


def _one_line(s: str) -> str:
    return s.replace("\t", " ").replace("\n", " ; ")


@dataclass(frozen=True)
class _Task:
    suite: str
    params: tuple[tuple[str, object], ...]
    fn: Callable
    args: tuple = field(default=())


def _run_task(task: _Task) -> CheckRecord:
    t0 = time.perf_counter_ns()
    params = task.params
    try:
        out = task.fn(*task.args)
        expected, actual = str(out[0]), str(out[1])
        if len(out) > 2:
            params = params + tuple(out[2])
        status = "pass" if expected == actual else "fail"
    except Exception as exc:  # noqa: BLE001 - every failure becomes a record
        expected, actual, status = "", f"{type(exc).__name__}: {exc}", "error"
    elapsed = (time.perf_counter_ns() - t0) // 1000
    return CheckRecord(task.suite, params, status, expected, actual, elapsed)


# ---------------------------------------------------------------------------
# individual checks (module level so a process pool can pickle them)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def oracle_det(m: int, shift: int, size: int):
    spec = FamilySpec(m, shift)
    return det_exact(build_hankel(lambda i: family_entry(spec, i), size))


def _check_main(m: int, shift: int, size: int):
    if m < _MIN_M[shift]:
        raise ValueError(f"the shift {shift} determinant theorem requires m >= {_MIN_M[shift]}")
    case = main_det(FamilySpec(m, shift), size)
    label = "|".join((case.case_label,) + case.also_matched).replace("N=", "")
    return case.value, oracle_det(m, shift, size), (("case", label),)


def _cigler_oracle(variant: int, size: int):
    seq = conv_power_seq(variant, max(2 * size - 1, 1))
    return det_exact(build_hankel(lambda i: seq[i], size))


def _check_cigler(variant: int, size: int):
    return cigler_det(variant, size), _cigler_oracle(variant, size)


def _check_overlap(variant: int, m: int, shift: int, size: int):
    return cigler_det(variant, size), main_det(FamilySpec(m, shift), size).value


def _check_sumcc(n: int):
    return fibonacci_number(2 * n + 1), hankel_det(
        [catalan(i) + catalan(i + 1) for i in range(2 * n - 1)], n)


@lru_cache(maxsize=None)
def _expansion(m: int, shift: int, order: int):
    return hfrac_expand(family_series(FamilySpec(m, shift), order))


def _check_hfrac_quotient(m: int, shift: int, order: int, j: int):
    got = _expansion(m, shift, order)
    want = expected_hfrac(FamilySpec(m, shift), j + 1).quotients[j]
    if j >= len(got.quotients):
        return want, f"missing (expansion stopped with {got.status} after {len(got.quotients)})"
    return want, got.quotients[j]


@lru_cache(maxsize=None)
def _stream(variant: str, m: int, steps: int):
    shift = int(variant[1])
    return iterate_next_abc(family_quadratic(m, shift), steps)


def _check_stream_start(variant: str, m: int):
    return stream_start(variant, m), family_quadratic(m, int(variant[1]))


def _check_stream_step(variant: str, m: int, steps: int, n: int):
    got = _stream(variant, m, steps)
    want = conjectured_six_tuples(variant, m, n)
    if n >= len(got):
        return want, f"missing (stream ended after {len(got)} steps)"
    return want, got[n]


def _check_beta_lucas(m: int):
    t = as_ratfunc(T)
    return beta_poly(m), lucas_poly(m)(PolyQ([1, -1 - t]), PolyQ([0, 0, -t]))


def _check_fib_lucas(n: int, which: str):
    return True, fib_lucas_closed_check(n, which)


def _check_odd_case(m: int, m0: int, order: int):
    # dividing by q^m0 costs m0 orders, so start that much higher
    g = narayana_series(order + m0)
    f = (g * (g - SeriesQ.one(order + m0)) ** m).shift(-m0).truncate(order)
    res = odd_case_triple(m, m0).residual(f)
    return f"O(q^{order})", _order_text(res)


def _order_text(s: SeriesQ) -> str:
    if s.is_zero():
        return f"O(q^{s.order})"
    v = s.valuation()
    return f"nonzero at q^{v}: {s[v]}"


def _check_roundtrip_family(m: int, shift: int, order: int):
    return _roundtrip(family_series(FamilySpec(m, shift), order))


def _roundtrip(f: SeriesQ):
    h = hfrac_expand(f)
    n = f.order if h.status is Status.COMPLETE else min(h.consumed, f.order)
    back = hfrac_eval(h, n)
    return f.truncate(n), back


def random_series(rng: random.Random, order: int) -> SeriesQ:
    """Random series over Q(t) with sparse support, so gaps (k > 0) occur."""
    coeffs = []
    for i in range(order):
        if i > 0 and rng.random() < 0.3:
            coeffs.append(0)
            continue
        c = PolyT([rng.randint(-3, 3) for _ in range(rng.randint(1, 2))])
        coeffs.append(as_ratfunc(c if i or not c.is_zero() else PolyT([1])))
    return SeriesQ(coeffs, order)


def _check_roundtrip_random(seed: int, idx: int, order: int):
    rng = random.Random(f"{seed}:{idx}")
    return _roundtrip(random_series(rng, order))


def _check_zero_pattern(m: int, shift: int, order: int, size: int):
    h = _expansion(m, shift, order)
    vals = dict(hankel_from_hfrac(h, size))
    want = vals.get(size, as_ratfunc(0))
    return want, oracle_det(m, shift, size), (("s_j", "yes" if size in vals else "no"),)


# ---------------------------------------------------------------------------
# suite enumeration
# ---------------------------------------------------------------------------

def _shifts(b: Bounds) -> list[int]:
    return [b.shift] if b.shift is not None else [0, 1, 2, 3]


def _m_range(b: Bounds, floor: int, default_max: int) -> range:
    hi = b.get("m_max", default_max)
    lo = b.m_min if b.m_min is not None else min(floor, hi)
    return range(max(lo, 1), hi + 1)


def _tasks_main(b: Bounds) -> Iterator[_Task]:
    for shift in _shifts(b):
        for m in _m_range(b, _MIN_M[shift], 4):
            for n in range(b.get("n_max", 12) + 1):
                yield _Task("main-dets", (("shift", shift), ("m", m), ("N", n)),
                            _check_main, (m, shift, n))


def _tasks_cigler(b: Bounds) -> Iterator[_Task]:
    n_max = b.get("n_max", 12)
    for variant, cap in ((3, 10), (4, 12), (6, 12)):
        for n in range(min(n_max, cap) + 1):
            yield _Task("cigler", (("variant", variant), ("N", n)), _check_cigler, (variant, n))
    for variant, m, shift in ((4, 2, 2), (6, 3, 3)):
        for n in range(n_max + 1):
            yield _Task("cigler", (("variant", variant), ("vs", f"shift{shift}m{m}"), ("N", n)),
                        _check_overlap, (variant, m, shift, n))


def _tasks_sumcc(b: Bounds) -> Iterator[_Task]:
    for n in range(1, b.get("n_max", 8) + 1):
        yield _Task("sumcc", (("n", n),), _check_sumcc, (n,))


_HFRAC_GRID = {0: (2, 4), 1: (1, 4), 2: (2, 4), 3: (3, 5)}


def _tasks_hfrac(b: Bounds) -> Iterator[_Task]:
    order = b.get("order", 32)
    n_max = b.get("n_max", 12)
    for shift in _shifts(b):
        lo, hi = _HFRAC_GRID[shift]
        for m in _m_range(b, lo, hi):
            if m < _HFRAC_MIN_M[shift] or m < shift:
                yield _Task("hfrac-lemmas", (("shift", shift), ("m", m), ("j", 0)),
                            _check_hfrac_quotient, (m, shift, order, 0))
                continue
            want = expected_hfrac(FamilySpec(m, shift), n_max + 1)
            for j, s in enumerate(want.indices()[1:]):
                if s > n_max:
                    break
                yield _Task("hfrac-lemmas", (("shift", shift), ("m", m), ("j", j), ("s", s)),
                            _check_hfrac_quotient, (m, shift, order, j))


def _tasks_stream(variant: str) -> Callable[[Bounds], Iterator[_Task]]:
    period = int(variant[1])

    def gen(b: Bounds) -> Iterator[_Task]:
        suite = f"nextabc-{variant.lower()}"
        steps = period * (b.get("j_max", 3) + 1)
        for m in _m_range(b, period, 5):
            yield _Task(suite, (("m", m), ("step", "start")), _check_stream_start, (variant, m))
            for n in range(steps):
                yield _Task(suite, (("m", m), ("step", n)), _check_stream_step,
                            (variant, m, steps, n))
    return gen


def _tasks_beta(b: Bounds) -> Iterator[_Task]:
    for m in range(b.get("m_min", 1), b.get("m_max", 10) + 1):
        yield _Task("beta-lucas", (("m", m),), _check_beta_lucas, (m,))


def _tasks_fib(b: Bounds) -> Iterator[_Task]:
    n_max = b.get("n_max", 12)
    for which, lo in (("fib", 1), ("lucas", 0)):
        for n in range(lo, n_max + 1):
            yield _Task("fib-lucas-closed", (("which", which), ("n", n)), _check_fib_lucas,
                        (n, which))


def _tasks_odd(b: Bounds) -> Iterator[_Task]:
    order = b.get("order", 20)
    for m in range(b.get("m_min", 1), b.get("m_max", 4) + 1):
        for m0 in range(min(m, 3) + 1):
            yield _Task("odd-case", (("m", m), ("m0", m0)), _check_odd_case, (m, m0, order))


def _families(b: Bounds) -> Iterator[tuple[int, int]]:
    for shift in _shifts(b):
        for m in range(max(b.get("m_min", 1), shift, 1), b.get("m_max", 4) + 1):
            yield m, shift


def _tasks_roundtrip(b: Bounds) -> Iterator[_Task]:
    order = b.get("order", 32)
    for m, shift in _families(b):
        yield _Task("roundtrip", (("shift", shift), ("m", m)), _check_roundtrip_family,
                    (m, shift, order))
    for i in range(b.get("samples", 30)):
        yield _Task("roundtrip", (("random", i), ("seed", b.seed)), _check_roundtrip_random,
                    (b.seed, i, min(order, 14)))


def _tasks_zero(b: Bounds) -> Iterator[_Task]:
    n_max = b.get("n_max", 10)
    order = b.get("order", max(32, 2 * n_max + 8))
    for m, shift in _families(b):
        for n in range(n_max + 1):
            yield _Task("zero-pattern", (("shift", shift), ("m", m), ("N", n)),
                        _check_zero_pattern, (m, shift, order, n))


_GENERATORS = {
    "main-dets": _tasks_main,
    "cigler": _tasks_cigler,
    "sumcc": _tasks_sumcc,
    "hfrac-lemmas": _tasks_hfrac,
    "nextabc-q2": _tasks_stream("Q2"),
    "nextabc-q3": _tasks_stream("Q3"),
    "beta-lucas": _tasks_beta,
    "fib-lucas-closed": _tasks_fib,
    "odd-case": _tasks_odd,
    "roundtrip": _tasks_roundtrip,
    "zero-pattern": _tasks_zero,
}


def run_suite(name: str, bounds: Bounds | None = None, jobs: int = 1) -> list[CheckRecord]:
    """Run one suite; records come back in enumeration order whatever ``jobs`` is."""
    if name not in _GENERATORS:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tasks = list(_GENERATORS[name](bounds or Bounds()))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_run_task(t) for t in tasks]


def run_all(bounds: Bounds | None = None, jobs: int = 1) -> list[CheckRecord]:
    out: list[CheckRecord] = []
    for name in SUITES:
        out.extend(run_suite(name, bounds, jobs))
    return out


def format_report(records: list[CheckRecord]) -> str:
    return "".join(r.to_line() + "\n" for r in records)


def with_bounds(b: Bounds, **kw) -> Bounds:
    return replace(b, **{k: v for k, v in kw.items() if v is not None})

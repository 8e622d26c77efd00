"""Command-line front end: ``narayana-hankel <command> ...``."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .closedforms import cigler_det, expected_hfrac, main_det
from .hankel import build_hankel, det_exact
from .hfrac import hfrac_eval, hfrac_expand
from .quadratic import family_quadratic, iterate_next_abc
from .sequences import FamilySpec, conv_power_seq, family_entry, family_series
from .verify import SUITES, Bounds, CheckRecord, UnknownSuiteError, format_report, run_suite

__all__ = ["main", "build_parser", "run_suite", "Bounds", "CheckRecord"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so main() owns the exit code."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="narayana-hankel",
                description="Exact Hankel determinants of Narayana convolution powers.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", help="print sequence terms, one per line")
    s.add_argument("kind", choices=["narayana"])
    s.add_argument("--n", type=_nonneg, required=True, help="number of terms")
    s.add_argument("--tau", type=_nonneg, default=1, help="convolution power (default 1)")

    d = sub.add_parser("det", help="Hankel determinant by fraction-free elimination")
    d.add_argument("which", nargs="?", choices=["cigler"],
                   help="use the plain convolution power gamma^(tau) instead of a family")
    d.add_argument("--m", type=_nonneg)
    d.add_argument("--shift", type=_nonneg)
    d.add_argument("--variant", type=int, choices=[3, 4, 6])
    d.add_argument("--size", type=_nonneg, required=True)
    d.add_argument("--closed", action="store_true",
                   help="print the closed form (and its branch) instead of eliminating")

    c = sub.add_parser("closed", help="closed-form determinant")
    c.add_argument("what", choices=["det"])
    c.add_argument("--m", type=_nonneg, required=True)
    c.add_argument("--shift", type=_nonneg, required=True)
    c.add_argument("--size", type=_nonneg, required=True)

    h = sub.add_parser("hfrac", help="H-fraction tools")
    hs = h.add_subparsers(dest="hcmd", required=True, parser_class=_Parser)
    he = hs.add_parser("expand", help="expand a family series")
    he.add_argument("--m", type=_nonneg, required=True)
    he.add_argument("--shift", type=_nonneg, required=True)
    he.add_argument("--terms", type=_nonneg, required=True)
    he.add_argument("--order", type=_nonneg, required=True)
    hx = hs.add_parser("expected", help="quotients predicted by the closed formulas")
    hx.add_argument("--m", type=_nonneg, required=True)
    hx.add_argument("--shift", type=_nonneg, required=True)
    hx.add_argument("--terms", type=_nonneg, required=True)
    hv = hs.add_parser("eval", help="evaluate the predicted fraction back to a series")
    hv.add_argument("--m", type=_nonneg, required=True)
    hv.add_argument("--shift", type=_nonneg, required=True)
    hv.add_argument("--terms", type=_nonneg, required=True)
    hv.add_argument("--order", type=_nonneg, required=True)

    n = sub.add_parser("nextabc", help="trace Algorithm NextABC from a family quadratic")
    n.add_argument("--m", type=_nonneg, required=True)
    n.add_argument("--shift", type=_nonneg, required=True)
    n.add_argument("--steps", type=_nonneg, required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help=f"one of: {', '.join(SUITES)}, or 'all'")
    for flag in ("--m-min", "--m-max", "--n-max", "--j-max", "--order", "--shift"):
        v.add_argument(flag, type=_nonneg)
    v.add_argument("--samples", type=_nonneg, help="random series in the roundtrip suite")
    v.add_argument("--seed", type=_nonneg, default=Bounds.seed)
    v.add_argument("--jobs", type=_nonneg, default=1, help="worker processes (default 1)")
    v.add_argument("--report", help="also write the tab-separated report here")
    v.add_argument("--quiet", action="store_true", help="print only the summary line")
    return p


def _family(args) -> FamilySpec:
    if args.m is None or args.shift is None:
        raise _UsageError("--m and --shift are required")
    try:
        return FamilySpec(args.m, args.shift)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _cmd_seq(args, out) -> int:
    if args.tau < 1:
        raise _UsageError("--tau must be at least 1")
    for term in conv_power_seq(args.tau, args.n):
        print(term, file=out)
    return 0


def _cmd_det(args, out) -> int:
    if args.which == "cigler":
        if args.variant is None:
            raise _UsageError("det cigler needs --variant")
        if args.closed:
            print(cigler_det(args.variant, args.size), file=out)
        else:
            seq = conv_power_seq(args.variant, max(2 * args.size - 1, 1))
            print(det_exact(build_hankel(lambda i: seq[i], args.size)), file=out)
        return 0
    spec = _family(args)
    if args.closed:
        print(main_det(spec, args.size), file=out)
    else:
        print(det_exact(build_hankel(lambda i: family_entry(spec, i), args.size)), file=out)
    return 0


def _cmd_closed(args, out) -> int:
    print(main_det(_family(args), args.size), file=out)
    return 0


def _cmd_hfrac(args, out) -> int:
    spec = _family(args)
    if args.hcmd == "expand":
        h = hfrac_expand(family_series(spec, args.order), max_terms=args.terms)
        if h.quotients:
            print(h, file=out)
        print(f"# status={h.status} consumed={h.consumed}", file=sys.stderr)
    elif args.hcmd == "expected":
        h = expected_hfrac(spec, args.terms)
        if h.quotients:
            print(h, file=out)
    else:
        if args.order < 1:
            raise _UsageError("--order must be at least 1")
        print(hfrac_eval(expected_hfrac(spec, args.terms), args.order), file=out)
    return 0


def _cmd_nextabc(args, out) -> int:
    try:
        start = family_quadratic(args.m, args.shift)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    for n, st in enumerate(iterate_next_abc(start, args.steps)):
        print(f"n={n} {st}", file=out)
    return 0


def _cmd_verify(args, out) -> int:
    bounds = Bounds(m_min=args.m_min, m_max=args.m_max, n_max=args.n_max, j_max=args.j_max,
                    order=args.order, shift=args.shift, samples=args.samples,
                    seed=args.seed)
    names = SUITES if args.suite == "all" else (args.suite,)
    records: list[CheckRecord] = []
    try:
        for name in names:
            records.extend(run_suite(name, bounds, jobs=max(args.jobs, 1)))
    except UnknownSuiteError as exc:
        raise _UsageError(str(exc)) from None
    text = format_report(records)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    if not args.quiet:
        out.write(text)
    counts = {k: sum(r.status == k for r in records) for k in ("pass", "fail", "error")}
    print(f"{len(records)} checks: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['error']} error", file=sys.stderr)
    return 0 if counts["pass"] == len(records) else 1


_COMMANDS = {"seq": _cmd_seq, "det": _cmd_det, "closed": _cmd_closed, "hfrac": _cmd_hfrac,
             "nextabc": _cmd_nextabc, "verify": _cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.cmd](args, out)
    except _UsageError as exc:
        msg = str(exc)
        if not msg.startswith(parser.prog):
            msg = f"{parser.prog}: error: {msg}"
        print(msg, file=sys.stderr)
        return 2
    except ValueError as exc:
        # bad parameter combinations surfaced by the library
        print(f"narayana-hankel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Exact Hankel determinants of Narayana convolution powers.

Determinants are computed three ways: fraction-free elimination, Hankel
continued fractions (generic expansion or Algorithm NextABC), and explicit
closed forms.  Everything is exact over Q(t).
"""
from __future__ import annotations

from .exactnum import PolyT, RatFuncT, T, as_ratfunc, polyt_gcd, ratfunc_arith
from .qseries import PolyQ, SeriesQ, series_arith, series_invert, series_pow, series_shift
from .sequences import (
    FamilySpec, catalan, conv_power_seq, family_entry, family_sequence, family_series,
    fibonacci_number, narayana_poly, narayana_series,
)
from .hankel import HankelMatrix, build_hankel, det_exact, hankel_det
from .hfrac import (
    HFraction, Quotient, Status, hankel_dets, hankel_from_hfrac, hfrac_eval, hfrac_expand,
)
from .closedforms import (
    DetCase, alpha_poly, beta_poly, cigler_det, conjectured_six_tuples, expected_hfrac,
    fib_lucas_closed_check, fib_poly, lucas_poly, main_det, odd_case_triple, qint, r_poly,
    rho_poly, rs_relations, s_poly,
)
from .quadratic import (
    AlgorithmInvariantError, QuadTriple, SixTuple, family_quadratic, hfrac_from_quadratic,
    iterate_next_abc, next_abc, quad_power, quad_scale, quad_shift, quad_solve_series,
)
from .verify import SUITES, Bounds, CheckRecord, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]

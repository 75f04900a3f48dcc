"""Exact arithmetic toolkit for extremal nonnegative ternary cubics on the closed octant."""

from __future__ import annotations

from .certify import certify_f, certify_form, certify_g, certify_h, refute_by_grid
from .classify import ClassificationResult, classify_form
from .families import build_family, make_f_pqr, make_g_pq, make_h_pq
from .geometry import boundary_zeros, count_N, find_singular_points
from .lift import lift_with_orbits, verify_lift_extremal
from .linsys import ZeroCondition, verify_unique
from .poly import Form

__all__ = [
    "ClassificationResult",
    "Form",
    "ZeroCondition",
    "boundary_zeros",
    "build_family",
    "certify_f",
    "certify_form",
    "certify_g",
    "certify_h",
    "classify_form",
    "count_N",
    "find_singular_points",
    "lift_with_orbits",
    "make_f_pqr",
    "make_g_pq",
    "make_h_pq",
    "refute_by_grid",
    "verify_lift_extremal",
    "verify_unique",
]

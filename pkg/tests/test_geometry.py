from __future__ import annotations

from fractions import Fraction

import pytest

from psdcubic.families import cyclic_f0, make_f_pqr, make_g_pq, make_h_pq
from psdcubic.geometry import (
    boundary_zeros,
    classify_singularity,
    count_N,
    curve_points,
    edge_restriction,
    factor_linear_completely,
    find_singular_points,
    intersection_multiplicity,
    is_irreducible_over_c,
    vertex_contact_sum,
    linear_factor,
    resultant_y,
)
from psdcubic.poly import X, Y, Z, proportional
from psdcubic.univar import UniPoly, vanishing_order

F = Fraction


def test_resultant_against_oracle():
    # x^2 + y^2 - 5 and xy - 2 eliminate to x^4 - 5x^2 + 4
    a = {(2, 0): F(1), (0, 2): F(1), (0, 0): F(-5)}
    b = {(1, 1): F(1), (0, 0): F(-2)}
    assert resultant_y(a, b).monic() == UniPoly([4, 0, -5, 0, 1])


@pytest.mark.parametrize(
    "f,point,kind",
    [
        (cyclic_f0(), (1, 1, 1), "acnode"),
        (make_h_pq(1, 1), (0, 1, 1), "cusp"),
        (make_f_pqr(1, 2, 3), (1, 1, 1), "acnode"),
    ],
)
def test_find_singular_points(f, point, kind):
    (rep,) = find_singular_points(f)
    assert rep.point == tuple(F(c) for c in point) and rep.kind == kind


def test_smooth_cubic_has_no_singular_points():
    assert find_singular_points(X**3 + Y**3 + Z**3) == []


def test_double_line_is_non_isolated():
    reps = find_singular_points((X + Y - 2 * Z) ** 2 * Z)
    assert reps[0].kind == "non-isolated"


@pytest.mark.parametrize(
    "f,point,kind",
    [
        (make_g_pq(F(1, 4), F(1, 4)), (1, 1, 1), "acnode"),
        (make_h_pq(2, 3), (0, 1, 1), "cusp"),
        (X**3 + X * X * Z + Y * Y * Z, (0, 0, 1), "acnode"),
        (X**3 + X * X * Z - Y * Y * Z, (0, 0, 1), "crunode"),
        ((X + Y - 2 * Z) ** 2 * Z, (1, 1, 1), "degenerate"),
    ],
)
def test_classify_singularity(f, point, kind):
    assert classify_singularity(f, point).kind == kind


def test_classify_rejects_smooth_point():
    with pytest.raises(ValueError):
        classify_singularity(X**3 + Y**3 + Z**3, (1, -1, 0))


def test_irreducibility():
    assert is_irreducible_over_c(make_f_pqr(1, 1, 1))
    assert not is_irreducible_over_c(X * Y * Z)


def test_zero_inventory_of_f():
    inv = boundary_zeros(make_f_pqr(1, 2, 3))
    got = {(tuple(e.point), e.location, e.kind, e.order) for e in inv.entries}
    assert got == {
        ((1, 1, 1), "interior", "acnode", None),
        ((0, 1, 1), "edge", "regular", 2),
        ((1, 0, 2), "edge", "regular", 2),
        ((1, F(1, 3), 0), "edge", "regular", 2),
    }


def test_zero_inventory_of_g():
    inv = boundary_zeros(make_g_pq(F(1, 4), F(1, 4)))
    vertices = {(e.which, e.order) for e in inv.by_location("vertex")}
    assert vertices == {("x", 1), ("y", 1)}
    assert {tuple(e.point) for e in inv.by_location("edge")} == {(0, 1, F(1, 4)), (1, 0, F(1, 4))}


def test_monomial_contains_all_edges():
    assert boundary_zeros(X * Y * Z).contained_edges == ["x", "y", "z"]
    assert not count_N(X * Y * Z).complete


@pytest.mark.parametrize(
    "f,summary",
    [
        (make_f_pqr(1, 2, 3), "4+2+2+2"),
        (make_g_pq(F(1, 4), F(1, 4)), "4+2+2+1+1"),
        (make_h_pq(1, 1), "6+2+2"),
        (make_g_pq(0, 0), "4+3+3"),
    ],
)
def test_weighted_zero_count(f, summary):
    n = count_N(f)
    assert n.total == 10 and n.summary() == summary and n.within_bound


def test_edge_restrictions():
    # x -> f(0, s, 1), y -> f(1, 0, s), z -> f(s, 1, 0)
    f = make_f_pqr(1, 2, 3)
    s = UniPoly.t()
    assert edge_restriction(f, "x") == f(0, s, UniPoly([1]))
    assert vanishing_order(edge_restriction(f, "x"), 1) == 2
    assert vanishing_order(edge_restriction(make_h_pq(1, 1), "y"), 1) == 2


def test_linear_factor_of_boundary_g():
    g = make_g_pq(F(1, 3), F(2, 3))
    assert linear_factor(g) is not None
    factors, cof = factor_linear_completely(g)
    assert cof.degree == 0
    # z once and the doubled line 2x/3 + y/3 - z
    L = F(2, 3) * X + F(1, 3) * Y - Z
    assert sum(1 for h in factors if proportional(h, L) is not None) == 2
    assert sum(1 for h in factors if proportional(h, Z) is not None) == 1


def test_linear_factor_none_for_irreducible():
    assert linear_factor(make_f_pqr(1, 1, 1)) is None


def test_linear_factor_finds_coordinate():
    lf = linear_factor(X * (2 * X + Y + Z) ** 2)
    assert lf.factor == X and lf.residual == (2 * X + Y + Z) ** 2


def test_intersection_multiplicity():
    assert intersection_multiplicity(make_f_pqr(1, 2, 3), "x", (0, 1, 1)) == 2
    with pytest.raises(ValueError):
        intersection_multiplicity(X * Y * Z, "x", (0, 1, 1))


@pytest.mark.parametrize(
    "f,edge,total",
    [(make_f_pqr(1, 2, 3), "x", 0), (make_g_pq(0, 0), "z", 2), (make_f_pqr(0, 0, 0), "x", 3)],
)
def test_vertex_intersection_bound(f, edge, total):
    assert vertex_contact_sum(f, edge) == total <= 3


def test_curve_points_lie_on_curve():
    f = make_h_pq(2, 3)
    pts = curve_points(f, (0, 1, 1), 12)
    assert len(pts) >= 8
    assert all(f(*P) == 0 for P in pts)


def test_irrational_edge_zero_is_boxed():
    # x^2 - 2 z^2 times a positive factor: the edge y=0 zero sits at s = 1/sqrt2
    f = (X * X - Z * Z * 2) * (X + Y + Z)
    inv = boundary_zeros(f)
    assert inv.irrational
    assert not count_N(inv).complete

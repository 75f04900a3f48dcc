from __future__ import annotations

from fractions import Fraction

import pytest

from psdcubic.certify import check_reducible_extremal
from psdcubic.families import cyclic_f0, make_f_pqr, make_g_pq, make_h_pq
from psdcubic.lift import (
    even_form_check,
    lift_with_orbits,
    reducible_lift_report,
    sign_orbit,
    sqrt_tower,
    verify_lift_extremal,
)
from psdcubic.poly import Form, X, Y, Z, form_eval, form_square_substitute
from psdcubic.scalar import TowerScalar

F = Fraction


@pytest.mark.parametrize("f,even", [(X**2 * Y**2 * Z**2, True), (X**5 * Y, False), (form_square_substitute(make_f_pqr(1, 2, 3)), True)])
def test_even_form_check(f, even):
    assert even_form_check(f) is even


@pytest.mark.parametrize("P,size", [((1, 1, 1), 4), ((0, 1, 3), 2), ((1, 0, 0), 1)])
def test_orbit_sizes(P, size):
    assert len(sign_orbit(P)) == size


def test_tower_orbit():
    assert sqrt_tower((2, 3, 1)) == (2, 3)
    pts = sign_orbit((2, 3, 1))
    assert len(pts) == 4
    r2 = TowerScalar.sqrt_of((2, 3), 2)
    assert all(P[0] == r2 for P in pts)
    g = form_square_substitute((X - Z * 2) * (Y - Z * 3) * Z)
    assert all(form_eval(g, P) == 0 for P in pts)


def test_f_lift_orbits():
    rep = lift_with_orbits(make_f_pqr(1, 1, 1))
    assert [len(o.points) for o in rep.orbits] == [4, 2, 2, 2]
    assert rep.total == 10 and rep.point_count == 10
    assert all(o.verified for o in rep.orbits)


@pytest.mark.parametrize(
    "f",
    [
        make_f_pqr(1, 2, 3),
        make_g_pq(F(1, 4), F(1, 4)),
        make_g_pq(0, 0),
        make_g_pq(F(1, 2), 0),
        make_h_pq(1, 1),
        make_h_pq(3, 0),
        make_h_pq(0, 2),
        cyclic_f0(),
    ],
)
def test_family_lifts_are_extremal(f):
    rep = lift_with_orbits(f)
    assert rep.total == 10
    kr, match = verify_lift_extremal(rep)
    assert kr.dimension == 1 and kr.rank == 27 and match


def test_lift_of_g_matches_frozen_rank():
    # independent nullspace over the same ten orbit points: kernel dimension 1, rank 27
    kr, match = verify_lift_extremal(lift_with_orbits(make_g_pq(F(1, 4), F(1, 4))))
    assert (kr.dimension, kr.rank, kr.shape[1]) == (1, 27, 28)


@pytest.mark.parametrize("f", [X * (X + Y - Z) ** 2, Y * (3 * X - 2 * Z) ** 2, X * Y * Y, X**3])
def test_edge_square_lifts(f):
    rc = check_reducible_extremal(f)
    assert rc.case == 5
    rep = reducible_lift_report(f, rc.coordinate, rc.line)
    kr, match = verify_lift_extremal(rep)
    assert kr.dimension == 1 and match


def test_monomial_lift():
    rep = reducible_lift_report(X * Y * Z, None, None, monomial=True)
    kr, match = verify_lift_extremal(rep)
    assert kr.dimension == 1 and match


def test_non_extremal_lift_has_bigger_kernel():
    f = make_f_pqr(1, 1, 1) + make_g_pq(F(1, 4), F(1, 4))
    rep = lift_with_orbits(f)
    kr, match = verify_lift_extremal(rep)
    assert kr.dimension > 1 and not match


def test_report_json():
    out = lift_with_orbits(make_h_pq(1, 1)).to_json()
    assert out["total"] == 10 and out["points"] == 6
    assert Form.from_json(out["lifted"]).degree == 6

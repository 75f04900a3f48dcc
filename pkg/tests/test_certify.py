from __future__ import annotations

import random
from fractions import Fraction

import pytest

from psdcubic.certify import (
    CERTIFIED,
    INDETERMINATE,
    REFUTED,
    certify_f,
    certify_family,
    certify_form,
    certify_g,
    certify_h,
    check_reducible_extremal,
    g_square_factor,
    line_meets_octant_in_curve,
    refute_by_grid,
)
from psdcubic.families import a1, in_psd_region, make_f_pqr, make_g_pq, random_rational, schur_f1
from psdcubic.poly import X, Y, Z, form_eval

F = Fraction


def assert_valid_refutation(out, f):
    assert out.verdict == REFUTED
    assert all(c >= 0 for c in out.point)
    assert form_eval(f, out.point) == out.value < 0


@pytest.mark.parametrize(
    "p,q,verdict",
    [(F(1, 4), F(1, 4), CERTIFIED), (F(3, 5), F(3, 5), REFUTED), (F(1, 2), F(1, 2), CERTIFIED), (0, 0, CERTIFIED), (2, 0, REFUTED)],
)
def test_certify_g(p, q, verdict):
    out = certify_g(p, q)
    assert out.verdict == verdict and out.machine_checked
    if verdict == REFUTED:
        assert_valid_refutation(out, make_g_pq(p, q))


def test_g_refutation_point_and_value():
    out = certify_g(F(3, 5), F(3, 5))
    assert out.point == (3, 3, 1) and out.value == F(-4, 5)


def test_g_boundary_square_factor():
    assert g_square_factor(F(1, 2), F(1, 2)) == F(1, 2) * X + F(1, 2) * Y - Z
    assert g_square_factor(F(1, 4), F(1, 4)) is None
    assert any(e.name == "square factorization" and e.passed for e in certify_g(F(1, 2), F(1, 2)).evidence)


@pytest.mark.parametrize("p,q,r", [(1, 1, 1), (1, 2, 3), (0, 0, 0), (2, F(1, 2), 1), (F(1, 3), F(1, 2), 0)])
def test_certify_f_certified(p, q, r):
    assert certify_f(p, q, r).certified


def test_certify_f_refutes_at_negative_vertex():
    out = certify_f(3, F(1, 4), 1)
    assert_valid_refutation(out, make_f_pqr(3, F(1, 4), 1))
    assert out.point == (1, 0, 0) and out.value == F(-135, 256)


def test_boundary_path_records_cited_step():
    out = certify_f(0, 0, 0)
    assert out.certified and not out.machine_checked
    assert any(e.kind == "cited" for e in out.evidence)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 0), (0, 3), (F(2, 7), 5)])
def test_certify_h(p, q):
    out = certify_h(p, q)
    assert out.certified and out.machine_checked


def test_h_interior_sample_is_two():
    (sample,) = [e for e in certify_h(1, 1).evidence if e.kind == "sample"]
    assert sample.detail.endswith("is 2")


def test_h_excluded_parameters():
    assert certify_h(0, 0).verdict == INDETERMINATE


@pytest.mark.parametrize("seed", range(20))
def test_f_verdict_matches_region_and_grid(seed):
    rng = random.Random(seed)
    p, q, r = (random_rational(rng, bound=6) for _ in range(3))
    out = certify_f(p, q, r)
    inside = min(a1(p, q), a1(q, r), a1(r, p)) >= 0
    assert out.certified is inside
    assert (refute_by_grid(make_f_pqr(p, q, r), 4) is None) is inside


@pytest.mark.parametrize("seed", range(20))
def test_g_verdict_matches_region_and_grid(seed):
    rng = random.Random(seed)
    p, q = random_rational(rng, bound=4), random_rational(rng, bound=4)
    out = certify_g(p, q)
    assert out.certified is in_psd_region("g", (p, q))
    assert (refute_by_grid(make_g_pq(p, q), 4) is None) is out.certified


@pytest.mark.parametrize(
    "f,depth,negative",
    [(make_g_pq(F(3, 5), F(3, 5)), 3, True), (schur_f1(), 4, False), (X * Y * Z, 2, False), (X * Y * Z, 5, False)],
)
def test_refute_by_grid(f, depth, negative):
    hit = refute_by_grid(f, depth)
    assert (hit is not None) is negative
    if hit:
        P, v = hit
        assert form_eval(f, P) == v < 0


@pytest.mark.parametrize(
    "f,case",
    [(X * (X + Y - Z) ** 2, 5), (X * Y * Z, 6), (X * (X + Y + Z) ** 2, None), (Y * (3 * X - 2 * Z) ** 2 * 4, 5), (X * Y * Z * -1, None)],
)
def test_reducible_cases(f, case):
    assert check_reducible_extremal(f).case == case


@pytest.mark.parametrize("coeffs,meets", [((1, 1, -1), True), ((1, 1, 1), False), ((0, 0, 1), True), ((1, 2, 0), False)])
def test_line_meets_octant(coeffs, meets):
    from psdcubic.poly import Form

    assert line_meets_octant_in_curve(Form.linear(*coeffs)) is meets


def test_certify_form_on_general_inputs():
    assert certify_form(X * Y * Z).verdict == INDETERMINATE
    out = certify_form(X**3 - Y**3)
    assert_valid_refutation(out, X**3 - Y**3)


def test_dispatch():
    assert certify_family("g", (F(1, 4), F(1, 4))).certified
    with pytest.raises(ValueError):
        certify_family("xyz", ())

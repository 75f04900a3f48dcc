from __future__ import annotations

import random
from fractions import Fraction

import pytest
from cases import CASES, non_extremal_sums, sample

from psdcubic.classify import IDENTITY, SWAP_YZ, MonomialMap, classify_form, match_family
from psdcubic.families import FamilyParams, cyclic_f0, make_f_pqr, make_g_pq, make_h_pq
from psdcubic.poly import Form, X, Y, Z, permute

F = Fraction


def test_scaled_f_member():
    f = MonomialMap.diag(1, F(1, 5), F(1, 7)).apply(make_f_pqr(1, 2, 3)) * 3
    res = classify_form(f)
    assert res.verdict == "case1_f" and res.params == (1, 2, 3) and res.alpha == 3
    assert res.match.transform == MonomialMap.diag(1, F(1, 5), F(1, 7))
    assert res.reconstruct() == f


def test_g_at_zero():
    res = classify_form(X * X * Y + X * Y * Y + Z**3 - 3 * X * Y * Z)
    assert res.verdict == "case3_g" and res.params == (0, 0)


def test_cyclic_cubic_is_f_at_zero():
    res = classify_form(cyclic_f0())
    assert res.verdict == "case1_f" and res.params == (0, 0, 0)


def test_swapped_boundary_member_is_case_two():
    f = SWAP_YZ.apply(make_f_pqr(F(1, 2), F(1, 2), 0))
    res = classify_form(f)
    assert res.verdict == "case2_f_perm" and res.reconstruct() == f


@pytest.mark.parametrize(
    "f,verdict",
    [
        (X * (X + Y - Z) ** 2 * 2, "case5_edge_square"),
        (X * Y * Z * 5, "case6_xyz"),
        (make_h_pq(3, 0), "case4_h"),
        (permute(make_h_pq(0, 2), (1, 2, 0)), "case4_h"),
        (X * (X + Y + Z) ** 2, "not_extremal"),
        (X**3 + Y**3 + Z**3, "not_extremal"),
        (-make_f_pqr(1, 2, 3), "not_extremal"),
        (make_f_pqr(1, 1, 1) + make_g_pq(F(1, 4), F(1, 4)), "not_extremal"),
    ],
)
def test_verdicts(f, verdict):
    res = classify_form(f)
    assert res.verdict == verdict
    if res.is_extremal:
        assert res.reconstruct() == f


def test_out_of_region_member_is_rejected_with_witness():
    res = classify_form(make_f_pqr(3, F(1, 4), 1))
    assert res.verdict == "not_extremal"
    assert "crunode at 1:1:1" in res.diagnostics
    assert "negative at 1:0:0: -135/256" in res.diagnostics


def test_match_family():
    assert match_family(make_h_pq(1, 2) * 2, FamilyParams("h", (1, 2))) == 2
    assert match_family(make_f_pqr(1, 1, 1), FamilyParams("g", (F(1, 4), F(1, 4)))) is None
    assert match_family(permute(make_f_pqr(1, 2, 3), (1, 2, 0)), FamilyParams("f", (3, 1, 2))) == 1


def test_monomial_map_algebra():
    M = MonomialMap((1, 2, 0), (F(2), F(3), F(5)))
    assert M @ M.inverse() == IDENTITY
    f = make_g_pq(F(1, 3), F(1, 5))
    N = MonomialMap.diag(7, 1, F(1, 2))
    assert M.inverse().apply(M.apply(f)) == f
    # F(v) -> F(Mv) is contravariant in the map
    assert N.apply(M.apply(f)) == (M @ N).apply(f)


@pytest.mark.parametrize("case", CASES)
def test_round_trip_per_case(case):
    rng = random.Random(hash(case) % 1000)
    for _ in range(5):
        f = sample(case, rng)
        res = classify_form(f)
        assert res.verdict == case
        assert res.reconstruct() == f


def test_sums_are_rejected():
    for f in non_extremal_sums(10, seed=5):
        assert not classify_form(f).is_extremal


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        classify_form(Form.zero(3))

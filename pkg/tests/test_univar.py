from __future__ import annotations

from fractions import Fraction

import pytest

from psdcubic.univar import (
    Interval,
    UniPoly,
    interpolate,
    isolate_roots,
    poly_gcd,
    rational_roots,
    sign_on_interval,
    squarefree_factorization,
    sturm_count,
    vanishing_order,
)

t = UniPoly.t()


@pytest.mark.parametrize(
    "poly,interval,count",
    [
        ((t - 1) * (t - 2), Interval.open(0, 3), 2),
        ((t - 1) * (t - 2), Interval.open(Fraction(3, 2), 3), 1),
        (t * t + 1, Interval(), 0),
        ((t - 1) * (t - 2), Interval.open(1, 2), 0),
        ((t - 1) * (t - 2), Interval.closed(1, 2), 2),
        ((t - 1) ** 3 * t, Interval(), 2),
    ],
)
def test_sturm_count(poly, interval, count):
    assert sturm_count(poly, interval) == count


def test_isolate_three_simple_roots():
    roots = isolate_roots(t**3 - t)
    assert len(roots) == 3
    for r, exact in zip(roots, (-1, 0, 1)):
        assert r.lo <= exact <= r.hi and r.multiplicity == 1
    # exact roots are points; the others are half-open (lo, hi] with one root each
    for r in roots:
        if r.exact is None:
            assert sturm_count(t**3 - t, Interval(r.lo, r.hi, False, True)) == 1


def test_isolate_double_root():
    (r,) = isolate_roots((t - 2) ** 2)
    assert r.multiplicity == 2 and r.lo <= 2 <= r.hi


def test_isolate_irrational_roots():
    roots = isolate_roots(t * t - 2)
    assert len(roots) == 2
    r = roots[1]
    assert r.lo * r.lo < 2 < r.hi * r.hi or r.hi * r.hi == 2


@pytest.mark.parametrize(
    "poly,roots",
    [
        (t * (2 * t - 1) ** 2, [0, Fraction(1, 2)]),
        ((3 * t + 2) * (t * t - 2), [Fraction(-2, 3)]),
        (t * t + 1, []),
        ((t - 5) * (t - Fraction(7, 3)) * (t + 4), [-4, Fraction(7, 3), 5]),
    ],
)
def test_rational_roots(poly, roots):
    assert rational_roots(poly) == roots


@pytest.mark.parametrize(
    "poly,interval,sign",
    [
        (-((t + 1) ** 2) * (t * t + 1), Interval(), "-"),
        (t, Interval.open(-1, 1), "0-mixed"),
        (t * t, Interval.open(0, None), "+"),
        (t * t, Interval.closed(0, 1), "+"),
        (t * (t - 1), Interval.closed(0, 1), "-"),
        (UniPoly(), Interval(), "0"),
    ],
)
def test_sign_on_interval(poly, interval, sign):
    assert sign_on_interval(poly, interval) == sign


def test_edge_restriction_of_symmetric_member_is_positive():
    from psdcubic.families import make_f_pqr
    from psdcubic.geometry import edge_restriction

    r = edge_restriction(make_f_pqr(1, 1, 1), "z")
    assert sign_on_interval(r, Interval.open(0, None)) in ("+", "0-mixed")
    # dense sampling agrees with the Sturm verdict
    samples = [r(Fraction(k, 10)) for k in range(1, 101)]
    assert min(samples) >= 0


@pytest.mark.parametrize("poly,a,order", [((t - 2) ** 3 * (t + 1), 2, 3), (t * t + 1, 0, 0), (t**4, 0, 4)])
def test_vanishing_order(poly, a, order):
    assert vanishing_order(poly, a) == order


def test_squarefree_factorization():
    p = (t - 1) * (t + 2) ** 3
    parts = squarefree_factorization(p)
    rebuilt = UniPoly([p.lc()])
    for q, k in parts:
        rebuilt = rebuilt * q**k
    assert rebuilt == p
    assert sorted(k for _, k in parts) == [1, 3]


def test_gcd_and_division():
    a = (t - 1) * (t - 3)
    b = (t - 1) * (t + 5)
    assert poly_gcd(a, b).monic() == t - 1
    q, r = (a * b).divmod(b)
    assert q == a and r.is_zero()


def test_interpolate_recovers_polynomial():
    p = 3 * t**3 - t + Fraction(1, 2)
    xs = [Fraction(k) for k in range(4)]
    assert interpolate(xs, [p(x) for x in xs]) == p

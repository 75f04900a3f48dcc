from __future__ import annotations

import random
from fractions import Fraction

import pytest

from psdcubic.families import cyclic_f0, h_closed_form, make_f_pqr, make_g_pq, random_rational
from psdcubic.poly import (
    Form,
    X,
    Y,
    Z,
    form_compose_linear,
    form_derivative,
    form_divide,
    form_eval,
    form_partial,
    form_restrict_line,
    form_square_substitute,
    form_unsquare,
    is_even_form,
    monomials,
    normalize_point,
    octant_representative,
    permute,
    proportional,
    scale_vars,
)
from psdcubic.scalar import TowerScalar
from psdcubic.univar import UniPoly


def random_cubic(rng: random.Random) -> Form:
    return Form(3, {e: Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 5)) for e in monomials(3)})


def test_monomial_basis_size_and_order():
    assert len(monomials(3)) == 10 and len(monomials(8)) == 45 and len(monomials(10)) == 66
    assert monomials(3)[0] == (3, 0, 0)


def test_terms_are_nonzero_and_homogeneous():
    f = Form(3, {(3, 0, 0): 0, (1, 1, 1): 2})
    assert list(f.terms) == [(1, 1, 1)]
    with pytest.raises(ValueError):
        Form(3, {(2, 0, 0): 1})
    assert Form.zero(3).terms == {}


@pytest.mark.parametrize("point,value", [((1, 1, 1), 0), ((1, 2, 3), 5)])
def test_evaluate_cyclic_member(point, value):
    assert form_eval(cyclic_f0(), point) == value


def test_cusp_member_interior_value():
    assert h_closed_form(1, 1)(1, 1, 1) == 2


def test_evaluate_at_tower_point():
    t = (2, 3)
    P = (TowerScalar.sqrt_of(t, 2), TowerScalar.sqrt_of(t, 3), TowerScalar.embed(t, 1))
    # (x^2 - 2z^2)(y^2 - 3z^2) vanishes at (sqrt2, sqrt3, 1)
    g = (X * X - Z * Z * 2) * (Y * Y - Z * Z * 3)
    assert form_eval(g, P) == 0


def test_partial_of_cube():
    assert form_partial(X**3, 0) == X * X * 3


def test_second_z_derivative_against_difference_quotients():
    rng = random.Random(3)
    p, q = random_rational(rng, positive=True), random_rational(rng, positive=True)
    g = make_g_pq(p, q)
    gzz = form_derivative(g, (0, 0, 2))
    for _ in range(20):
        P = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
        # a cubic in z has an exact central second difference up to the h^2 term of the third derivative
        for h in (Fraction(1, 7), Fraction(1, 14)):
            up = form_eval(g, (P[0], P[1], P[2] + h))
            mid = form_eval(g, P)
            dn = form_eval(g, (P[0], P[1], P[2] - h))
            assert (up - 2 * mid + dn) / (h * h) == form_eval(gzz, P)


@pytest.mark.parametrize("seed", range(20))
def test_euler_relation(seed):
    f = random_cubic(random.Random(seed))
    lhs = X * form_partial(f, 0) + Y * form_partial(f, 1) + Z * form_partial(f, 2)
    assert lhs == f * 3


def test_identity_substitution():
    f = make_f_pqr(1, 2, 3)
    assert form_compose_linear(f, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == f


def test_cyclic_substitution_rotates_parameters():
    assert permute(make_f_pqr(1, 2, 3), (2, 0, 1)) == make_f_pqr(2, 3, 1)


def test_diagonal_scaling_round_trip():
    f = make_g_pq(Fraction(1, 3), Fraction(1, 5))
    g = scale_vars(f, (1, Fraction(1, 2), Fraction(1, 3)))
    assert scale_vars(g, (1, 2, 3)) == f
    assert g == form_compose_linear(f, [[1, 0, 0], [0, Fraction(1, 2), 0], [0, 0, Fraction(1, 3)]])


def test_composition_law():
    f = make_f_pqr(1, 2, 3)
    A = [[0, 1, 0], [0, 0, 2], [3, 0, 0]]
    B = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    AB = [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert form_compose_linear(form_compose_linear(f, A), B) == form_compose_linear(f, AB)


def test_singular_substitution_rejected():
    with pytest.raises(ValueError):
        form_compose_linear(X**3, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_square_substitution():
    assert form_square_substitute(X * Y * Z) == X**2 * Y**2 * Z**2
    f = random_cubic(random.Random(0))
    g = form_square_substitute(f)
    assert g.degree == 6 and len(g.terms) == len(f.terms) == 10
    assert is_even_form(g) and form_unsquare(g) == f


def test_square_substitution_of_equal_parameter_g():
    t = Fraction(1, 2)
    lhs = form_square_substitute(make_g_pq(t * t, t * t))
    Mt = (
        (1 - 2 * t * t) * (X**4 * Y**2 + X**2 * Y**4)
        + t**4 * (X**4 * Z**2 + Y**4 * Z**2)
        - (3 - 8 * t * t + 2 * t**4) * X**2 * Y**2 * Z**2
        - 2 * t * t * (X**2 * Z**4 + Y**2 * Z**4)
        + Z**6
    )
    assert lhs == Mt


def test_restrict_cyclic_member_to_edge():
    b = form_restrict_line(cyclic_f0(), (1, 0, 0), (0, 1, 0))
    assert b.coeffs == (0, 1, 0, 0)  # u^2 v


@pytest.mark.parametrize("seed", range(10))
def test_diagonal_restriction_of_g(seed):
    rng = random.Random(seed)
    p, q = random_rational(rng), random_rational(rng)
    b = form_restrict_line(make_g_pq(p, q), (0, 0, 1), (1, 1, 0))
    t = UniPoly.t()
    assert b.at_u1() == (t - 1) ** 2 * (1 - 2 * (p + q - 1) * t)


def test_restriction_through_two_curve_points():
    f = make_f_pqr(1, 2, 3)
    b = form_restrict_line(f, (0, 1, 1), (1, 0, 2))
    assert b.coeffs[0] == 0 and b.coeffs[-1] == 0


def test_products_and_zero():
    assert (X + Y) * (X - Y) == X * X - Y * Y
    assert (make_f_pqr(1, 2, 3) * 0).is_zero()


def test_square_decomposition_of_g():
    rng = random.Random(11)
    for _ in range(10):
        p, q = random_rational(rng), random_rational(rng)
        lin = (1 - p + q) * X + (1 + p - q) * Y - 2 * Z
        rhs = (1 - p - q) * Y * (X - Z) * lin + (q * X + (1 - q) * Y - Z) ** 2 * Z
        assert rhs == make_g_pq(p, q)


def test_exact_division():
    L = X + Y * 2 - Z
    assert form_divide(L * L * Z, L) == L * Z
    assert form_divide(X**3 + Y**3, X + Y * 2) is None


def test_proportional():
    f = make_f_pqr(1, 2, 3)
    assert proportional(f * Fraction(-3, 2), f) == Fraction(-3, 2)
    assert proportional(f, make_f_pqr(1, 2, 4)) is None


def test_json_round_trip():
    f = make_g_pq(Fraction(1, 3), Fraction(2, 7))
    assert Form.from_json(f.to_json()) == f
    assert f.dumps() == Form.from_json(f.to_json()).dumps()


@pytest.mark.parametrize(
    "P,rep",
    [((1, 2, 3), (1, 2, 3)), ((-1, 0, -2), (1, 0, 2)), ((1, -1, 0), None)],
)
def test_octant_representative(P, rep):
    assert octant_representative(P) == rep


def test_normalize_point():
    assert normalize_point((0, 3, 6)) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0))

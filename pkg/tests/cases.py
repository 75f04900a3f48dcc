"""Seeded generators of extremal cubics in each class, with random monomial changes of variables."""

from __future__ import annotations

import random
from fractions import Fraction

from psdcubic.classify import MonomialMap
from psdcubic.families import a1, make_f_pqr, make_g_pq, make_h_pq, random_rational
from psdcubic.poly import Form, X, Y, Z, proportional

EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
ALL_PERMS = EVEN + ((0, 2, 1), (2, 1, 0), (1, 0, 2))
CASES = ("case1_f", "case2_f_perm", "case3_g", "case4_h", "case5_edge_square", "case6_xyz")


def _pos(rng: random.Random, bound: int = 9) -> Fraction:
    return random_rational(rng, bound=bound, positive=True)


def _monomial(rng: random.Random, perms=ALL_PERMS) -> MonomialMap:
    return MonomialMap(rng.choice(perms), tuple(_pos(rng) for _ in range(3)))


def _f_params(rng: random.Random, zeros: int) -> tuple:
    while True:
        ps = [random_rational(rng, bound=6, positive=True) for _ in range(3)]
        for i in rng.sample(range(3), zeros):
            ps[i] = Fraction(0)
        p, q, r = ps
        if min(a1(p, q), a1(q, r), a1(r, p)) > 0:
            return p, q, r


def sample(case: str, rng: random.Random) -> Form:
    """A random member of the named class."""
    alpha = _pos(rng)
    if case == "case1_f":
        f = make_f_pqr(*_f_params(rng, rng.choice((0, 0, 1, 2))))
        return _monomial(rng, EVEN).apply(f) * alpha
    if case == "case2_f_perm":
        p, q, r = _f_params(rng, rng.choice((1, 2)))
        # f_prq(x, z/b, y/a); the region conditions hold for (p, r, q)
        f = make_f_pqr(p, q, r)
        swap = MonomialMap((0, 2, 1), (Fraction(1), 1 / _pos(rng), 1 / _pos(rng)))
        return _monomial(rng, EVEN).apply(swap.apply(f)) * alpha
    if case == "case3_g":
        while True:
            p, q = random_rational(rng, bound=6), random_rational(rng, bound=6)
            if p + q < 1:
                break
        return _monomial(rng).apply(make_g_pq(p, q)) * alpha
    if case == "case4_h":
        while True:
            p, q = random_rational(rng, bound=6), random_rational(rng, bound=6)
            if (p, q) != (0, 0):
                break
        return _monomial(rng).apply(make_h_pq(p, q)) * alpha
    if case == "case5_edge_square":
        v = rng.randrange(3)
        while True:
            cs = [rng.randint(-4, 4) for _ in range(3)]
            nz = [c for c in cs if c]
            if len(nz) == 1 or (any(c > 0 for c in nz) and any(c < 0 for c in nz)):
                break
        return Form.var(v) * Form.linear(*cs) ** 2 * alpha
    if case == "case6_xyz":
        return X * Y * Z * alpha
    raise ValueError(case)


def round_trip_samples(count: int = 200, seed: int = 0) -> list[tuple[str, Form]]:
    rng = random.Random(seed)
    return [(CASES[i % len(CASES)], sample(CASES[i % len(CASES)], rng)) for i in range(count)]


def non_extremal_sums(count: int = 50, seed: int = 1) -> list[Form]:
    """Sums of two distinct members; nonnegative on the octant but never extremal."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = sample(rng.choice(CASES), rng)
        b = sample(rng.choice(CASES), rng)
        s = a + b
        if s.degree == 3 and proportional(a, b) is None:
            out.append(s)
    return out

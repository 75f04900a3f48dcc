"""Square-substitution lift f(x,y,z) -> f(x^2,y^2,z^2) and kernel checks of extremality.

Each zero of f in the closed octant pulls back to a sign orbit of zeros of
the lift.  Every orbit point carries the derivative conditions that a
nonnegative form vanishing there must satisfy; the lift is confirmed
extremal when those conditions cut out a one-dimensional space spanned by
the lift itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .geometry import ZeroEntry, ZeroInventory, boundary_zeros, n_contribution
from .linsys import KernelResult, ZeroCondition, build_constraint_matrix, nullspace
from .poly import Form, form_derivative, form_eval, form_square_substitute, format_point, monomials, proportional
from .scalar import TowerScalar, prime_factors, squarefree_decompose

Alpha = tuple[int, int, int]
NODE: tuple[Alpha, ...] = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def even_form_check(g: Form) -> bool:
    """True iff every exponent is even, i.e. g lies in the image of the lift."""
    return all(all(e % 2 == 0 for e in exp) for exp in g.terms)


def sqrt_tower(values: Sequence) -> tuple[int, ...]:
    """Primes needed to adjoin the square roots of the given nonnegative rationals."""
    primes: set[int] = set()
    for v in values:
        v = Fraction(v)
        if v < 0:
            raise ValueError("negative coordinate has no real square root")
        if v == 0:
            continue
        _, m = squarefree_decompose(v.numerator * v.denominator)
        primes.update(prime_factors(m))
    return tuple(sorted(primes))


def _sqrt(v, tower: tuple[int, ...]):
    v = Fraction(v)
    if v == 0:
        return TowerScalar.embed(tower, 0) if tower else Fraction(0)
    if not tower:
        s, m = squarefree_decompose(v.numerator * v.denominator)
        if m != 1:
            raise ValueError("square root is irrational")
        return Fraction(s, v.denominator)
    return TowerScalar.sqrt_of(tower, v)


def sign_orbit(P: Sequence, tower: tuple[int, ...] | None = None) -> list[tuple]:
    """Preimages of an octant point: square roots with sign flips, first nonzero coordinate positive."""
    P = tuple(Fraction(c) for c in P)
    if tower is None:
        tower = sqrt_tower(P)
    roots = [_sqrt(c, tower) for c in P]
    nz = [i for i, c in enumerate(P) if c != 0]
    out = []
    for signs in product((1, -1), repeat=len(nz) - 1):
        Q = list(roots)
        for i, s in zip(nz[1:], signs):
            Q[i] = Q[i] * s
        out.append(tuple(Q))
    return out


def _unit(v: int, n: int = 1) -> Alpha:
    a = [0, 0, 0]
    a[v] = n
    return tuple(a)


def _plus(a: Alpha, b: Alpha) -> Alpha:
    return tuple(x + y for x, y in zip(a, b))


def all_orders_below(k: int) -> tuple[Alpha, ...]:
    return tuple(a for d in range(k) for a in monomials(d))


def lifted_constraints(entry: ZeroEntry) -> tuple[Alpha, ...] | None:
    """Derivative conditions at each preimage of an octant zero; ``None`` if unsupported.

    acnode, regular open-edge zero, length-1 vertex: value and gradient.
    vertex of length m with contact along coordinate a (b the other vanishing
    coordinate): d_a^i for i < 2m and d_b d_a^i for i < m.
    cusp on an open edge with transverse coordinate t and along-edge
    coordinate a (not the chart coordinate): d_t^i for i <= 5 and d_a d_t^i
    for i <= 2.
    """
    if entry.point is None:
        return None
    if entry.kind == "acnode" or (entry.kind == "regular" and entry.location == "edge"):
        return NODE
    if entry.kind == "regular" and entry.location == "vertex":
        m = entry.order
        if m is None:
            return None
        if m == 1:
            return NODE
        v = "xyz".index(entry.which)
        best = max(entry.incident, key=lambda e: entry.incident[e] or 0)
        b = "xyz".index(best)
        a = 3 - v - b
        cons = [_unit(a, i) for i in range(2 * m)]
        cons += [_plus(_unit(b), _unit(a, i)) for i in range(m)]
        return tuple(cons)
    if entry.kind == "cusp" and entry.location == "edge":
        t = "xyz".index(entry.which)
        others = [v for v in range(3) if v != t]
        chart = max(others, key=lambda v: abs(entry.point[v]))
        a = next(v for v in others if v != chart)
        cons = [_unit(t, i) for i in range(6)]
        cons += [_plus(_unit(a), _unit(t, i)) for i in range(3)]
        return tuple(cons)
    return None


@dataclass
class Orbit:
    source: tuple
    kind: str
    location: str
    contribution: int | None
    points: list[tuple]
    constraints: tuple[Alpha, ...] | None
    verified: bool = False

    def to_json(self) -> dict:
        return {
            "source": format_point(self.source),
            "kind": self.kind,
            "location": self.location,
            "N_P": self.contribution,
            "points": [format_point(P) for P in self.points],
            "constraints": None if self.constraints is None else [list(a) for a in self.constraints],
            "verified": self.verified,
        }


@dataclass
class LiftReport:
    base: Form
    lifted: Form
    orbits: list[Orbit] = field(default_factory=list)
    extra_conditions: list[ZeroCondition] = field(default_factory=list)
    note: str = ""

    @property
    def total(self) -> int | None:
        if any(o.contribution is None for o in self.orbits):
            return None
        return sum(o.contribution for o in self.orbits)

    @property
    def point_count(self) -> int:
        return sum(len(o.points) for o in self.orbits)

    @property
    def complete(self) -> bool:
        return all(o.constraints is not None for o in self.orbits)

    def conditions(self) -> list[ZeroCondition]:
        out = []
        for o in self.orbits:
            if o.constraints is None:
                raise ValueError(f"no lifted conditions for a {o.kind} zero")
            out.extend(ZeroCondition(P, o.constraints) for P in o.points)
        return out + list(self.extra_conditions)

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "lifted": self.lifted.to_json(),
            "orbits": [o.to_json() for o in self.orbits],
            "points": self.point_count,
            "total": self.total,
            "note": self.note,
        }


def _verify_points(g: Form, points, constraints) -> bool:
    if constraints is None:
        return all(form_eval(g, P) == 0 for P in points)
    return all(form_eval(form_derivative(g, a), P) == 0 for P in points for a in constraints)


def lift_with_orbits(f: Form, inventory: ZeroInventory | None = None) -> LiftReport:
    """Lift a cubic and expand every octant zero in ``inventory`` to its sign orbit."""
    if inventory is None:
        inventory = boundary_zeros(f)
    g = form_square_substitute(f)
    rep = LiftReport(f, g)
    for e in inventory.entries:
        if e.point is None:
            raise ValueError("zero with irrational coordinates; no tower available")
        pts = sign_orbit(e.point)
        cons = lifted_constraints(e)
        orb = Orbit(e.point, e.kind, e.location, n_contribution(e), pts, cons)
        orb.verified = _verify_points(g, pts, cons)
        rep.orbits.append(orb)
    return rep


def verify_lift_extremal(report: LiftReport) -> tuple[KernelResult, bool]:
    """Kernel of the orbit conditions in the lifted degree and whether it is spanned by the lift."""
    deg = report.lifted.degree
    rows = build_constraint_matrix(report.conditions(), deg)
    kr = nullspace(rows, len(monomials(deg)))
    match = kr.dimension == 1 and proportional(Form.from_vector(deg, kr.basis[0]), report.lifted) not in (None, 0)
    return kr, match


# ----------------------------------------------------------------------------
# reducible lifts: vanishing along whole curves


def _line_points(v: int, count: int) -> list[tuple]:
    """Rational points on the coordinate line x_v = 0."""
    a, b = [w for w in range(3) if w != v]
    out = []
    for j in range(1, count + 1):
        P = [Fraction(0)] * 3
        P[a] = Fraction(1)
        P[b] = Fraction(j)
        out.append(tuple(P))
    return out


def _segment_points(ell: Form, count: int) -> list[tuple]:
    """Octant points of V(ell) whose square roots need few primes."""
    a, b, c = (ell.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    cands = []
    rng = range(0, 13)
    for u in rng:
        for v in rng:
            for w in rng:
                if (u, v, w) == (0, 0, 0) or a * u + b * v + c * w != 0:
                    continue
                if sum(1 for t in (u, v, w) if t) < 2:
                    continue
                P = (Fraction(u), Fraction(v), Fraction(w))
                cands.append((len(sqrt_tower(P)), u + v + w, P))
    cands.sort()
    out = []
    for _, _, P in cands:
        if all(not _proj_equal(P, Q) for Q in out):
            out.append(P)
        if len(out) == count:
            break
    return out


def _proj_equal(P, Q) -> bool:
    return all(P[i] * Q[j] == P[j] * Q[i] for i in range(3) for j in range(3))


def reducible_lift_report(f: Form, coordinate: Form | None, line: Form | None, monomial: bool = False) -> LiftReport:
    """Conditions for lifts of x*ell^2 and xyz: vanishing to the right order along each real component."""
    g = form_square_substitute(f)
    rep = LiftReport(f, g, note="curve components sampled at rational or radical points")
    mult = {0: 0, 1: 0, 2: 0}
    conic = None
    if monomial:
        for v in range(3):
            mult[v] += 2
    else:
        v = next(iter(coordinate.terms)).index(1)
        mult[v] += 2
        nz = [i for i in range(3) if line.coeff(_unit(i)) != 0]
        if len(nz) == 1:
            mult[nz[0]] += 4
        else:
            conic = line
    for v, k in mult.items():
        if k == 0:
            continue
        pts = _line_points(v, g.degree + 2)
        cons = all_orders_below(k)
        orb = Orbit(pts[0], f"line {'xyz'[v]}=0 order {k}", "curve", None, pts, cons)
        orb.verified = _verify_points(g, pts, cons)
        rep.orbits.append(orb)
    if conic is not None:
        for P in _segment_points(conic, 4):
            pts = sign_orbit(P)
            orb = Orbit(P, "doubled conic", "curve", None, pts, NODE)
            orb.verified = _verify_points(g, pts, NODE)
            rep.orbits.append(orb)
    return rep

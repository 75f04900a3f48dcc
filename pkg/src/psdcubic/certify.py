"""Nonnegativity certificates on the closed octant, and refutations by exact evaluation.

A certificate is a list of evidence steps.  Each step is either machine
checked (a Form or UniPoly identity, a sign fact from Sturm counts, an exact
sample value) or a named inference whose preconditions were checked.  Steps
of kind ``cited`` are arguments that are recorded but not computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .families import (
    a1,
    f_conditions,
    f_curve,
    f_t1_minus_t2,
    f_t1_t2,
    h_curve,
    make_f_pqr,
    make_g_pq,
    make_h_pq,
)
from .geometry import EDGES, edge_restriction, factor_linear_completely
from .poly import Form, X, Y, Z, eval_on_curve, form_derivative, form_eval, format_point, permute, proportional
from .univar import Interval, UniPoly, poly_gcd, sign_on_interval

CERTIFIED, REFUTED, INDETERMINATE = "certified", "refuted", "indeterminate"
DEFAULT_GRID_DEPTH = 4


@dataclass
class Evidence:
    name: str
    kind: str  # identity | sign | sample | inference | cited | refutation
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"step": self.name, "kind": self.kind, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class PsdOutcome:
    verdict: str
    evidence: list[Evidence] = field(default_factory=list)
    point: tuple | None = None
    value: Fraction | None = None
    failed_step: str | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    @property
    def machine_checked(self) -> bool:
        return all(e.kind not in ("cited",) for e in self.evidence)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "evidence": [e.to_json() for e in self.evidence]}
        if self.point is not None:
            out["point"] = format_point(self.point)
            out["value"] = str(self.value)
        if self.failed_step is not None:
            out["failed_step"] = self.failed_step
        return out


class _Trail:
    """Collects evidence and stops at the first failed check."""

    def __init__(self):
        self.steps: list[Evidence] = []
        self.failed: str | None = None

    def check(self, name: str, kind: str, ok: bool, detail: str = "") -> bool:
        self.steps.append(Evidence(name, kind, bool(ok), detail))
        if not ok and self.failed is None:
            self.failed = name
        return bool(ok)

    def note(self, name: str, kind: str, detail: str):
        self.steps.append(Evidence(name, kind, True, detail))

    def outcome(self) -> PsdOutcome:
        if self.failed is not None:
            return PsdOutcome(INDETERMINATE, self.steps, failed_step=self.failed)
        return PsdOutcome(CERTIFIED, self.steps)


def _refuted(f: Form, P, reason: str, steps=None) -> PsdOutcome:
    P = tuple(Fraction(c) for c in P)
    v = form_eval(f, P)
    if not (v < 0 and all(c >= 0 for c in P)):
        raise AssertionError("refutation point does not give a negative value")
    ev = list(steps or []) + [Evidence(reason, "refutation", True, f"value at {':'.join(str(c) for c in P)} is {v}")]
    return PsdOutcome(REFUTED, ev, P, v)


# ----------------------------------------------------------------------------
# generic pieces


def refute_by_grid(f: Form, depth: int = DEFAULT_GRID_DEPTH) -> tuple[tuple, Fraction] | None:
    """Most negative value of f over the simplex points (i, j, k)/n with n = 3 * 2^depth."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    n = 3 * 2**depth
    terms = list(f.terms.items())
    best = None
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            v = sum(c * i**a * j**b * k**e for (a, b, e), c in terms)
            if v < 0 and (best is None or v < best[1]):
                best = ((i, j, k), v)
    if best is None:
        return None
    (i, j, k), v = best
    P = (Fraction(i, n), Fraction(j, n), Fraction(k, n))
    return P, form_eval(f, P)


def edges_nonnegative(f: Form, trail: _Trail) -> bool:
    ok = True
    for e in EDGES:
        r = edge_restriction(f, e)
        s = sign_on_interval(r, Interval.closed(0, None))
        ok &= trail.check(f"edge {e}=0 nonnegative", "sign", s in ("+", "0"), f"restriction {r!r}: {s}")
    return ok


def _negative_vertex(f: Form):
    for P in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        if form_eval(f, P) < 0:
            return P
    return None


def _sign_fact(trail: _Trail, label: str, p: UniPoly, interval: Interval, want: str) -> bool:
    """want is "<=0" or ">=0"."""
    s = sign_on_interval(p, interval)
    ok = s == "0" or (s == "-" if want == "<=0" else s == "+")
    lo = "-inf" if interval.lo is None else str(interval.lo)
    hi = "inf" if interval.hi is None else str(interval.hi)
    br = ("[" if interval.lo_closed else "(") + f"{lo}, {hi}" + ("]" if interval.hi_closed else ")")
    return trail.check(f"{label} {want} on {br}", "sign", ok, s)


def _interior_constancy(trail: _Trail, f: Form, sample) -> None:
    v = form_eval(f, sample)
    if trail.check("interior sample positive", "sample", v > 0, f"value at {':'.join(str(c) for c in sample)} is {v}"):
        trail.note(
            "interior-sign-constancy",
            "inference",
            "no real point of the curve lies in the open octant apart from the isolated singular point; "
            "the open octant minus a point is connected, so f keeps the sign of the sample there",
        )


def _coordinate_times_square(f: Form):
    """(K, m, ell) with f = K * m * ell^2 and m a coordinate, or None."""
    factors, cof = factor_linear_completely(f)
    if len(factors) != 3 or cof.degree != 0:
        return None
    K = cof.coeff((0, 0, 0))
    coords = [i for i, L in enumerate(factors) if len(L.terms) == 1]
    for mi in coords:
        rest = [L for i, L in enumerate(factors) if i != mi]
        a = proportional(rest[0], rest[1])
        if a is None:
            continue
        m = factors[mi]
        e = next(iter(m.terms))
        c = m.terms[e]
        ell = rest[0]
        return K * c * a, Form.var(e.index(1)), ell
    return None


# ----------------------------------------------------------------------------
# the acnode family with three edge zeros


def _rotate_f(p, q, r):
    """Rotation of (p, q, r) with last entry nonzero; f_pqr(y,z,x) = f_rpq."""
    for k, t in enumerate(((p, q, r), (r, p, q), (q, r, p))):
        if t[2] != 0:
            return t, k
    return None, None


def certify_f(p, q, r) -> PsdOutcome:
    p, q, r = Fraction(p), Fraction(q), Fraction(r)
    if min(p, q, r) < 0:
        raise ValueError("parameters must be nonnegative")
    f = make_f_pqr(p, q, r)
    a_vals = {"a1(p,q)": a1(p, q), "a1(q,r)": a1(q, r), "a1(r,p)": a1(r, p)}
    if any(v < 0 for v in a_vals.values()):
        steps = [Evidence(k, "sample", True, f"{k} = {v}") for k, v in a_vals.items()]
        P = _negative_vertex(f)
        if P is not None:
            return _refuted(f, P, "negative vertex value", steps)
        hit = refute_by_grid(f, 6)
        if hit is not None:
            return _refuted(f, hit[0], "negative grid point", steps)
        return PsdOutcome(INDETERMINATE, steps, failed_step="no negative point found")
    trail = _Trail()
    for k, v in a_vals.items():
        trail.check(f"{k} >= 0", "sample", v >= 0, str(v))
    if any(v == 0 for v in a_vals.values()):
        dec = _coordinate_times_square(f)
        if dec is None:
            trail.check("coordinate times square factorization", "identity", False)
            return trail.outcome()
        K, m, ell = dec
        trail.check(
            "coordinate times square factorization",
            "identity",
            f == m * ell * ell * K,
            f"f = {K} * {m.to_text()} * ({ell.to_text()})^2",
        )
        trail.check("factor constant positive", "sample", K > 0, str(K))
        return trail.outcome()
    rot, k = _rotate_f(p, q, r)
    if rot is None:
        return _certify_f_boundary(f, p, q, r, trail)
    pp, qq, rr = rot
    g = make_f_pqr(pp, qq, rr)
    if k:
        perm = (1, 2, 0) if k == 1 else (2, 0, 1)
        trail.check("rotation to a nonzero third parameter", "identity", permute(f, perm) == g, f"params {pp}, {qq}, {rr}")
    xs = f_curve(pp, qq, rr)
    trail.check("curve identity", "identity", eval_on_curve(g, xs).is_zero())
    x, y, z = xs
    t = UniPoly.t()
    # the curve point lies on the line y - z = t (x - z) through the node
    trail.check("curve on the pencil through the node", "identity", (y - z - t * (x - z)).is_zero())
    gg = poly_gcd(poly_gcd(x, y), z)
    trail.check("parametrization has no common factor", "identity", gg.degree == 0)
    t1, t2 = f_t1_t2(pp, qq, rr)
    trail.check("t1 - t2 closed form", "identity", t1 - t2 == f_t1_minus_t2(pp, qq, rr), f"t1={t1}, t2={t2}")
    trail.check("t1 > t2 > 0", "sample", t1 > t2 > 0)
    if trail.failed:
        return trail.outcome()
    O = Interval
    _sign_fact(trail, "x(t)", x, O(None, 0, False, True), "<=0")
    _sign_fact(trail, "y(t)", y, O(None, 0, False, True), ">=0")
    _sign_fact(trail, "x(t)", x, O.open(0, t1), "<=0")
    _sign_fact(trail, "z(t)", z, O.open(0, None), ">=0")
    _sign_fact(trail, "y(t)", y, O(0, t2, False, True), ">=0")
    _sign_fact(trail, "x(t)", x, O(t1, None, True, False), ">=0")
    _sign_fact(trail, "y(t)", y, O(t1, None, True, False), "<=0")
    lead = [c.coeffs[3] if c.degree >= 3 else Fraction(0) for c in xs]
    trail.check(
        "point on the line x = z not interior",
        "sign",
        not (all(c > 0 for c in lead) or all(c < 0 for c in lead)),
        ", ".join(str(c) for c in lead),
    )
    trail.note(
        "no interior branch",
        "inference",
        "every real curve point other than the node is (x(t):y(t):z(t)) for some t or the point at t = infinity; "
        "on each range one coordinate is <= 0 and another >= 0",
    )
    edges_nonnegative(f, trail)
    if trail.failed:
        return trail.outcome()
    _interior_constancy(trail, f, (2, 1, 1))
    return trail.outcome()


def _certify_f_boundary(f: Form, p, q, r, trail: _Trail) -> PsdOutcome:
    for cond in f_conditions(p, q, r):
        ok = all(form_eval(form_derivative(f, a), cond.point) == 0 for a in cond.constraints)
        trail.check(f"zero conditions at {':'.join(str(c) for c in cond.point)}", "identity", ok)
    edges_nonnegative(f, trail)
    hit = refute_by_grid(f, 5)
    trail.check("grid search depth 5 finds no negative value", "sample", hit is None)
    if hit is not None:
        return _refuted(f, hit[0], "negative grid point", trail.steps)
    trail.note(
        "continuity in the parameters",
        "cited",
        "limit of certified members with positive parameters; the nonnegative cone is closed",
    )
    return trail.outcome()


# ----------------------------------------------------------------------------
# the acnode family with two vertex zeros


def certify_g(p, q) -> PsdOutcome:
    p, q = Fraction(p), Fraction(q)
    if p < 0 or q < 0:
        raise ValueError("parameters must be nonnegative")
    g = make_g_pq(p, q)
    if p + q > 1:
        a = 1 / (2 * (p + q - 1))
        # smallest integer beyond a, avoiding the double root x = 1
        xv = Fraction(max(floor(a) + 1, 2))
        ev = [
            Evidence(
                "diagonal restriction",
                "identity",
                g(UniPoly.t(), UniPoly.t(), UniPoly([1])) == UniPoly([-1, 1]) ** 2 * UniPoly([1, -2 * (p + q - 1)]),
                "g(x,x,1) = (x-1)^2 (1 - 2(p+q-1) x)",
            )
        ]
        return _refuted(g, (xv, xv, 1), f"negative beyond x = {a}", ev)
    trail = _Trail()
    lin_x, lin_y = 1 - p + q, 1 + p - q
    lin = lin_x * (X - Z) + lin_y * (Y - Z)
    w = 1 - p - q
    trail.check("1 - p - q >= 0", "sample", w >= 0, str(w))
    trail.check("linear form coefficients >= 0", "sample", lin_x >= 0 and lin_y >= 0, f"{lin_x}, {lin_y}")
    s1 = (q * X + (1 - q) * Y - Z) ** 2 * Z
    s2 = ((1 - p) * X + p * Y - Z) ** 2 * Z
    trail.check("decomposition through y(x-z)", "identity", g == w * Y * (X - Z) * lin + s1)
    trail.check("decomposition through x(y-z)", "identity", g == w * X * (Y - Z) * lin + s2)
    if w == 0:
        trail.check("square factorization", "identity", g == (q * X + p * Y - Z) ** 2 * Z, f"({(q * X + p * Y - Z).to_text()})^2 z")
    trail.note(
        "four-way case split",
        "inference",
        "x>=z,y>=z or x<=z,y<=z: first decomposition; otherwise the sign of the linear form picks the "
        "decomposition whose product term is a product of two nonpositive or two nonnegative factors",
    )
    return trail.outcome()


def g_square_factor(p, q) -> Form | None:
    """The linear form ell with g = ell^2 z on the line p + q = 1."""
    p, q = Fraction(p), Fraction(q)
    if p + q != 1:
        return None
    return q * X + p * Y - Z


# ----------------------------------------------------------------------------
# the cusp family


def certify_h(p, q) -> PsdOutcome:
    p, q = Fraction(p), Fraction(q)
    if p < 0 or q < 0:
        raise ValueError("parameters must be nonnegative")
    if p == 0 and q == 0:
        return PsdOutcome(INDETERMINATE, [], failed_step="excluded parameters (0, 0)")
    h = make_h_pq(p, q)
    trail = _Trail()
    X_, D, Z_ = h_curve(p, q)
    trail.check("curve identity", "identity", eval_on_curve(h, [X_, D, Z_]).is_zero())
    t = UniPoly.t()
    trail.check("curve on the pencil through the cusp", "identity", (Z_ - D - t * X_).is_zero())
    _sign_fact(trail, "x(t)", X_, Interval(), "<=0")
    crit = set()
    if p:
        crit.add(1 / p)
    if p + 3 * q:
        crit.add(Fraction(-2) / (p + 3 * q))
    if 3 * p + q:
        crit.add(Fraction(2) / (3 * p + q))
    if q:
        crit.add(Fraction(-1) / q)
    pts = sorted(crit)
    bounds = [None] + pts + [None]
    both_neg = []
    for lo, hi in zip(bounds, bounds[1:]):
        iv = Interval.open(lo, hi)
        sd, sz = sign_on_interval(D, iv), sign_on_interval(Z_, iv)
        if sd == "-" and sz == "-":
            both_neg.append(f"({lo}, {hi})")
        if "0-mixed" in (sd, sz):
            both_neg.append(f"sign change inside ({lo}, {hi})")
    for c in pts:
        if D(c) < 0 and Z_(c) < 0:
            both_neg.append(str(c))
    trail.check(
        "y(t), z(t) never both negative",
        "sign",
        not both_neg,
        "critical points " + ", ".join(str(c) for c in pts) + ("; failures " + ", ".join(both_neg) if both_neg else ""),
    )
    trail.note("no interior branch", "inference", "x(t) <= 0 everywhere, so an interior point needs y(t) < 0 and z(t) < 0")
    edges_nonnegative(h, trail)
    if trail.failed:
        return trail.outcome()
    _interior_constancy(trail, h, (1, 1, 1))
    return trail.outcome()


# ----------------------------------------------------------------------------
# reducible cubics


@dataclass
class ReducibleCheck:
    case: int | None
    alpha: Fraction | None = None
    coordinate: Form | None = None
    line: Form | None = None
    reason: str = ""

    def to_json(self) -> dict:
        out = {"case": self.case, "reason": self.reason}
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.coordinate is not None:
            out["coordinate"] = self.coordinate.to_text()
        if self.line is not None:
            out["line"] = self.line.to_text()
        return out


def line_meets_octant_in_curve(ell: Form) -> bool:
    """V(ell) meets the closed octant in a segment: mixed-sign coefficients, or ell a coordinate."""
    cs = [ell.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    nz = [c for c in cs if c != 0]
    return len(nz) == 1 or (any(c > 0 for c in nz) and any(c < 0 for c in nz))


def check_reducible_extremal(f: Form) -> ReducibleCheck:
    factors, cof = factor_linear_completely(f)
    if not factors:
        return ReducibleCheck(None, reason="no rational linear factor")
    if cof.degree != 0:
        return ReducibleCheck(None, reason="line times an irreducible conic is never extremal")
    K = cof.coeff((0, 0, 0))
    single = [L for L in factors if len(L.terms) == 1]
    # monomial type: three distinct coordinates
    if len(single) == 3:
        vars_ = sorted(next(iter(L.terms)).index(1) for L in single)
        if vars_ == [0, 1, 2]:
            alpha = K
            for L in single:
                alpha *= next(iter(L.terms.values()))
            if alpha > 0:
                return ReducibleCheck(6, alpha, reason="positive multiple of xyz")
            return ReducibleCheck(None, alpha, reason="negative on the open octant")
    dec = _coordinate_times_square(f)
    if dec is None:
        return ReducibleCheck(None, reason="three distinct lines not all coordinates, or a repeated line without a coordinate factor")
    alpha, m, ell = dec
    if alpha < 0:
        return ReducibleCheck(None, alpha, m, ell, reason="negative on the open octant")
    if not line_meets_octant_in_curve(ell):
        return ReducibleCheck(None, alpha, m, ell, reason="the doubled line meets the octant in at most a point")
    return ReducibleCheck(5, alpha, m, ell, reason="coordinate times the square of a line crossing the octant")


# ----------------------------------------------------------------------------
# dispatch


def certify_family(family: str, params) -> PsdOutcome:
    if family == "f":
        return certify_f(*params)
    if family == "g":
        return certify_g(*params)
    if family == "h":
        return certify_h(*params)
    raise ValueError(f"no certifier for family {family!r}")


def certify_form(f: Form, depth: int = DEFAULT_GRID_DEPTH) -> PsdOutcome:
    """Arbitrary forms: edge checks and grid search; never certifies on its own."""
    P = _negative_vertex(f)
    if P is not None:
        return _refuted(f, P, "negative vertex value")
    hit = refute_by_grid(f, depth)
    if hit is not None:
        return _refuted(f, hit[0], "negative grid point")
    trail = _Trail()
    edges_nonnegative(f, trail)
    trail.check("grid search finds no negative value", "sample", True, f"depth {depth}")
    return PsdOutcome(INDETERMINATE, trail.steps, failed_step="no certificate for a general form")

"""Plane cubic geometry over Q: singular points, boundary zeros, weighted zero counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .poly import (
    Form,
    form_derivative,
    form_divide,
    form_eval,
    form_partial,
    form_restrict_line,
    format_point,
    normalize_point,
    octant_representative,
    same_point,
)
from .univar import (
    Interval,
    UniPoly,
    squarefree_part,
    sturm_count,
    interpolate,
    isolate_roots,
    poly_gcd,
    rational_roots,
    vanishing_order,
)

EDGES = ("x", "y", "z")
VERTICES = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}


# ----------------------------------------------------------------------------
# bivariate helpers (affine charts)

Biv = dict  # {(i, j): Fraction}


def _dehomogenize(f: Form, chart: int) -> Biv:
    """Set coordinate ``chart`` to 1; keep the other two in order."""
    keep = [v for v in range(3) if v != chart]
    out: Biv = {}
    for e, c in f.terms.items():
        k = (e[keep[0]], e[keep[1]])
        out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v != 0}


def _biv_in_y(b: Biv, x0) -> UniPoly:
    deg = max((j for (_, j) in b), default=-1)
    cs = [Fraction(0)] * (deg + 1)
    for (i, j), c in b.items():
        cs[j] += c * Fraction(x0) ** i
    return UniPoly(cs)


def _y_degree(b: Biv) -> int:
    return max((j for (_, j) in b), default=-1)


def _total_degree(b: Biv) -> int:
    return max((i + j for (i, j) in b), default=-1)


def _x_only(b: Biv) -> UniPoly:
    deg = max((i for (i, _) in b), default=-1)
    cs = [Fraction(0)] * (deg + 1)
    for (i, j), c in b.items():
        if j == 0:
            cs[i] += c
    return UniPoly(cs)


def _det(M: list[list[Fraction]]) -> Fraction:
    M = [row[:] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                k = M[r][c] / M[c][c]
                for j in range(c, n):
                    M[r][j] -= k * M[c][j]
    return det


def _sylvester_at(a: Biv, b: Biv, m: int, n: int, x0) -> Fraction:
    pa = [Fraction(0)] * (m + 1)
    pb = [Fraction(0)] * (n + 1)
    for (i, j), c in a.items():
        pa[j] += c * Fraction(x0) ** i
    for (i, j), c in b.items():
        pb[j] += c * Fraction(x0) ** i
    size = m + n
    M = []
    for r in range(n):
        row = [Fraction(0)] * size
        for j in range(m + 1):
            row[r + j] = pa[m - j]
        M.append(row)
    for r in range(m):
        row = [Fraction(0)] * size
        for j in range(n + 1):
            row[r + j] = pb[n - j]
        M.append(row)
    return _det(M)


def resultant_y(a: Biv, b: Biv) -> UniPoly | None:
    """Res_y(a, b) as a polynomial in x; ``None`` when both are free of y."""
    m, n = _y_degree(a), _y_degree(b)
    if m < 0 or n < 0:
        return UniPoly()
    if m == 0 and n == 0:
        return None
    bound = max(_total_degree(a), 0) * max(_total_degree(b), 0) + 1
    xs = [Fraction(k) for k in range(bound + 1)]
    ys = [_sylvester_at(a, b, m, n, x0) for x0 in xs]
    return interpolate(xs, ys)


def _biv_gcd_x(a: Biv, b: Biv) -> UniPoly:
    return poly_gcd(_x_only(a), _x_only(b))


# ----------------------------------------------------------------------------
# singular points


@dataclass
class SingularityReport:
    point: tuple | None
    kind: str
    discriminant: Fraction | None = None
    box: tuple | None = None  # isolating data for irrational candidates
    isolated_check: bool | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        out["point"] = format_point(self.point) if self.point is not None else "irrational"
        if self.discriminant is not None:
            out["discriminant"] = str(self.discriminant)
        if self.box is not None:
            out["box"] = [[str(a), str(b)] for a, b in self.box]
        if self.isolated_check is not None:
            out["isolated_check"] = self.isolated_check
        return out


def _gradient_zero(f: Form, P) -> bool:
    return all(form_eval(form_partial(f, v), P) == 0 for v in range(3))


def _candidate_x_roots(A: Biv, B: Biv, C: Biv) -> tuple[UniPoly | None, bool]:
    """Polynomial whose roots contain the x-coordinates of common zeros; flag if non-isolated."""
    polys = [p for p in (A, B, C) if p]
    if not polys:
        return None, True
    if len(polys) == 1:
        return None, True
    gens = []
    pairs = [(polys[i], polys[j]) for i in range(len(polys)) for j in range(i + 1, len(polys))]
    for a, b in pairs:
        r = resultant_y(a, b)
        if r is None:
            r = _biv_gcd_x(a, b)
        gens.append(r)
    nonzero = [r for r in gens if not r.is_zero()]
    if not nonzero:
        # every pair shares a factor: fall back to generic combinations
        combos = []
        for w in ((1, 2, 3), (3, -1, 2), (2, 5, -1)):
            combo: Biv = {}
            for coef, p in zip(w, (A, B, C)):
                for k, c in p.items():
                    combo[k] = combo.get(k, 0) + coef * c
            combos.append({k: v for k, v in combo.items() if v != 0})
        for i in range(len(combos)):
            for j in range(i + 1, len(combos)):
                r = resultant_y(combos[i], combos[j])
                if r is None:
                    r = _biv_gcd_x(combos[i], combos[j])
                if not r.is_zero():
                    nonzero.append(r)
        if not nonzero:
            return None, True
    g = nonzero[0]
    for r in nonzero[1:]:
        g = poly_gcd(g, r)
    return g, False


def find_singular_points(f: Form) -> list[SingularityReport]:
    """Rational singular points of a cubic with their kinds.

    A non-isolated singular locus (repeated factor) yields a single report of
    kind ``non-isolated``; irrational candidates are reported with an
    isolating x-interval and kind ``undetermined``.
    """
    if f.is_zero():
        raise ValueError("zero form")
    fx, fy, fz = (form_partial(f, v) for v in range(3))
    found: list[tuple] = []
    irrational: list[SingularityReport] = []
    non_isolated = False
    # chart z = 1
    A, B, C = (_dehomogenize(g, 2) for g in (fx, fy, fz))
    R, degen = _candidate_x_roots(A, B, C)
    if degen:
        non_isolated = True
    elif R.degree > 0:
        rats = rational_roots(R)
        for x0 in rats:
            ys = [_biv_in_y(p, x0) for p in (A, B, C)]
            nz = [p for p in ys if not p.is_zero()]
            if not nz:
                non_isolated = True
                continue
            g = nz[0]
            for p in nz[1:]:
                g = poly_gcd(g, p)
            if g.degree <= 0:
                continue
            for y0 in rational_roots(g):
                P = (x0, y0, Fraction(1))
                if _gradient_zero(f, P):
                    found.append(P)
            # a real irrational y over a rational x is a genuine singular point
            for lo, hi, _ in irrational_real_roots(g):
                irrational.append(SingularityReport(None, "undetermined", box=((x0, x0), (lo, hi))))
        for lo, hi, _ in irrational_real_roots(R):
            irrational.append(SingularityReport(None, "undetermined", box=((lo, hi),)))
    # line z = 0: points (x:1:0) and (1:0:0)
    line = [UniPoly(_binary_coeffs(g)) for g in (fx, fy, fz)]
    nz = [p for p in line if not p.is_zero()]
    if not nz:
        non_isolated = True
    else:
        g = nz[0]
        for p in nz[1:]:
            g = poly_gcd(g, p)
        if g.degree > 0:
            for x0 in rational_roots(g):
                P = (x0, Fraction(1), Fraction(0))
                if _gradient_zero(f, P):
                    found.append(P)
            for lo, hi, _ in irrational_real_roots(g):
                irrational.append(SingularityReport(None, "undetermined", box=((lo, hi), (1, 1))))
        if _gradient_zero(f, (1, 0, 0)):
            found.append((Fraction(1), Fraction(0), Fraction(0)))
    if non_isolated:
        return [SingularityReport(None, "non-isolated")]
    out = []
    for P in found:
        if any(same_point(P, r.point) for r in out):
            continue
        out.append(classify_singularity(f, normalize_point(P)))
    return out + irrational


def _binary_coeffs(g: Form) -> list[Fraction]:
    """Coefficients of g(x, 1, 0) in ascending powers of x."""
    cs = [Fraction(0)] * (g.degree + 1)
    for (i, j, k), c in g.terms.items():
        if k == 0:
            cs[i] += c
    return cs


def classify_singularity(f: Form, P: Sequence) -> SingularityReport:
    P = tuple(Fraction(c) for c in P)
    if form_eval(f, P) != 0 or not _gradient_zero(f, P):
        raise ValueError("point is not a singular point of the form")
    k = max(range(3), key=lambda v: abs(P[v]))
    Pn = tuple(c / P[k] for c in P)
    i, j = [v for v in range(3) if v != k]

    def d(*vs):
        alpha = [0, 0, 0]
        for v in vs:
            alpha[v] += 1
        return form_eval(form_derivative(f, alpha), Pn)

    a, b, c = d(i, i), d(i, j), d(j, j)
    disc = b * b - a * c
    if a == 0 and b == 0 and c == 0:
        return SingularityReport(normalize_point(P), "degenerate", disc)
    if disc < 0:
        return SingularityReport(normalize_point(P), "acnode", disc, isolated_check=_isolated_sample(f, Pn, i, j))
    if disc > 0:
        return SingularityReport(normalize_point(P), "crunode", disc)
    # tangent direction of the double line of the jet
    dirn = (-b, a) if a != 0 else (Fraction(1), Fraction(0))
    cubic = Fraction(0)
    for s in (i, j):
        for t in (i, j):
            for u in (i, j):
                w = (dirn[0] if s == i else dirn[1]) * (dirn[0] if t == i else dirn[1]) * (dirn[0] if u == i else dirn[1])
                cubic += d(s, t, u) * w
    kind = "cusp" if cubic != 0 else "degenerate"
    return SingularityReport(normalize_point(P), kind, disc)


def _isolated_sample(f: Form, Pn, i, j) -> bool:
    """Sign of f is constant on a small rational ring around an acnode."""
    eps = Fraction(1, 10**6)
    dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1), (2, 1), (1, 2), (-2, 1), (-1, 2)]
    signs = set()
    for du, dv in dirs:
        Q = list(Pn)
        Q[i] += eps * du
        Q[j] += eps * dv
        v = form_eval(f, Q)
        signs.add((v > 0) - (v < 0))
    return len(signs) == 1 and 0 not in signs


def is_irreducible_over_c(f: Form) -> bool:
    """No rational linear factor and at most one singular point, which is a double point."""
    if linear_factor(f) is not None:
        return False
    sing = find_singular_points(f)
    if not sing:
        return True
    return len(sing) == 1 and sing[0].kind in ("acnode", "crunode", "cusp")


# ----------------------------------------------------------------------------
# boundary zeros and the weighted count


def edge_restriction(f: Form, edge: str) -> UniPoly:
    """Polynomial in s along an edge: x=0 -> f(0,s,1), y=0 -> f(1,0,s), z=0 -> f(s,1,0)."""
    s = UniPoly.t()
    one, zero = UniPoly([1]), UniPoly()
    pts = {"x": (zero, s, one), "y": (one, zero, s), "z": (s, one, zero)}[edge]
    v = form_eval(f, pts)
    return v if isinstance(v, UniPoly) else UniPoly([v])


def irrational_real_roots(r: UniPoly) -> list[tuple[Fraction, Fraction, int]]:
    """Isolating intervals (lo, hi] of the real irrational roots of r, with multiplicities."""
    q = r
    for s in rational_roots(r):
        q = q.divmod(UniPoly([-s, 1]) ** vanishing_order(q, s))[0]
    if q.degree <= 0:
        return []
    return [(ri.lo, ri.hi, ri.multiplicity) for ri in isolate_roots(q)]


def positive_irrational_roots(r: UniPoly) -> list[tuple[Fraction, Fraction, int]]:
    out = []
    for lo, hi, mult in irrational_real_roots(r):
        if hi <= 0:
            continue
        if lo < 0:
            # the root is irrational, so it is not 0 and not hi
            q = squarefree_part(r)
            if sturm_count(q, Interval.open(0, hi)) == 0:
                continue
            lo = Fraction(0)
        out.append((lo, hi, mult))
    return out


def edge_point(edge: str, s) -> tuple:
    s = Fraction(s)
    return {"x": (Fraction(0), s, Fraction(1)), "y": (Fraction(1), Fraction(0), s), "z": (s, Fraction(1), Fraction(0))}[edge]


# incident edges of each vertex: (edge, parameter end) with end "0" (s = 0) or "inf"
VERTEX_EDGES = {
    "x": (("y", "0"), ("z", "inf")),
    "y": (("x", "inf"), ("z", "0")),
    "z": (("x", "0"), ("y", "inf")),
}


def _order_at_end(r: UniPoly, end: str, degree: int) -> int | None:
    if r.is_zero():
        return None
    if end == "0":
        return vanishing_order(r, 0)
    return degree - r.degree


@dataclass
class ZeroEntry:
    point: tuple | None
    location: str  # interior | edge | vertex
    which: str | None  # vanishing coordinate for edges, the vertex name for vertices
    kind: str  # acnode | cusp | crunode | degenerate | regular | undetermined
    order: int | None = None  # contact order along the edge, or length at a vertex
    incident: dict | None = None
    box: tuple | None = None

    def label(self) -> str:
        if self.location == "vertex":
            return f"P_{self.which}"
        if self.location == "edge":
            return f"edge {self.which}=0"
        return "interior"

    def to_json(self) -> dict:
        out = {
            "point": format_point(self.point) if self.point is not None else "irrational",
            "location": self.location,
            "kind": self.kind,
        }
        if self.which is not None:
            out["which"] = self.which
        if self.order is not None:
            out["order"] = self.order
        if self.incident is not None:
            out["incident"] = {k: v for k, v in self.incident.items()}
        if self.box is not None:
            out["box"] = [str(self.box[0]), str(self.box[1])]
        return out


@dataclass
class ZeroInventory:
    entries: list[ZeroEntry] = field(default_factory=list)
    contained_edges: list[str] = field(default_factory=list)
    singular: list[SingularityReport] = field(default_factory=list)
    non_isolated: bool = False

    @property
    def irrational(self) -> bool:
        return any(e.point is None for e in self.entries) or any(s.point is None and s.kind == "undetermined" for s in self.singular)

    def by_location(self, location: str) -> list[ZeroEntry]:
        return [e for e in self.entries if e.location == location]

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "contained_edges": self.contained_edges,
            "non_isolated_singular_locus": self.non_isolated,
            "irrational": self.irrational,
        }


def _location(P) -> tuple[str, str | None]:
    zeros = [v for v in range(3) if P[v] == 0]
    if not zeros:
        return "interior", None
    if len(zeros) == 1:
        return "edge", "xyz"[zeros[0]]
    nz = next(v for v in range(3) if P[v] != 0)
    return "vertex", "xyz"[nz]


def boundary_zeros(f: Form) -> ZeroInventory:
    """Zeros of f in the closed octant: singular points, open-edge zeros and vertex zeros.

    Nonsingular interior zeros are not enumerated (for a form that is
    nonnegative on the octant, every interior zero is singular).
    """
    inv = ZeroInventory()
    sing = find_singular_points(f)
    inv.singular = sing
    if sing and sing[0].kind == "non-isolated":
        inv.non_isolated = True
    for s in sing:
        if s.point is None:
            continue
        rep = octant_representative(s.point)
        if rep is None:
            continue
        loc, which = _location(rep)
        inv.entries.append(ZeroEntry(normalize_point(rep), loc, which, s.kind))
    restr = {e: edge_restriction(f, e) for e in EDGES}
    for e in EDGES:
        r = restr[e]
        if r.is_zero():
            inv.contained_edges.append(e)
            continue
        rats = [s for s in rational_roots(r) if s > 0]
        for s in rats:
            P = normalize_point(edge_point(e, s))
            if any(x.point is not None and same_point(x.point, P) for x in inv.entries):
                continue
            inv.entries.append(ZeroEntry(P, "edge", e, "regular", vanishing_order(r, s)))
        for lo, hi, mult in positive_irrational_roots(r):
            inv.entries.append(ZeroEntry(None, "edge", e, "undetermined", mult, box=(lo, hi)))
    for vname in EDGES:
        V = tuple(Fraction(c) for c in VERTICES[vname])
        if form_eval(f, V) != 0:
            continue
        if any(x.point is not None and same_point(x.point, V) for x in inv.entries):
            continue
        incident = {}
        for edge, end in VERTEX_EDGES[vname]:
            incident[edge] = _order_at_end(restr[edge], end, f.degree)
        orders = [o for o in incident.values() if o is not None]
        length = max(orders) if orders and None not in incident.values() else None
        inv.entries.append(ZeroEntry(V, "vertex", vname, "regular", length, incident))
    # annotate singular boundary entries with their edge order
    return inv


def n_contribution(e: ZeroEntry) -> int | None:
    if e.kind == "acnode":
        return 4
    if e.kind == "cusp":
        return 12 if e.location == "interior" else 6
    if e.kind == "regular":
        if e.location == "edge":
            return 2
        if e.location == "vertex":
            return e.order
    return None


@dataclass
class NCount:
    total: int | None
    breakdown: list[tuple[str, int | None]]
    complete: bool
    reasons: list[str] = field(default_factory=list)

    @property
    def partial(self) -> int:
        return sum(n for _, n in self.breakdown if n is not None)

    def summary(self) -> str:
        return "+".join(str(n) if n is not None else "?" for _, n in self.breakdown)

    @property
    def within_bound(self) -> bool:
        return self.total is not None and self.total <= 10

    def to_json(self) -> dict:
        return {
            "N": self.total,
            "breakdown": [{"zero": lab, "N_P": n} for lab, n in self.breakdown],
            "summary": self.summary(),
            "complete": self.complete,
            "reasons": self.reasons,
        }


def count_N(f_or_inv) -> NCount:
    inv = f_or_inv if isinstance(f_or_inv, ZeroInventory) else boundary_zeros(f_or_inv)
    reasons = []
    if inv.non_isolated:
        reasons.append("non-isolated singular locus")
    if inv.contained_edges:
        reasons.append("edge contained in the zero set: " + ",".join(inv.contained_edges))
    order = {"interior": 0, "edge": 1, "vertex": 2}
    singular_first = sorted(
        inv.entries,
        key=lambda e: (e.kind in ("regular", "undetermined"), order[e.location], e.which or ""),
    )
    breakdown = []
    for e in singular_first:
        n = n_contribution(e)
        if n is None:
            reasons.append(f"no table value for {e.kind} at {e.label()}")
        label = e.label() if e.point is None else f"{e.kind} {':'.join(str(c) for c in e.point)}"
        breakdown.append((label, n))
    complete = not reasons
    total = sum(n for _, n in breakdown) if complete else None
    return NCount(total, breakdown, complete, reasons)


# ----------------------------------------------------------------------------
# linear factors and intersection multiplicities


@dataclass
class LinearFactor:
    factor: Form
    residual: Form


def _restriction_roots(f: Form, drop: int) -> list[Fraction] | None:
    """Rational roots s of f restricted to the line x_drop = 0, as f(first=s, second=1)."""
    keep = [v for v in range(3) if v != drop]
    P = [Fraction(0)] * 3
    Q = [Fraction(0)] * 3
    P[keep[0]] = Fraction(1)
    Q[keep[1]] = Fraction(1)
    b = form_restrict_line(f, P, Q)
    if b.is_zero():
        return None
    return rational_roots(b.at_v1()) if b.at_v1().degree > 0 else []


def linear_factor(f: Form) -> LinearFactor | None:
    """A rational linear factor of f (deterministic choice) with the cofactor, or ``None``."""
    if f.degree == 0 or f.is_zero():
        return None
    for v in range(3):
        L = Form.var(v)
        q = form_divide(f, L)
        if q is not None:
            return LinearFactor(L, q)
    # ell = x + b y + c z
    rz = _restriction_roots(f, 2) or []  # roots of f(s, 1, 0): x + b y vanishes at s = -b
    ry = _restriction_roots(f, 1) or []  # roots of f(s, 0, 1): x + c z vanishes at s = -c
    for s1 in rz:
        for s2 in ry:
            L = Form.linear(1, -s1, -s2)
            q = form_divide(f, L)
            if q is not None:
                return LinearFactor(L, q)
    # ell = y + c z
    rx = _restriction_roots(f, 0) or []
    for s in rx:
        L = Form.linear(0, 1, -s)
        q = form_divide(f, L)
        if q is not None:
            return LinearFactor(L, q)
    return None


def factor_linear_completely(f: Form) -> tuple[list[Form], Form]:
    """Split off rational linear factors; return (factors, remaining cofactor)."""
    factors = []
    cur = f
    while cur.degree > 0:
        lf = linear_factor(cur)
        if lf is None:
            break
        factors.append(lf.factor)
        cur = lf.residual
    return factors, cur


def intersection_multiplicity(f: Form, edge: str, P: Sequence) -> int:
    """Order of vanishing of f restricted to the coordinate line ``edge`` = 0 at P."""
    v = "xyz".index(edge)
    if P[v] != 0:
        raise ValueError("point is not on the line")
    a, b = [w for w in range(3) if w != v]
    A = [Fraction(0)] * 3
    B = [Fraction(0)] * 3
    A[a] = Fraction(1)
    B[b] = Fraction(1)
    bf = form_restrict_line(f, A, B)
    if bf.is_zero():
        raise ValueError("the form is divisible by the coordinate")
    return bf.order_at(P[a], P[b])


def vertex_contact_sum(f: Form, edge: str) -> int:
    """Sum of the contact orders of f with the line ``edge``=0 at its two vertices."""
    v = "xyz".index(edge)
    total = 0
    for w in range(3):
        if w == v:
            continue
        V = [0, 0, 0]
        V[w] = 1
        total += intersection_multiplicity(f, edge, V)
    return total


def curve_points(f: Form, P: Sequence, count: int = 24) -> list[tuple]:
    """Rational points of the curve: third intersections of lines through the double point P."""
    P = tuple(Fraction(c) for c in P)
    k = max(range(3), key=lambda v: abs(P[v]))
    a, b = [v for v in range(3) if v != k]
    out = []
    for i in range(count):
        t = Fraction(i - count // 2, 4)
        Q = [Fraction(0)] * 3
        Q[a] = Fraction(1)
        Q[b] = t
        bf = form_restrict_line(f, P, Q)
        c2, c3 = bf.coeffs[2], bf.coeffs[3]
        if c3 == 0:
            continue
        lam = -c2 / c3
        R = tuple(P[j] + lam * Q[j] for j in range(3))
        if any(R):
            out.append(normalize_point(R))
    return out

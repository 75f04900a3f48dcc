"""Decide which extremal class an exact cubic belongs to and recover its parameters.

Every recognized input is written as alpha * F(M v) with F a family member
and M a monomial matrix (a permutation with positive rational scales).  The
recovered data always reconstructs the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .certify import check_reducible_extremal, refute_by_grid
from .families import FamilyParams, build_family, in_psd_region
from .geometry import boundary_zeros, find_singular_points, linear_factor
from .poly import Form, form_compose_linear, octant_representative, proportional
from .scalar import format_rational
from .univar import UniPoly, rational_roots

VERDICTS = (
    "case1_f",
    "case2_f_perm",
    "case3_g",
    "case4_h",
    "case5_edge_square",
    "case6_xyz",
    "not_extremal",
    "indeterminate",
)


@dataclass(frozen=True)
class MonomialMap:
    """v -> (s0 * v[perm[0]], s1 * v[perm[1]], s2 * v[perm[2]])."""

    perm: tuple = (0, 1, 2)
    scales: tuple = (Fraction(1), Fraction(1), Fraction(1))

    @classmethod
    def diag(cls, *scales) -> "MonomialMap":
        return cls((0, 1, 2), tuple(Fraction(s) for s in scales))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "MonomialMap":
        return cls(tuple(perm), (Fraction(1),) * 3)

    def matrix(self) -> list[list[Fraction]]:
        M = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            M[i][self.perm[i]] = Fraction(self.scales[i])
        return M

    @classmethod
    def from_matrix(cls, M) -> "MonomialMap":
        perm, scales = [], []
        for row in M:
            nz = [j for j in range(3) if row[j] != 0]
            if len(nz) != 1:
                raise ValueError("not a monomial matrix")
            perm.append(nz[0])
            scales.append(Fraction(row[nz[0]]))
        return cls(tuple(perm), tuple(scales))

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        A, B = self.matrix(), other.matrix()
        return MonomialMap.from_matrix([[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)])

    def inverse(self) -> "MonomialMap":
        perm = [0, 0, 0]
        scales = [Fraction(0)] * 3
        for i in range(3):
            perm[self.perm[i]] = i
            scales[self.perm[i]] = 1 / Fraction(self.scales[i])
        return MonomialMap(tuple(perm), tuple(scales))

    def apply(self, F: Form) -> Form:
        """F(M v)."""
        return form_compose_linear(F, self.matrix())

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "scales": [format_rational(s) for s in self.scales]}


IDENTITY = MonomialMap()
SWAP_YZ = MonomialMap.permutation((0, 2, 1))
ROTATIONS = (IDENTITY, MonomialMap.permutation((1, 2, 0)), MonomialMap.permutation((2, 0, 1)))


@dataclass
class Match:
    verdict: str
    candidate: FamilyParams | None
    transform: MonomialMap
    alpha: Fraction

    def reconstruct(self, base: Form | None = None) -> Form:
        F = base if base is not None else self.candidate.build()
        return self.transform.apply(F) * self.alpha

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "alpha": format_rational(self.alpha), "transform": self.transform.to_json()}
        if self.candidate is not None:
            out.update(self.candidate.to_json())
        return out


@dataclass
class ClassificationResult:
    verdict: str
    match: Match | None = None
    alternates: list[Match] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    base: Form | None = None  # explicit base form for the reducible cases

    @property
    def params(self) -> tuple | None:
        return None if self.match is None or self.match.candidate is None else self.match.candidate.params

    @property
    def alpha(self) -> Fraction | None:
        return None if self.match is None else self.match.alpha

    @property
    def is_extremal(self) -> bool:
        return self.verdict.startswith("case")

    def reconstruct(self) -> Form | None:
        if self.match is None:
            return None
        return self.match.reconstruct(self.base)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "diagnostics": self.diagnostics}
        if self.match is not None:
            out["match"] = self.match.to_json()
            if self.base is not None:
                out["match"]["base"] = self.base.to_text()
        if self.alternates:
            out["alternates"] = [m.to_json() for m in self.alternates]
        return out


def match_family(f: Form, candidate: FamilyParams, scaling=(1, 1, 1), permutation=(0, 1, 2)) -> Fraction | None:
    """alpha with f = alpha * F(s0 v[perm0], s1 v[perm1], s2 v[perm2]), or None."""
    T = MonomialMap(tuple(permutation), tuple(Fraction(s) for s in scaling))
    a = proportional(f, T.apply(candidate.build()))
    return a if a not in (None, 0) else None


def _roots_with_zero(poly) -> list[Fraction]:
    vals = {Fraction(0)}
    if not poly.is_zero() and poly.degree > 0:
        vals.update(r for r in rational_roots(poly) if r > 0)
    return sorted(vals)


def _restrict(f: Form, pts) -> UniPoly:
    """f along a coordinate pattern such as (0, "s", 1)."""
    s = UniPoly.t()
    one = UniPoly([1])
    zero = UniPoly()
    table = {"s": s, 1: one, 0: zero}
    v = f(*(table[c] for c in pts))
    return v if isinstance(v, UniPoly) else UniPoly([v])


def _try(family: str, params, target: Form, verdict: str, T: MonomialMap, out: list):
    try:
        F = build_family(family, params)
    except (ValueError, ArithmeticError):
        return
    a = proportional(target, F)
    if a in (None, 0):
        return
    out.append(Match(verdict, FamilyParams(family, tuple(params)), T, a))


def _acnode_candidates(f1: Form) -> list[Match]:
    """Matches of a cubic with acnode at (1:1:1); transforms are relative to f1."""
    found: list[Match] = []
    # three open-edge zeros
    for verdict, N in (("case1_f", IDENTITY), ("case2_f_perm", SWAP_YZ)):
        fn = N.apply(f1)
        ps = _roots_with_zero(_restrict(fn, (0, "s", 1)))
        qs = _roots_with_zero(_restrict(fn, (1, 0, "s")))
        rs = _roots_with_zero(_restrict(fn, ("s", 1, 0)))
        for p in ps:
            for q in qs:
                for r in rs:
                    _try("f", (p, q, r), fn, verdict, N.inverse(), found)
        if found:
            break
    # two edge zeros and two vertex zeros
    for R in ROTATIONS:
        fr = R.apply(f1)
        ps = _roots_with_zero(_restrict(fr, (0, 1, "s")))
        qs = _roots_with_zero(_restrict(fr, (1, 0, "s")))
        for p in ps:
            for q in qs:
                _try("g", (p, q), fr, "case3_g", R.inverse(), found)
    return found


def _cusp_normalizer(P) -> MonomialMap:
    """M with f(M v) having the cusp at (0:1:1)."""
    u = [Fraction(c) for c in P]
    if u[0] == 0:
        return MonomialMap.diag(1, u[1] / u[2], 1)
    if u[1] == 0:
        # f(z, x, a y) with (1:0:a) the cusp
        return MonomialMap((2, 0, 1), (Fraction(1), Fraction(1), u[2] / u[0]))
    return MonomialMap((1, 2, 0), (u[0] / u[1], Fraction(1), Fraction(1)))


def _cusp_candidates(f1: Form) -> list[Match]:
    found: list[Match] = []
    ps = _roots_with_zero(_restrict(f1, ("s", 0, 1)))
    qs = _roots_with_zero(_restrict(f1, ("s", 1, 0)))
    for p in ps:
        for q in qs:
            if p == 0 and q == 0:
                continue
            _try("h", (p, q), f1, "case4_h", IDENTITY, found)
    return found


def _finish(f: Form, matches: list[Match], M1: MonomialMap, diags: list[str]) -> ClassificationResult:
    """Compose with the normalizing map, apply the region guards and check reconstruction."""
    inv = M1.inverse()
    good, bad = [], []
    for m in matches:
        full = Match(m.verdict, m.candidate, m.transform @ inv, m.alpha)
        if full.reconstruct() != f:
            diags.append(f"reconstruction failed for {m.candidate.family}{m.candidate.params}")
            continue
        if m.alpha > 0 and in_psd_region(m.candidate.family, m.candidate.params):
            good.append(full)
        else:
            bad.append(full)
    if good:
        return ClassificationResult(good[0].verdict, good[0], good[1:], diags)
    if bad:
        m = bad[0]
        diags.append(
            f"matches {m.candidate.family} with parameters {[format_rational(p) for p in m.candidate.params]} "
            f"and scale {format_rational(m.alpha)}, outside the nonnegative region"
        )
        return ClassificationResult("not_extremal", None, bad, diags)
    return None


def classify_form(f: Form) -> ClassificationResult:
    res = _classify(f)
    if res.verdict == "not_extremal":
        hit = _negative_witness(f)
        if hit is not None:
            res.diagnostics.append(f"negative at {':'.join(format_rational(c) for c in hit[0])}: {format_rational(hit[1])}")
    return res


def _negative_witness(f: Form):
    for P in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = f(*P)
        if v < 0:
            return P, v
    return refute_by_grid(f, 3)


def _classify(f: Form) -> ClassificationResult:
    if f.is_zero():
        raise ValueError("zero form")
    if f.degree != 3:
        raise ValueError("classification is for cubics")
    diags: list[str] = []
    if linear_factor(f) is not None:
        rc = check_reducible_extremal(f)
        diags.append(rc.reason)
        if rc.case == 6:
            return ClassificationResult("case6_xyz", Match("case6_xyz", None, IDENTITY, rc.alpha), [], diags, Form(3, {(1, 1, 1): 1}))
        if rc.case == 5:
            base = rc.coordinate * rc.line * rc.line
            return ClassificationResult("case5_edge_square", Match("case5_edge_square", None, IDENTITY, rc.alpha), [], diags, base)
        return ClassificationResult("not_extremal", None, [], diags)
    sing = find_singular_points(f)
    if any(s.point is None for s in sing):
        diags.append("singular point candidates with irrational coordinates")
        return ClassificationResult("indeterminate", None, [], diags)
    octant = [(s, octant_representative(s.point)) for s in sing]
    octant = [(s, P) for s, P in octant if P is not None]
    if not octant:
        diags.append("no singular point in the closed octant")
        return ClassificationResult("not_extremal", None, [], diags)
    s, P = octant[0]
    zeros = sum(1 for c in P if c == 0)
    diags.append(f"{s.kind} at {':'.join(format_rational(c) for c in P)}")
    if zeros == 2:
        diags.append("singular point at a vertex")
        return ClassificationResult("not_extremal", None, [], diags)
    if s.kind == "cusp" and zeros == 1:
        M1 = _cusp_normalizer(P)
        res = _finish(f, _cusp_candidates(M1.apply(f)), M1, diags)
    elif s.kind == "acnode" and zeros == 0:
        M1 = MonomialMap.diag(1, P[1] / P[0], P[2] / P[0])
        res = _finish(f, _acnode_candidates(M1.apply(f)), M1, diags)
    else:
        diags.append("singular point type and position rule out every extremal class")
        return ClassificationResult("not_extremal", None, [], diags)
    if res is not None:
        return res
    inv = boundary_zeros(f)
    if inv.irrational:
        diags.append("boundary zeros with irrational coordinates")
        return ClassificationResult("indeterminate", None, [], diags)
    diags.append("no family member matches the rational zero data")
    return ClassificationResult("not_extremal", None, [], diags)

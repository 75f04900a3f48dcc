"""Two higher-degree examples whose lifts are extremal: a quartic (degree 8 lift) and a quintic (degree 10 lift).

Each fixture lists the form, its zeros in the closed octant, and the
derivative conditions imposed at every preimage under the lift.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .lift import LiftReport, Orbit, sign_orbit, sqrt_tower, verify_lift_extremal
from .poly import Form, form_derivative, form_eval, form_square_substitute

QUARTIC = Form(4, {
    (4, 0, 0): 591900050,
    (3, 1, 0): 437205100,
    (2, 2, 0): -766414561,
    (1, 3, 0): 217365672,
    (3, 0, 1): -1650610670,
    (2, 1, 1): -102695021,
    (1, 2, 1): 248518503,
    (0, 3, 1): 549666,
    (2, 0, 2): 1531736792,
    (1, 1, 2): 118221267,
    (0, 2, 2): 101630538,
    (1, 0, 3): -636743352,
    (0, 1, 3): -273946320,
    (0, 0, 4): 183282336,
})

# y^3z = 5496666 instead: fails to vanish at four of the zeros below, so no kernel match
QUARTIC_VARIANT = QUARTIC + Form(4, {(0, 3, 1): 5496666 - 549666})

# octant zeros; their preimages are 4 + 4 + 4 + 2 + 2 + 1 = 17 points
QUARTIC_ZEROS = ((1, 1, 1), (2, 3, 1), (1, 2, 3), (0, 4, 3), (6, 0, 5), (0, 1, 0))

QUINTIC = Form(5, {
    (4, 1, 0): 837,
    (3, 2, 0): -645,
    (2, 3, 0): -645,
    (1, 4, 0): 837,
    (4, 0, 1): 1755,
    (3, 1, 1): -17181,
    (2, 2, 1): 23876,
    (1, 3, 1): -17181,
    (0, 4, 1): 1755,
    (3, 0, 2): -3486,
    (2, 1, 2): 19594,
    (1, 2, 2): 19594,
    (0, 3, 2): -3486,
    (2, 0, 3): 3287,
    (1, 1, 3): -11030,
    (0, 2, 3): 3287,
    (1, 0, 4): -1692,
    (0, 1, 4): -1692,
    (0, 0, 5): 648,
})

# 6 interior zeros with 4 preimages each, plus two vertices: 26 points
QUINTIC_ZEROS = ((4, 1, 1), (1, 4, 1), (1, 1, 4), (1, 9, 9), (9, 1, 9), (9, 9, 1), (1, 0, 0), (0, 1, 0))

THREE = ((0, 0, 0), (1, 0, 0), (0, 1, 0))
FOUR = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))

FIXTURES = {
    "quartic": (QUARTIC, QUARTIC_ZEROS, THREE),
    "quintic": (QUINTIC, QUINTIC_ZEROS, FOUR),
}
ALIASES = {"4.2": "quartic", "4.3": "quintic", "quartic": "quartic", "quintic": "quintic"}


def appendix_report(name: str, constraints=None) -> LiftReport:
    base, zeros, default = FIXTURES[ALIASES[name]]
    cons = default if constraints is None else tuple(constraints)
    g = form_square_substitute(base)
    tower = sqrt_tower([c for P in zeros for c in P])
    rep = LiftReport(base, g, note=f"tower {tower}")
    for P in zeros:
        pts = sign_orbit(P, tower)
        orb = Orbit(tuple(P), "zero", "octant", len(pts), pts, cons)
        orb.verified = all(form_eval(form_derivative(g, a), Q) == 0 for Q in pts for a in cons)
        rep.orbits.append(orb)
    return rep


@dataclass
class AppendixResult:
    name: str
    points: int
    conditions: int
    columns: int
    tower: tuple
    base_vanishes: bool
    orbits_verified: bool
    kernel_dim: int
    rank: int
    match: bool
    seconds: float

    @property
    def passed(self) -> bool:
        return self.base_vanishes and self.orbits_verified and self.kernel_dim == 1 and self.match

    def to_json(self) -> dict:
        return {
            "example": self.name,
            "points": self.points,
            "conditions": self.conditions,
            "columns": self.columns,
            "tower": list(self.tower),
            "base_vanishes": self.base_vanishes,
            "orbits_verified": self.orbits_verified,
            "kernel_dim": self.kernel_dim,
            "rank": self.rank,
            "match": self.match,
        }


def run_appendix(name: str, constraints=None) -> AppendixResult:
    key = ALIASES[name]
    base, zeros, _ = FIXTURES[key]
    start = time.perf_counter()
    rep = appendix_report(key, constraints)
    kr, match = verify_lift_extremal(rep)
    elapsed = time.perf_counter() - start
    nconds = sum(len(o.points) * len(o.constraints) for o in rep.orbits)
    return AppendixResult(
        key,
        rep.point_count,
        nconds,
        kr.shape[1],
        sqrt_tower([c for P in zeros for c in P]),
        all(form_eval(base, P) == 0 for P in zeros),
        all(o.verified for o in rep.orbits),
        kr.dimension,
        kr.rank,
        match,
        elapsed,
    )

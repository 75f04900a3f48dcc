"""Zero conditions on forms, constraint matrices, and exact nullspaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import Form, format_point, monomials, proportional
from .scalar import TowerScalar, rationalize_condition, scalar_from_json

Alpha = tuple[int, int, int]

KINDS = ("interior_node", "edge_tangent", "vertex_length_m", "edge_cusp")


@dataclass(frozen=True)
class ZeroCondition:
    """Require d^alpha F (point) = 0 for every multi-index alpha in ``constraints``."""

    point: tuple
    constraints: tuple[Alpha, ...]

    def __post_init__(self):
        if all(c == 0 for c in self.point):
            raise ValueError("the zero vector is not a projective point")
        cons = tuple(tuple(int(v) for v in a) for a in self.constraints)
        for a in cons:
            if len(a) != 3 or min(a) < 0:
                raise ValueError(f"bad multi-index {a}")
        if cons and (0, 0, 0) not in cons:
            raise ValueError("derivative conditions require the vanishing condition (0,0,0)")
        object.__setattr__(self, "constraints", cons)
        object.__setattr__(self, "point", tuple(self.point))

    def to_json(self) -> dict:
        return {"point": format_point(self.point), "constraints": [list(a) for a in self.constraints]}

    @classmethod
    def from_json(cls, obj: dict) -> "ZeroCondition":
        return cls(tuple(scalar_from_json(c) for c in obj["point"]), tuple(tuple(a) for a in obj["constraints"]))


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _power(x, n):
    v = 1
    for _ in range(n):
        v = v * x
    return v


def derivative_row(point: Sequence, alpha: Alpha, degree: int) -> list:
    """Row r with r . coeffs(F) = d^alpha F (point), over the monomial basis."""
    row = []
    cache: dict[tuple[int, int], object] = {}

    def pw(v, n):
        if (v, n) not in cache:
            cache[(v, n)] = _power(point[v], n)
        return cache[(v, n)]

    for e in monomials(degree):
        if any(e[v] < alpha[v] for v in range(3)):
            row.append(Fraction(0))
            continue
        k = _falling(e[0], alpha[0]) * _falling(e[1], alpha[1]) * _falling(e[2], alpha[2])
        row.append(k * pw(0, e[0] - alpha[0]) * pw(1, e[1] - alpha[1]) * pw(2, e[2] - alpha[2]))
    return row


def build_constraint_matrix(conditions: Sequence[ZeroCondition], degree: int) -> list[list]:
    """One row per (condition, multi-index); entries may be tower scalars."""
    rows = []
    for cond in conditions:
        for a in cond.constraints:
            rows.append(derivative_row(cond.point, a, degree))
    return rows


def rationalize_matrix(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    out = []
    for r in rows:
        out.extend(rationalize_condition(r))
    return out


@dataclass
class KernelResult:
    dimension: int
    basis: list[list[Fraction]]
    rank: int
    shape: tuple[int, int] = (0, 0)

    def forms(self, degree: int) -> list[Form]:
        return [Form.from_vector(degree, b) for b in self.basis]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for c in r:
            den = lcm(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in r]
        if any(ints):
            out.append(ints)
    return out


def echelon(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) elimination.

    Pivot rule: leftmost column with a nonzero entry among the remaining rows,
    row of maximal absolute value in that column, ties broken by row order.
    Returns the echelon rows (pivot rows only) and their pivot columns.
    """
    M = _integer_rows(rows)
    nrows = len(M)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            v = M[i][c]
            if v and (best is None or abs(v) > abs(M[best][c])):
                best = i
        if best is None:
            continue
        M[r], M[best] = M[best], M[r]
        piv = M[r][c]
        for i in range(r + 1, nrows):
            mic = M[i][c]
            row_i = M[i]
            row_r = M[r]
            for j in range(c + 1, ncols):
                num = piv * row_i[j] - mic * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("Bareiss division was not exact")
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> KernelResult:
    """Kernel of a rational (or tower-valued) matrix acting on rational vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer column count of an empty matrix")
        ncols = len(rows[0])
    rat = rationalize_matrix(rows)
    E, pivots = echelon(rat, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = E[k]
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    # reduced-echelon normalization of the basis: 1 at its own free column, 0 at the others
    return KernelResult(len(free), basis, len(pivots), (len(rat), ncols))


def matrix_rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(echelon(rationalize_matrix(rows), ncols)[1])


@dataclass
class UniquenessResult:
    dimension: int
    match: bool
    rank: int
    shape: tuple[int, int]
    kernel: KernelResult = field(repr=False, default=None)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "match": self.match, "rank": self.rank, "shape": list(self.shape)}


def verify_unique(conditions: Sequence[ZeroCondition], degree: int, expected: Form | None = None) -> UniquenessResult:
    rows = build_constraint_matrix(conditions, degree)
    kr = nullspace(rows, len(monomials(degree)))
    match = False
    if expected is not None and kr.dimension == 1:
        match = proportional(Form.from_vector(degree, kr.basis[0]), expected) not in (None, 0)
    return UniquenessResult(kr.dimension, match, kr.rank, kr.shape, kr)


def _along(point, zero_index: int) -> int:
    """Default edge derivative: cyclic successor of the vanishing coordinate."""
    return (zero_index + 1) % 3


def _unit(v: int, n: int = 1) -> Alpha:
    a = [0, 0, 0]
    a[v] = n
    return tuple(a)


def condition_template(kind: str, point: Sequence, **context) -> ZeroCondition:
    """Constraint sets for the standard zero types of a cubic in the octant.

    interior_node   -- point with all coordinates nonzero: F, F_y, F_z (F_x follows by Euler)
    edge_tangent    -- point on an open edge: F and the derivative along the edge
                       (context ``var`` overrides the default cyclic successor of the zero coordinate)
    vertex_length_m -- vertex with contact order ``m`` along coordinate ``axis``:
                       F, d_axis F, ..., d_axis^(m-1) F
    edge_cusp       -- cusp on an open edge: F, F_t, F_a, F_tt, F_ta where t is the vanishing
                       (transverse) coordinate and a the along-edge coordinate ``var``
    """
    point = tuple(point)
    zeros = [i for i, c in enumerate(point) if c == 0]
    if kind == "interior_node":
        if zeros:
            raise ValueError("interior_node needs a point off the coordinate lines")
        return ZeroCondition(point, ((0, 0, 0), (0, 1, 0), (0, 0, 1)))
    if kind == "edge_tangent":
        if len(zeros) != 1:
            raise ValueError("edge_tangent needs a point on an open edge")
        v = context.get("var", _along(point, zeros[0]))
        if v == zeros[0]:
            raise ValueError("edge derivative must be along the edge")
        return ZeroCondition(point, ((0, 0, 0), _unit(v)))
    if kind == "vertex_length_m":
        if len(zeros) != 2:
            raise ValueError("vertex_length_m needs a coordinate vertex")
        m = int(context["m"])
        axis = int(context["axis"])
        if axis not in zeros:
            raise ValueError("doubling axis must vanish at the vertex")
        return ZeroCondition(point, tuple(_unit(axis, n) for n in range(m)))
    if kind == "edge_cusp":
        if len(zeros) != 1:
            raise ValueError("edge_cusp needs a point on an open edge")
        t = zeros[0]
        a = context.get("var", _along(point, t))
        ta = [0, 0, 0]
        ta[t] += 1
        ta[a] += 1
        return ZeroCondition(point, ((0, 0, 0), _unit(t), _unit(a), _unit(t, 2), tuple(ta)))
    raise ValueError(f"unknown condition kind {kind!r}")


def conditions_from_json(objs) -> list[ZeroCondition]:
    return [ZeroCondition.from_json(o) for o in objs]


def any_tower(conditions: Sequence[ZeroCondition]) -> bool:
    return any(isinstance(c, TowerScalar) for cond in conditions for c in cond.point)

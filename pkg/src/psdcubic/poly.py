"""Sparse homogeneous forms in x, y, z over exact scalars."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalar import TowerScalar, scalar_from_json, scalar_to_json
from .univar import UniPoly, vanishing_order

Exp = tuple[int, int, int]


def monomials(degree: int) -> list[Exp]:
    """Exponent triples of a given degree in graded-lex order (x^d first)."""
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return out


def _norm_coeff(c):
    if isinstance(c, TowerScalar):
        return c.coords[0] if c.is_rational() else c
    return Fraction(c)


class Form:
    """Homogeneous polynomial; ``terms`` maps exponent triples to nonzero coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Exp, object] | Iterable = ()):
        if degree < 0:
            raise ValueError("negative degree")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exp, object] = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != 3 or min(e) < 0 or sum(e) != degree:
                raise ValueError(f"exponent {e} does not have degree {degree}")
            c = _norm_coeff(c)
            if c == 0:
                continue
            if e in clean:
                s = clean[e] + c
                if s == 0:
                    del clean[e]
                else:
                    clean[e] = s
            else:
                clean[e] = c
        self.degree = degree
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls(degree, {})

    @classmethod
    def var(cls, i: int) -> "Form":
        e = [0, 0, 0]
        e[i] = 1
        return cls(1, {tuple(e): 1})

    @classmethod
    def linear(cls, a, b, c) -> "Form":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def const(cls, c) -> "Form":
        return cls(0, {(0, 0, 0): c})

    def coeff(self, e: Exp):
        return self.terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Terms in graded-lex order."""
        return sorted(self.terms.items(), reverse=True)

    def vector(self) -> list:
        return [self.coeff(e) for e in monomials(self.degree)]

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence) -> "Form":
        mons = monomials(degree)
        if len(vec) != len(mons):
            raise ValueError("vector length does not match degree")
        return cls(degree, zip(mons, vec))

    # arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        if not isinstance(other, Form):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError("adding forms of different degree")
        return Form(self.degree, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Form(self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Form):
            out: dict[Exp, object] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    out[e] = out[e] + c1 * c2 if e in out else c1 * c2
            return Form(self.degree + other.degree, out)
        if isinstance(other, (int, Fraction, TowerScalar)):
            return Form(self.degree, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, TowerScalar)):
            return self * (1 / Fraction(other) if not isinstance(other, TowerScalar) else other.inverse())
        return NotImplemented

    def __pow__(self, n: int):
        out = Form.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Form):
            if self.is_zero() and other.is_zero():
                return True
            return self.degree == other.degree and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.is_zero()
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"Form({self.to_text()})"

    def __call__(self, *point):
        if len(point) == 1:
            point = tuple(point[0])
        return form_eval(self, point)

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (i, j, k), c in self.items():
            mon = "*".join(
                f"{v}^{n}" if n > 1 else v for v, n in zip("xyz", (i, j, k)) if n
            )
            cs = str(c) if not isinstance(c, TowerScalar) else repr(c)
            parts.append(f"{cs}*{mon}" if mon else cs)
        return " + ".join(parts)

    # JSON
    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"exp": list(e), "coeff": scalar_to_json(c)} for e, c in self.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "Form":
        if not isinstance(obj, dict) or "degree" not in obj or "terms" not in obj:
            raise ValueError("form JSON needs 'degree' and 'terms'")
        terms = []
        for t in obj["terms"]:
            terms.append((tuple(t["exp"]), scalar_from_json(t["coeff"])))
        return cls(int(obj["degree"]), terms)


X = Form.var(0)
Y = Form.var(1)
Z = Form.var(2)


def form_eval(f: Form, point: Sequence):
    """Exact value at the given representative; works over any commutative ring."""
    acc = 0
    cache: dict[tuple[int, int], object] = {}

    def pw(i, n):
        key = (i, n)
        if key not in cache:
            v = 1
            for _ in range(n):
                v = v * point[i]
            cache[key] = v
        return cache[key]

    for (i, j, k), c in f.terms.items():
        acc = acc + c * pw(0, i) * pw(1, j) * pw(2, k)
    return acc


def form_partial(f: Form, var: int, order: int = 1) -> Form:
    out = f
    for _ in range(order):
        if out.degree == 0:
            return Form.zero(0)
        terms = {}
        for e, c in out.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                terms[tuple(ne)] = c * e[var]
        out = Form(out.degree - 1, terms)
    return out


def form_derivative(f: Form, alpha: Sequence[int]) -> Form:
    out = f
    for v, n in enumerate(alpha):
        if n:
            out = form_partial(out, v, n)
    return out


def substitute(f: Form, images: Sequence[Form]) -> Form:
    """f(L0, L1, L2) for forms L_i of a common degree."""
    deg = images[0].degree
    for L in images:
        if L.degree != deg and not L.is_zero():
            raise ValueError("substituted forms must share a degree")
    out = Form.zero(f.degree * deg)
    powers: dict[tuple[int, int], Form] = {}

    def pw(i, n):
        if (i, n) not in powers:
            powers[(i, n)] = images[i] ** n if n else Form.const(1)
        return powers[(i, n)]

    for (i, j, k), c in f.terms.items():
        out = out + pw(0, i) * pw(1, j) * pw(2, k) * c
    if out.degree != f.degree * deg:
        out = Form(f.degree * deg, out.terms)
    return out


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def form_compose_linear(f: Form, M: Sequence[Sequence]) -> Form:
    """g(v) = f(M v).  Composing with M1 then M2 equals composing with M1*M2."""
    if _det3(M) == 0:
        raise ValueError("singular substitution matrix")
    images = [Form.linear(*row) for row in M]
    return substitute(f, images)


def permute(f: Form, perm: Sequence[int]) -> Form:
    """f(v[perm[0]], v[perm[1]], v[perm[2]]); e.g. perm (1, 2, 0) gives f(y, z, x)."""
    return substitute(f, [Form.var(i) for i in perm])


def scale_vars(f: Form, scales: Sequence) -> Form:
    """f(s0*x, s1*y, s2*z)."""
    terms = {}
    for (i, j, k), c in f.terms.items():
        terms[(i, j, k)] = c * Fraction(scales[0]) ** i * Fraction(scales[1]) ** j * Fraction(scales[2]) ** k
    return Form(f.degree, terms)


def form_square_substitute(f: Form) -> Form:
    """f(x^2, y^2, z^2)."""
    return Form(2 * f.degree, {(2 * i, 2 * j, 2 * k): c for (i, j, k), c in f.terms.items()})


def is_even_form(f: Form) -> bool:
    return all(i % 2 == 0 and j % 2 == 0 and k % 2 == 0 for (i, j, k) in f.terms)


def form_unsquare(f: Form) -> Form:
    if not is_even_form(f):
        raise ValueError("form is not even in every variable")
    return Form(f.degree // 2, {(i // 2, j // 2, k // 2): c for (i, j, k), c in f.terms.items()})


@dataclass(frozen=True)
class BinaryForm:
    """sum c_i u^(d-i) v^i."""

    degree: int
    coeffs: tuple

    def at_v1(self) -> UniPoly:
        """Dehomogenize at v = 1: polynomial in u."""
        return UniPoly(reversed(self.coeffs))

    def at_u1(self) -> UniPoly:
        """Dehomogenize at u = 1: polynomial in v."""
        return UniPoly(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def order_at(self, u, v) -> int:
        """Multiplicity of the root (u:v) of the binary form."""
        if self.is_zero():
            raise ValueError("binary form vanishes identically")
        u, v = Fraction(u), Fraction(v)
        if v != 0:
            # root u/v of the polynomial in s = u/v
            return vanishing_order(self.at_v1(), u / v)
        return vanishing_order(self.at_u1(), 0)


def form_restrict_line(f: Form, P: Sequence, Q: Sequence) -> BinaryForm:
    """Binary form b(u, v) = f(u*P + v*Q); requires rational P, Q."""
    # f(P + t Q) = sum_i c_i t^i
    coords = [UniPoly([Fraction(P[i]), Fraction(Q[i])]) for i in range(3)]
    val = form_eval(f, coords)
    if not isinstance(val, UniPoly):
        val = UniPoly([val])
    cs = list(val.coeffs) + [Fraction(0)] * (f.degree + 1 - len(val.coeffs))
    return BinaryForm(f.degree, tuple(cs))


def eval_on_curve(f: Form, curve: Sequence[UniPoly]) -> UniPoly:
    """f(x(t), y(t), z(t)) for polynomial coordinates."""
    val = form_eval(f, list(curve))
    return val if isinstance(val, UniPoly) else UniPoly([val])


def form_divide(f: Form, g: Form) -> Form | None:
    """Exact quotient f/g, or ``None`` if g does not divide f (lex division)."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return Form.zero(max(f.degree - g.degree, 0))
    if f.degree < g.degree:
        return None
    lead_e, lead_c = max(g.terms.items())
    rem = dict(f.terms)
    quot: dict[Exp, object] = {}
    while rem:
        e, c = max(rem.items())
        qe = (e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2])
        if min(qe) < 0:
            return None
        qc = c / lead_c
        quot[qe] = qc
        for ge, gc in g.terms.items():
            te = (qe[0] + ge[0], qe[1] + ge[1], qe[2] + ge[2])
            v = rem.get(te, 0) - qc * gc
            if v == 0:
                rem.pop(te, None)
            else:
                rem[te] = v
    return Form(f.degree - g.degree, quot)


def proportional(f: Form, g: Form):
    """Return alpha with f = alpha * g, or ``None``."""
    if g.is_zero():
        return None if not f.is_zero() else Fraction(0)
    if f.degree != g.degree or set(f.terms) != set(g.terms):
        return None
    e0 = next(iter(g.terms))
    alpha = f.terms[e0] / g.terms[e0]
    for e, c in g.terms.items():
        if f.terms[e] != alpha * c:
            return None
    return alpha


def normalize_point(P: Sequence) -> tuple:
    """Scale a projective point so its first nonzero coordinate is 1."""
    for c in P:
        if c != 0:
            return tuple(Fraction(v) / Fraction(c) for v in P)
    raise ValueError("the zero vector is not a projective point")


def same_point(P: Sequence, Q: Sequence) -> bool:
    return all(P[i] * Q[j] == P[j] * Q[i] for i in range(3) for j in range(3))


def octant_representative(P: Sequence) -> tuple | None:
    """A representative with all coordinates >= 0, if one exists."""
    if all(c >= 0 for c in P):
        return tuple(P)
    if all(c <= 0 for c in P):
        return tuple(-c for c in P)
    return None


def format_point(P: Sequence) -> list[str]:
    return [scalar_to_json(c) for c in P]

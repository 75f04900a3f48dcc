"""Exact univariate polynomials over Q and real-root tools.

Root counting uses Sturm sequences with the half-open convention: for a
squarefree p, the number of distinct roots in (a, b] equals V(a) - V(b),
where V counts sign variations ignoring zeros.  This holds even when a or b
is itself a root, so endpoint collisions need no perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = Fraction


class UniPoly:
    """Polynomial sum c_i t^i with Fraction coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-Fraction(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc()
        return UniPoly(c / lc for c in self.coeffs)

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def primitive_integer(self) -> list[int]:
        """Integer coefficients of a positive rational multiple with content 1."""
        from math import gcd, lcm

        if self.is_zero():
            return []
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def squarefree_factorization(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime factors with multiplicities."""
    if p.degree <= 0:
        return []
    out = []
    a = p.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a // c
    y = b // c
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = w // g
        y = z // g
        z = y - w.derivative()
        i += 1
    return out


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        seq.append(-r)
    seq.pop()
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    last = 0
    v = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _var_at(seq: Sequence[UniPoly], x) -> int:
    if x == "+inf":
        return _variations(_sign(q.lc()) for q in seq)
    if x == "-inf":
        return _variations(_sign(q.lc()) * (-1 if q.degree % 2 else 1) for q in seq)
    return _variations(_sign(q(x)) for q in seq)


@dataclass(frozen=True)
class Interval:
    """Real interval with rational or infinite endpoints (``None`` = infinite)."""

    lo: Fraction | None = None
    hi: Fraction | None = None
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError("lower endpoint exceeds upper endpoint")

    @classmethod
    def open(cls, lo=None, hi=None) -> "Interval":
        return cls(_opt(lo), _opt(hi), False, False)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(_opt(lo), _opt(hi), lo is not None, hi is not None)

    def contains(self, x) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)


def _opt(x):
    return None if x is None else Fraction(x)


def _count_half_open(seq, lo, hi) -> int:
    return _var_at(seq, "-inf" if lo is None else lo) - _var_at(seq, "+inf" if hi is None else hi)


def sturm_count(p: UniPoly, interval: Interval = Interval()) -> int:
    """Number of distinct real roots of ``p`` in ``interval``."""
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if p.degree == 0 or interval.is_empty():
        return 0
    sq = squarefree_part(p)
    seq = sturm_sequence(sq)
    n = _count_half_open(seq, interval.lo, interval.hi)
    if interval.lo is not None and interval.lo_closed and sq(interval.lo) == 0:
        n += 1
    if interval.hi is not None and not interval.hi_closed and sq(interval.hi) == 0:
        n -= 1
    return n


def cauchy_bound(p: UniPoly) -> Fraction:
    """All roots satisfy |t| < bound."""
    lc = abs(p.lc())
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None


def _isolate_squarefree(sq: UniPoly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b] (or [a, a] for exact roots) inside (lo, hi]."""
    seq = sturm_sequence(sq)
    out = []
    stack = [(lo, hi, _count_half_open(seq, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            if sq(b) == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            continue
        m = (a + b) / 2
        n_left = _count_half_open(seq, a, m)
        stack.append((m, b, n - n_left))
        stack.append((a, m, n_left))
    out.sort()
    return out


def isolate_roots(p: UniPoly) -> list[RootInterval]:
    """Isolating intervals for all real roots, sorted, with multiplicities."""
    if p.is_zero():
        raise ValueError("isolate_roots of the zero polynomial")
    if p.degree == 0:
        return []
    sq = squarefree_part(p)
    b = cauchy_bound(sq)
    factors = squarefree_factorization(p)
    out = []
    for a, c in _isolate_squarefree(sq, -b, b):
        if a == c:
            mult = next(m for f, m in factors if f(a) == 0)
        else:
            mult = next(m for f, m in factors if _count_half_open(sturm_sequence(f), a, c) == 1)
        out.append(RootInterval(a, c, mult))
    return out


def refine_root(sq: UniPoly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (a, b] of a squarefree polynomial to ``width``."""
    if sq(b) == 0:
        return b, b
    sa = _sign(sq(a)) if sq(a) != 0 else -_sign(sq(b))
    while b - a > width:
        m = (a + b) / 2
        v = sq(m)
        if v == 0:
            return m, m
        if _sign(v) == sa:
            a = m
        else:
            b = m
    return a, b


def _simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """Rational with the smallest denominator in the closed interval [a, b]."""
    if a > b:
        a, b = b, a
    if a <= 0 <= b:
        return Fraction(0)
    if b < 0:
        return -_simplest_between(-b, -a)
    fl = a.numerator // a.denominator
    if Fraction(fl) == a:
        return a
    if fl + 1 <= b:
        return Fraction(fl + 1)
    # a and b share integer part fl
    inner = _simplest_between(1 / (b - fl), 1 / (a - fl))
    return fl + 1 / inner


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots of ``p`` (distinct, sorted).

    A rational root u/v in lowest terms has v dividing the leading integer
    coefficient L, so isolating to width below 1/(2 L^2) pins the simplest
    rational of the interval; it is accepted only after exact evaluation.
    """
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    if p.degree <= 0:
        return []
    sq = squarefree_part(p)
    ints = sq.primitive_integer()
    lead = abs(ints[-1])
    limit = Fraction(1, 2 * lead * lead)
    b = cauchy_bound(sq)
    out = []
    for a, c in _isolate_squarefree(sq, -b, b):
        if a == c:
            out.append(a)
            continue
        lo, hi = a, c
        while True:
            cand = _simplest_between(lo, hi)
            # the left end of (lo, hi] may be a different root
            if cand != lo and sq(cand) == 0:
                out.append(cand)
                break
            if hi - lo < limit:
                break
            lo, hi = refine_root(sq, lo, hi, (hi - lo) / 4)
            if lo == hi:
                out.append(lo)
                break
    return sorted(out)


def vanishing_order(p: UniPoly, a) -> int:
    """Multiplicity of ``a`` as a root of ``p`` (0 if not a root)."""
    if p.is_zero():
        raise ValueError("vanishing order of the zero polynomial is infinite")
    a = Fraction(a)
    k = 0
    q = p
    while q(a) == 0:
        q = q.divmod(UniPoly([-a, 1]))[0]
        k += 1
    return k


def sign_on_interval(p: UniPoly, interval: Interval) -> str:
    """``"+"`` / ``"-"`` if p keeps that sign on the interval apart from isolated zeros
    where it does not change sign, ``"0-mixed"`` if it changes sign, ``"0"`` if p is zero."""
    if p.is_zero():
        return "0"
    if interval.is_empty():
        raise ValueError("empty interval")
    if p.degree == 0:
        return "+" if p.lc() > 0 else "-"
    lo, hi = interval.lo, interval.hi
    # odd roots strictly inside flip the sign
    sq_odd = UniPoly([1])
    for f, m in squarefree_factorization(p):
        if m % 2:
            sq_odd = sq_odd * f
    if sq_odd.degree > 0 and sturm_count(sq_odd, Interval(lo, hi, False, False)) > 0:
        return "0-mixed"
    # one sample at a non-root point strictly inside
    sample = _interior_sample(p, lo, hi)
    return "+" if p(sample) > 0 else "-"


def _interior_sample(p: UniPoly, lo, hi) -> Fraction:
    if lo is None and hi is None:
        cand = Fraction(0)
    elif lo is None:
        cand = hi - 1
    elif hi is None:
        cand = lo + 1
    else:
        cand = (lo + hi) / 2
    step = Fraction(1, 2)
    tries = 0
    while p(cand) == 0:
        tries += 1
        if lo is not None and hi is not None:
            cand = lo + (hi - lo) * step
            step /= 2
        else:
            cand += step
        if tries > 200:
            raise RuntimeError("failed to find a non-root sample")
    return cand


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UniPoly:
    """Lagrange interpolation through distinct nodes."""
    out = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        term = UniPoly([yi])
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                term = term * UniPoly([-xj, 1])
                den *= xi - xj
        out = out + term * (1 / den)
    return out

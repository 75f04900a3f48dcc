"""Exact scalars: rationals (``fractions.Fraction``) and square-root towers over Q.

A tower element lives in Q(sqrt d_1, ..., sqrt d_k) with squarefree, pairwise
coprime radicands d_i > 1.  Coordinates are indexed by bitmasks ``S`` over the
basis ``prod_{i in S} sqrt d_i``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[Fraction, "TowerScalar"]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"`` or an integer literal.  Decimals and floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational literal: {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n = s*s*m`` and ``m`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("need a positive integer")
    s, m = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            m *= d
        d += 1
    m *= n
    return s, m


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def validate_tower(tower: Sequence[int]) -> tuple[int, ...]:
    tower = tuple(int(d) for d in tower)
    for d in tower:
        if d <= 1 or not is_squarefree(d):
            raise ValueError(f"radicand {d} is not a squarefree integer > 1")
    for i in range(len(tower)):
        for j in range(i + 1, len(tower)):
            if math.gcd(tower[i], tower[j]) != 1:
                raise ValueError(f"radicands {tower[i]} and {tower[j]} are not coprime")
    return tower


class TowerScalar:
    """Element of Q(sqrt d_1, ..., sqrt d_k) stored in the subset-product basis."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: Sequence[int], coords: Iterable, *, _checked: bool = False):
        if not _checked:
            tower = validate_tower(tower)
        self.tower = tuple(tower)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != 1 << len(self.tower):
            raise ValueError("coordinate count must be 2^k")
        self.coords = coords

    # construction helpers
    @classmethod
    def embed(cls, tower: Sequence[int], x) -> "TowerScalar":
        if isinstance(x, TowerScalar):
            if x.tower != tuple(tower):
                raise ValueError("tower mismatch")
            return x
        tower = validate_tower(tower)
        coords = [Fraction(0)] * (1 << len(tower))
        coords[0] = Fraction(x)
        return cls(tower, coords, _checked=True)

    @classmethod
    def sqrt_of(cls, tower: Sequence[int], value) -> "TowerScalar":
        """Square root of a nonnegative rational inside the tower."""
        tower = validate_tower(tower)
        v = Fraction(value)
        if v < 0:
            raise ValueError("negative radicand")
        coords = [Fraction(0)] * (1 << len(tower))
        if v == 0:
            return cls(tower, coords, _checked=True)
        # sqrt(n/d) = sqrt(n*d)/d
        s, m = squarefree_decompose(v.numerator * v.denominator)
        mask = 0
        rest = m
        for i, d in enumerate(tower):
            if rest % d == 0:
                rest //= d
                mask |= 1 << i
        if rest != 1 or _basis_product(tower, mask) != m:
            raise ValueError(f"sqrt({format_rational(v)}) lies outside the tower {tower}")
        coords[mask] = Fraction(s, v.denominator)
        return cls(tower, coords, _checked=True)

    def _coerce(self, other) -> "TowerScalar":
        if isinstance(other, TowerScalar):
            if other.tower != self.tower:
                raise ValueError(f"tower mismatch: {self.tower} vs {other.tower}")
            return other
        if isinstance(other, (int, Fraction)):
            coords = [Fraction(0)] * len(self.coords)
            coords[0] = Fraction(other)
            return TowerScalar(self.tower, coords, _checked=True)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TowerScalar(self.tower, [a + b for a, b in zip(self.coords, o.coords)], _checked=True)

    __radd__ = __add__

    def __neg__(self):
        return TowerScalar(self.tower, [-a for a in self.coords], _checked=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TowerScalar(self.tower, [a - b for a, b in zip(self.coords, o.coords)], _checked=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerScalar(self.tower, [a * other for a in self.coords], _checked=True)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = len(self.coords)
        out = [Fraction(0)] * n
        for s, a in enumerate(self.coords):
            if not a:
                continue
            for t, b in enumerate(o.coords):
                if not b:
                    continue
                out[s ^ t] += a * b * _basis_product(self.tower, s & t)
        return TowerScalar(self.tower, out, _checked=True)

    __rmul__ = __mul__

    def conjugate(self, i: int) -> "TowerScalar":
        """Flip the sign of sqrt d_i."""
        bit = 1 << i
        return TowerScalar(
            self.tower, [-c if s & bit else c for s, c in enumerate(self.coords)], _checked=True
        )

    def inverse(self) -> "TowerScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero tower element")
        num = TowerScalar.embed(self.tower, 1)
        cur = self
        for i in range(len(self.tower)):
            c = cur.conjugate(i)
            num = num * c
            cur = cur * c
        return num * (1 / cur.coords[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TowerScalar.embed(self.tower, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, TowerScalar):
            return self.tower == other.tower and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.tower, self.coords))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        parts = []
        for s, c in enumerate(self.coords):
            if c:
                label = "*".join(f"sqrt{d}" for i, d in enumerate(self.tower) if s >> i & 1)
                parts.append(format_rational(c) + (f"*{label}" if label else ""))
        return "TowerScalar(" + (" + ".join(parts) or "0") + f"; {list(self.tower)})"

    def to_json(self) -> dict:
        return {"tower": list(self.tower), "coords": [format_rational(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj: dict) -> "TowerScalar":
        return cls(obj["tower"], [parse_rational(c) for c in obj["coords"]])


def _basis_product(tower: Sequence[int], mask: int) -> int:
    out = 1
    for i, d in enumerate(tower):
        if mask >> i & 1:
            out *= d
    return out


def tower_embed(x, tower: Sequence[int]) -> TowerScalar:
    return TowerScalar.embed(tower, x)


def scalar_to_json(x):
    if isinstance(x, TowerScalar):
        if x.is_rational():
            return format_rational(x.coords[0])
        return x.to_json()
    return format_rational(Fraction(x))


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return TowerScalar.from_json(obj)
    return parse_rational(obj)


def rationalize_condition(row: Sequence) -> list[list[Fraction]]:
    """Split a row of tower entries into 2^k rational rows, one per basis coordinate.

    A tower-valued linear condition sum_j a_j c_j = 0 on rational unknowns c_j
    holds iff each basis coordinate of the sum vanishes.
    """
    tower = None
    for a in row:
        if isinstance(a, TowerScalar):
            if tower is None:
                tower = a.tower
            elif a.tower != tower:
                raise ValueError("tower mismatch within a row")
    if tower is None:
        return [[Fraction(a) for a in row]]
    n = 1 << len(tower)
    out = [[Fraction(0)] * len(row) for _ in range(n)]
    for j, a in enumerate(row):
        if isinstance(a, TowerScalar):
            for s in range(n):
                out[s][j] = a.coords[s]
        else:
            out[0][j] = Fraction(a)
    return out


def is_zero(x) -> bool:
    return x == 0


def common_tower(values: Iterable) -> tuple[int, ...] | None:
    tower = None
    for v in values:
        if isinstance(v, TowerScalar):
            if tower is None:
                tower = v.tower
            elif tower != v.tower:
                raise ValueError("tower mismatch")
    return tower

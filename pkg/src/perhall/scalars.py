"""Exact arithmetic in Q(v) with v = sqrt(q).

A Scalar is a + b*v with rational a, b.  Since q is prime, sqrt(q) is
irrational and Q(v) is a field, so equality is decided componentwise.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

__all__ = ["Scalar", "v_pow", "as_scalar"]


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


class Scalar:
    __slots__ = ("a", "b", "q")

    def __init__(self, a=0, b=0, q: int = 2):
        self.a = _q(a)
        self.b = _q(b)
        self.q = q

    @classmethod
    def _raw(cls, a: mpq, b: mpq, q: int) -> "Scalar":
        s = object.__new__(cls)
        s.a, s.b, s.q = a, b, q
        return s

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.q != self.q:
                raise ValueError(f"mixing scalars over q={self.q} and q={other.q}")
            return other
        return Scalar._raw(_q(other), mpq(0), self.q)

    def __add__(self, other):
        o = self._coerce(other)
        return Scalar._raw(self.a + o.a, self.b + o.b, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Scalar._raw(self.a - o.a, self.b - o.b, self.q)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Scalar._raw(-self.a, -self.b, self.q)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            x = _q(other)
            return Scalar._raw(self.a * x, self.b * x, self.q)
        o = self._coerce(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return Scalar._raw(a * c + b * d * self.q, a * d + b * c, self.q)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        n = self.a * self.a - self.q * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("zero scalar inverse")
        return Scalar._raw(self.a / n, -self.b / n, self.q)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            x = _q(other)
            if x == 0:
                raise ZeroDivisionError("zero scalar inverse")
            return Scalar._raw(self.a / x, self.b / x, self.q)
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = Scalar._raw(mpq(1), mpq(0), self.q)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.q == other.q and self.a == other.a and self.b == other.b
        try:
            x = _q(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.b == 0 and self.a == x

    def __hash__(self):
        return hash((self.a, self.b, self.q))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return str(a)
        vb = "v" if b == 1 else "-v" if b == -1 else f"({b})v"
        if not a:
            return vb
        return f"{a} + {vb}" if not vb.startswith("-") else f"{a} - {vb[1:]}"

    def to_json(self) -> dict:
        return {"a": _fmt(self.a), "b": _fmt(self.b)}

    @classmethod
    def from_json(cls, d: dict, q: int) -> "Scalar":
        return cls(mpq(d["a"]), mpq(d["b"]), q)


def _fmt(x: mpq) -> str:
    return f"{x.numerator}/{x.denominator}"


def v_pow(k: int, q: int, coef=1) -> Scalar:
    """coef * v^k, exactly: v^(2j) = q^j and v^(2j+1) = q^j v."""
    j, odd = divmod(k, 2)
    c = _q(coef) * (mpq(q) ** j)
    if odd:
        return Scalar._raw(mpq(0), c, q)
    return Scalar._raw(c, mpq(0), q)


def as_scalar(x, q: int) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar._raw(_q(x), mpq(0), q)

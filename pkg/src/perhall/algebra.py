"""Finite linear combinations over Q(v) and a minimal algebra base class."""

from __future__ import annotations

from .scalars import Scalar, as_scalar


class Element:
    """A finite Q(v)-linear combination of basis keys of some algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        if terms:
            for b, c in terms.items():
                c = as_scalar(c, algebra.q)
                if c:
                    self.terms[b] = c

    def _like(self, terms):
        e = Element.__new__(Element)
        e.algebra = self.algebra
        e.terms = terms
        return e

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.one() * other
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            out: dict = {}
            mul = self.algebra.mul_basis
            for b1, c1 in self.terms.items():
                for b2, c2 in other.terms.items():
                    c = c1 * c2
                    _accumulate(out, mul(b1, b2), c)
            return self._like(out)
        c = as_scalar(other, self.algebra.q)
        if not c:
            return self._like({})
        return self._like({b: x * c for b, x in self.terms.items()})

    def __rmul__(self, other):
        c = as_scalar(other, self.algebra.q)
        if not c:
            return self._like({})
        return self._like({b: c * x for b, x in self.terms.items()})

    def __truediv__(self, other):
        c = as_scalar(other, self.algebra.q).inv()
        return self * c

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, b) -> Scalar:
        return self.terms.get(b, as_scalar(0, self.algebra.q))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: self.algebra.sort_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for b, c in self.items():
            parts.append(f"({c})*{self.algebra.basis_str(b)}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [self.algebra.basis_json(b) | {"coeff": c.to_json()} for b, c in self.items()]


def _accumulate(out: dict, terms: dict, scale=None) -> None:
    for b, c in terms.items():
        if scale is not None:
            c = c * scale
        old = out.get(b)
        new = c if old is None else old + c
        if new:
            out[b] = new
        elif old is not None:
            del out[b]


class Algebra:
    """Subclasses define ``q``, ``unit_key`` and ``_mul_basis``."""

    q: int
    unit_key = None

    def __init__(self):
        self._mul_cache: dict = {}

    def mul_basis(self, b1, b2) -> dict:
        key = (b1, b2)
        r = self._mul_cache.get(key)
        if r is None:
            r = self._mul_cache[key] = self._mul_basis(b1, b2)
        return r

    def _mul_basis(self, b1, b2) -> dict:  # pragma: no cover
        raise NotImplementedError

    def basis(self, b, coeff=1) -> Element:
        return Element(self, {b: coeff})

    def zero(self) -> Element:
        return Element(self)

    def one(self) -> Element:
        return self.basis(self.unit_key)

    def element(self, terms) -> Element:
        return Element(self, terms)

    def basis_str(self, b) -> str:
        return str(b)

    def basis_json(self, b) -> dict:
        return {"basis": str(b)}

    def sort_key(self, b):
        return b

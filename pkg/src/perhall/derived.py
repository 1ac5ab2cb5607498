"""Stalk-sum objects of derived categories and closed-form derived Hall numbers.

Over a hereditary category every object of D^b(A), and of the periodic
category D_m(A), is a direct sum of shifted stalks M[k].  A :class:`StalkSum`
records that decomposition as a map degree -> iso class; the period is None
in the bounded case and m for Z_m-graded objects.

The closed forms here express derived Hall numbers of the shapes
``I[1] + A`` and ``B + J[-1]`` through abelian Hall numbers only.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .repcat import Category, IsoClassId, vadd, vsub, vnonneg
from .scalars import Scalar


class StalkSum:
    """A direct sum  (+)_k M_k[k]  with zero summands dropped."""

    __slots__ = ("parts", "period", "_key")

    def __init__(self, parts=None, period: int | None = None):
        if period is not None and period < 1:
            raise ValueError("period must be positive")
        self.period = period
        d = {}
        for k, c in dict(parts or {}).items():
            if c.is_zero():
                continue
            k = k % period if period else int(k)
            if k in d:
                raise ValueError("repeated degree; use StalkSum.build to merge")
            d[k] = c
        self.parts = d
        self._key = (period, tuple(sorted(d.items())))

    @classmethod
    def build(cls, cat: Category, pairs, period: int | None = None) -> "StalkSum":
        """Merge (degree, class) pairs, adding classes that share a degree."""
        acc: dict = {}
        for k, c in pairs:
            k = k % period if period else int(k)
            acc.setdefault(k, []).append(c)
        return cls({k: cat.direct_sum(*cs) for k, cs in acc.items()}, period)

    @classmethod
    def stalk(cls, c: IsoClassId, degree: int = 0, period: int | None = None) -> "StalkSum":
        return cls({degree: c}, period)

    @classmethod
    def from_tuple(cls, classes, period: int, offset: int = 0) -> "StalkSum":
        """(+)_i classes[i][i + offset] in D_m with m = period."""
        return cls({(i + offset) % period: c for i, c in enumerate(classes) if not c.is_zero()}, period)

    def shift(self, k: int) -> "StalkSum":
        return StalkSum({d + k: c for d, c in self.parts.items()}, self.period)

    def plus(self, cat: Category, other: "StalkSum") -> "StalkSum":
        if self.period != other.period:
            raise ValueError("mixing different periods")
        return StalkSum.build(cat, list(self.parts.items()) + list(other.parts.items()), self.period)

    def at(self, k: int, zero: IsoClassId) -> IsoClassId:
        if self.period:
            k %= self.period
        return self.parts.get(k, zero)

    def as_tuple(self, zero: IsoClassId, offset: int = 0) -> tuple:
        """Classes (M_0, ..., M_{m-1}) with self = (+)_i M_i[i + offset]."""
        return tuple(self.at(i + offset, zero) for i in range(self.period))

    def is_zero(self) -> bool:
        return not self.parts

    def items(self):
        return sorted(self.parts.items())

    def grothendieck(self, n: int) -> tuple:
        """Alternating class sum_k (-1)^k dim M_k (bounded case)."""
        out = (0,) * n
        for k, c in self.parts.items():
            s = -1 if k % 2 else 1
            out = tuple(x + s * y for x, y in zip(out, c.dims))
        return out

    def __eq__(self, other):
        return isinstance(other, StalkSum) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"{c}@{k}" for k, c in self.items())

    @classmethod
    def parse(cls, text: str, cat: Category, period: int | None = None) -> "StalkSum":
        text = text.strip()
        if text in ("0", ""):
            return cls({}, period)
        pairs = []
        for part in text.split("+"):
            m = re.fullmatch(r"\s*(d\([\d,\s]*\)#\d+)\s*(?:@\s*(-?\d+))?\s*", part)
            if not m:
                raise ValueError(f"cannot parse stalk summand {part!r}")
            c = cat.check(IsoClassId.parse(m.group(1)))
            pairs.append((int(m.group(2) or 0), c))
        return cls.build(cat, pairs, period)


def brace(cat: Category, x: StalkSum, y: StalkSum) -> Scalar:
    """{X, Y} = prod_{i>0} |Hom(X[i], Y)|^((-1)^i) in D^b(A).

    Uses Hom(A[a], B[b]) = Hom(A,B) when b = a, Ext^1(A,B) when b = a+1 and
    zero otherwise.
    """
    if x.period or y.period:
        raise ValueError("brace is defined for bounded stalk sums")
    e = 0
    for a, ca in x.parts.items():
        for b, cb in y.parts.items():
            i = b - a
            if i > 0:
                e += (-1) ** i * cat.hom_dim(ca, cb)
            if i - 1 > 0:
                e += (-1) ** (i - 1) * cat.ext1_dim(ca, cb)
    return Scalar(mpq(cat.q) ** e, 0, cat.q)


def four_term_F(cat: Category, m1, j, i, m2, m) -> Scalar:
    """F^M_{M1, J[-1], I[1], M2} as a sum over abelian Hall numbers.

    sum_{N,L} a_N a_L / (a_M1 a_M2) g^M1_{J,N} g^M2_{L,I} g^M_{N,L}
    """
    return Scalar(_four_term(cat, m1, j, i, m2, m), 0, cat.q)


def _four_term(cat: Category, m1, j, i, m2, m) -> mpq:
    key = (m1, j, i, m2, m)

    def go():
        a = cat.aut_order
        if vsub(vadd(m1.dims, m2.dims), vadd(i.dims, j.dims)) != m.dims:
            return mpq(0)
        total = mpq(0)
        for (qq, n), g1 in cat.subobject_profile(m1).items():
            if qq != j:
                continue
            for (l, ss), g2 in cat.subobject_profile(m2).items():
                if ss != i:
                    continue
                g3 = cat.hall_number(m, n, l)
                if g3:
                    total += mpq(a(n) * a(l) * g1 * g2 * g3)
        return total / (a(m1) * a(m2))

    return cat._memo("fourF", key, go)


def derived_H_value(cat: Category, i, a_, b, j, m) -> mpq:
    """H^M_{I[1]+A, B+J[-1]} as a rational."""
    key = (i, a_, b, j, m)

    def go():
        f = _four_term(cat, a_, j, i, b, m)
        if not f:
            return mpq(0)
        e = cat.euler_form(j, i) - cat.euler_form(a_, i) - cat.euler_form(j, b)
        aut = cat.aut_order
        return mpq(cat.q) ** e * aut(a_) * aut(b) * aut(i) * aut(j) / aut(m) * f

    return cat._memo("derH", key, go)


def derived_H(cat: Category, i, a_, b, j, m) -> Scalar:
    """Dual derived Hall number H^M_{I[1]+A, B+J[-1]}."""
    return Scalar(derived_H_value(cat, i, a_, b, j, m), 0, cat.q)


def derived_H_profile(cat: Category, i, a_, b, j) -> dict:
    """{M: H^M_{I[1]+A, B+J[-1]}} over the M with nonzero value."""

    def go():
        d = vsub(vadd(a_.dims, b.dims), vadd(i.dims, j.dims))
        out = {}
        if not vnonneg(d):
            return out
        for m in cat.classes(d):
            h = derived_H_value(cat, i, a_, b, j, m)
            if h:
                out[m] = h
        return out

    return cat._memo("derHprof", (i, a_, b, j), go)


def shift_pair_F(cat: Category, m, n, x, y) -> Scalar:
    """Closed form of F^{X[1]+Y}_{M[1], N}.

    q^{-<Y,X>} a_X a_Y / (a_M a_N) sum_L a_L g^M_{L,X} g^N_{Y,L}
    """
    a = cat.aut_order
    total = mpq(0)
    if vadd(n.dims, x.dims) == vadd(m.dims, y.dims):
        for (l, xs), g1 in cat.subobject_profile(m).items():
            if xs != x:
                continue
            g2 = cat.hall_number(n, y, l)
            if g2:
                total += a(l) * g1 * g2
    val = mpq(cat.q) ** (-cat.euler_form(y, x)) * a(x) * a(y) / (a(m) * a(n)) * total
    return Scalar(val, 0, cat.q)

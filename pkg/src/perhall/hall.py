"""Ringel-Hall algebras of a representation category.

Three products on the basis {u_M}:

* untwisted:  u_M * u_N = sum_L |Ext^1(M,N)_L| / |Hom(M,N)| u_L
* twisted:    the same times v^<M,N>
* extended:   basis u_M K_alpha with K_alpha u_N = v^(alpha,N) u_N K_alpha
"""

from __future__ import annotations

from gmpy2 import mpq

from .algebra import Algebra, Element
from .repcat import Category, IsoClassId, vadd, vsub, vnonneg
from .scalars import Scalar, v_pow


def hall_coefficients(cat: Category, m: IsoClassId, n: IsoClassId) -> dict:
    """{L: |Ext^1(m,n)_L| / |Hom(m,n)|} as rationals."""
    h = cat.q ** cat.hom_dim(m, n)
    return {l: mpq(c, h) for l, c in cat.ext_profile(m, n).items()}


class HallAlgebra(Algebra):
    """H(A) (twisted=False) or the twisted algebra H_tw(A)."""

    def __init__(self, cat: Category, twisted: bool = False):
        super().__init__()
        self.cat = cat
        self.q = cat.q
        self.twisted = twisted
        self.unit_key = cat.zero

    def u(self, m: IsoClassId) -> Element:
        return self.basis(self.cat.check(m))

    def _mul_basis(self, m, n):
        tw = v_pow(self.cat.euler_form(m, n), self.q) if self.twisted else Scalar(1, 0, self.q)
        return {l: tw * c for l, c in hall_coefficients(self.cat, m, n).items()}

    def basis_json(self, b):
        return {"class": str(b)}

    def mu(self, m: IsoClassId) -> Element:
        """The divided basis element u_M / a_M."""
        return self.basis(m, mpq(1, self.cat.aut_order(m)))


class ExtendedHallAlgebra(Algebra):
    """H^e_tw(A): basis pairs (M, alpha) meaning u_M K_alpha."""

    def __init__(self, cat: Category):
        super().__init__()
        self.cat = cat
        self.q = cat.q
        self.unit_key = (cat.zero, (0,) * cat.n)
        self._tw = HallAlgebra(cat, twisted=True)

    def u(self, m: IsoClassId) -> Element:
        return self.basis((self.cat.check(m), (0,) * self.cat.n))

    def K(self, alpha) -> Element:
        return self.basis((self.cat.zero, tuple(alpha)))

    def _mul_basis(self, x, y):
        (m, a), (n, b) = x, y
        tw = v_pow(self.cat.symmetric_form(a, n.dims), self.q)
        k = vadd(a, b)
        return {(l, k): tw * c for l, c in self._tw.mul_basis(m, n).items()}

    def basis_str(self, b):
        m, a = b
        if any(a):
            return f"u[{m}]K[{','.join(map(str, a))}]"
        return f"u[{m}]"

    def basis_json(self, b):
        return {"class": str(b[0]), "kappa": list(b[1])}

    def sort_key(self, b):
        return (b[0], b[1])


def green_sides(cat: Category, m, n, m2, n2) -> tuple[Scalar, Scalar]:
    """Both sides of Green's formula for (M, N, M', N').

    left  = a_M a_N a_M' a_N' sum_L g^L_{M,N} g^L_{M',N'} / a_L
    right = sum q^{-<A,B'>} g^M_{A,A'} g^N_{B,B'} g^M'_{A,B} g^N'_{A',B'} a_A a_A' a_B a_B'
    """
    q = cat.q
    a = cat.aut_order
    left = mpq(0)
    if vadd(m.dims, n.dims) == vadd(m2.dims, n2.dims):
        p1 = cat.hall_profile(m, n)
        p2 = cat.hall_profile(m2, n2)
        for l, g in p1.items():
            if l in p2:
                left += mpq(g * p2[l], a(l))
        left *= a(m) * a(n) * a(m2) * a(n2)
    right = mpq(0)
    # g^M_{A,A'} : A quotient, A' sub of M;  g^N_{B,B'} likewise.
    for (qa, sa), g1 in cat.subobject_profile(m).items():
        for (qb, sb), g2 in cat.subobject_profile(n).items():
            g3 = cat.hall_number(m2, qa, qb) if vadd(qa.dims, qb.dims) == m2.dims else 0
            if not g3:
                continue
            g4 = cat.hall_number(n2, sa, sb) if vadd(sa.dims, sb.dims) == n2.dims else 0
            if not g4:
                continue
            e = -cat.euler_form(qa, sb)
            w = mpq(q) ** e * g1 * g2 * g3 * g4 * a(qa) * a(sa) * a(qb) * a(sb)
            right += w
    return Scalar(left, 0, q), Scalar(right, 0, q)


def riedtmann_peng_holds(cat: Category, l, m, n) -> bool:
    """|Ext^1(M,N)_L| a_L == g^L_{M,N} q^{hom(M,N)} a_M a_N."""
    lhs = cat.ext_class_count(m, n, l) * cat.aut_order(l)
    rhs = cat.hall_number(l, m, n) * cat.q ** cat.hom_dim(m, n) * cat.aut_order(m) * cat.aut_order(n)
    return lhs == rhs


def classes_summing_to(cat: Category, total) -> list:
    """Pairs (M, N) of classes with dim M + dim N = total."""
    from .repcat import dim_vectors_upto

    out = []
    for d in dim_vectors_upto(total):
        e = vsub(total, d)
        if not vnonneg(e):
            continue
        for m in cat.classes(d):
            for n in cat.classes(e):
                out.append((m, n))
    return out

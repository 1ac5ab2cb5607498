"""The m-periodic extended derived Hall algebra and the odd-periodic one.

Basis of the extended algebra: pairs (classes, kappa) with classes an m-tuple
of iso classes (the object (+)_i M_i[i]) and kappa an m-tuple of Grothendieck
classes (the monomial prod_i K_{kappa_i, i}).  The odd algebra drops kappa.

Both products sum over tuples (I_i, M_i) of the cyclic exact sequences
attached to a triangle in D_m(A):

    B_i + I_{i-1}[-1] -> M_i -> I_i[1] + A_i,

weighting each by prod_i H^{M_i}_{I_i[1]+A_i, B_i+I_{i-1}[-1]} / a_{I_i}
and a power of v.
"""

from __future__ import annotations

import itertools

from gmpy2 import mpq

from .algebra import Algebra, Element
from .derived import StalkSum, derived_H_profile
from .hall import ExtendedHallAlgebra
from .repcat import Category, IsoClassId, vadd, vmin, vsub
from .scalars import Scalar, v_pow


def cyc(m: int) -> range | list:
    """Index set of sum_{i=1}^{m-1}; for m = 1 it is the single index 1 = 0 mod 1."""
    return range(1, m) if m > 1 else [0]


def cyclic_terms(cat: Category, m: int, a: tuple, b: tuple) -> list:
    """[(M, I, coefficient)] with coefficient prod_i H^{M_i}_{...} / a_{I_i}.

    I_i runs over classes with dim I_i <= min(dim B_i, dim A_{i+1}); every
    other choice gives a zero H-factor.  M_i is forced to have dimension
    A_i + B_i - I_i - I_{i-1}.
    """

    def go():
        cands = []
        for i in range(m):
            bound = vmin(b[i].dims, a[(i + 1) % m].dims)
            cands.append(cat.classes_upto(bound))
        out = []
        for itup in itertools.product(*cands):
            profs = []
            for i in range(m):
                p = derived_H_profile(cat, itup[i], a[i], b[i], itup[i - 1])
                if not p:
                    break
                profs.append(list(p.items()))
            else:
                denom = 1
                for c in itup:
                    denom *= cat.aut_order(c)
                for combo in itertools.product(*profs):
                    coef = mpq(1, denom)
                    for _, h in combo:
                        coef *= h
                    out.append((tuple(mm for mm, _ in combo), itup, coef))
        return out

    return cat._memo("cyclic", (m, a, b), go)


class _PeriodicBase(Algebra):
    def __init__(self, cat: Category, m: int):
        super().__init__()
        if m < 1:
            raise ValueError("period must be positive")
        self.cat, self.m, self.q = cat, m, cat.q
        self.zeros = (cat.zero,) * m
        self._ef = cat.euler_form
        self._sf = cat.symmetric_form

    def _classes(self, classes) -> tuple:
        classes = tuple(classes)
        if len(classes) != self.m:
            raise ValueError(f"expected {self.m} classes")
        for c in classes:
            self.cat.check(c)
        return classes

    def stalk_sum(self, classes, offset: int = 0) -> StalkSum:
        return StalkSum.from_tuple(classes, self.m, offset)

    def _classes_str(self, classes) -> str:
        parts = [f"{c}@{i}" for i, c in enumerate(classes) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


class PeriodicExtendedAlgebra(_PeriodicBase):
    """DH^e_m(A) with basis u_{(+) M_i[i]} prod_i K_{alpha_i, i}."""

    def __init__(self, cat: Category, m: int, ik_form: str = "symmetric"):
        super().__init__(cat, m)
        self.zero_k = ((0,) * cat.n,) * m
        self.unit_key = (self.zeros, self.zero_k)
        if ik_form not in ("symmetric", "euler"):
            raise ValueError(ik_form)
        # pairing between I_i and the K-classes; "euler" is the literal
        # angle-bracket reading, kept only to exhibit its failure.
        self._ik = self._sf if ik_form == "symmetric" else self._ef

    # -- constructors ------------------------------------------------------
    def u(self, c: IsoClassId, i: int = 0) -> Element:
        cl = list(self.zeros)
        cl[i % self.m] = self.cat.check(c)
        return self.basis((tuple(cl), self.zero_k))

    def K(self, alpha, i: int = 0) -> Element:
        ks = list(self.zero_k)
        ks[i % self.m] = tuple(alpha)
        return self.basis((self.zeros, tuple(ks)))

    def monomial(self, classes, kappa=None) -> Element:
        kappa = self.zero_k if kappa is None else tuple(tuple(k) for k in kappa)
        return self.basis((self._classes(classes), kappa))

    # -- forms -------------------------------------------------------------
    def kk_exponent(self, a, b, form=None) -> int:
        """sum_{i=1}^{m-1} (a_i, b_{i-1}) - (a_{m-1}, b_0)."""
        f = form or self._sf
        m = self.m
        return sum(f(a[i], b[i - 1]) for i in cyc(m)) - f(a[m - 1], b[0])

    def k_exchange_exponent(self, a, b) -> int:
        """e with K_a K_b = v^e K_b K_a, namely sum_i (a_i, b_{i-1} - b_{i+1})."""
        m = self.m
        return sum(self._sf(a[i], vsub(b[i - 1], b[(i + 1) % m])) for i in range(m))

    def kfree_terms(self, a: tuple, b: tuple) -> list:
        """[(M, I, coef, v-exponent)] for u_A u_B = sum coef v^e u_M K_I."""

        def go():
            ef, m = self._ef, self.m
            base = sum(ef(a[i], b[i]) for i in range(m))
            out = []
            for mm, ii, coef in cyclic_terms(self.cat, m, a, b):
                e = base
                e += sum(ef(vsub(mm[i].dims, mm[(i + 1) % m].dims), ii[i]) for i in range(m))
                e += sum(ef(ii[i - 1], ii[i]) for i in cyc(m)) - ef(ii[0], ii[m - 1])
                out.append((mm, tuple(c.dims for c in ii), coef, e))
            return out

        return self.cat._memo("kfree", (self.m, a, b), go)

    def _mul_basis(self, x, y):
        (a, al), (b, be) = x, y
        m, q = self.m, self.q
        sf = self._sf
        e0 = sum(sf(al[i], vsub(b[i].dims, b[(i + 1) % m].dims)) for i in range(m))
        e0 += self.kk_exponent(al, be)
        s = tuple(vadd(al[i], be[i]) for i in range(m))
        out = {}
        for mm, ii, coef, e in self.kfree_terms(a, b):
            ee = e + e0 + self.kk_exponent(ii, s, self._ik)
            kap = tuple(vadd(ii[i], s[i]) for i in range(m))
            out[(mm, kap)] = v_pow(ee, q, coef)
        return out

    # -- presentation ------------------------------------------------------
    def basis_str(self, b):
        classes, kappa = b
        s = "u[" + self._classes_str(classes) + "]"
        for i, k in enumerate(kappa):
            if any(k):
                s += f"K[{','.join(map(str, k))}]@{i}"
        return s

    def basis_json(self, b):
        return {"classes": [str(c) for c in b[0]], "kappa": [list(k) for k in b[1]]}

    def sort_key(self, b):
        return (sum(c.total for c in b[0]), b[0], b[1])

    # -- degree, straightening, embeddings -----------------------------------
    def delta(self, b) -> int:
        """hom(A_0, A_{m-1}) + ext(A_0, A_0) + ext(A_{m-1}, A_{m-1}); needs m > 2."""
        if self.m <= 2:
            raise ValueError("the degree is defined for m > 2")
        a0, al = b[0][0], b[0][self.m - 1]
        c = self.cat
        return c.hom_dim(a0, al) + c.ext1_dim(a0, a0) + c.ext1_dim(al, al)

    def ordered_product(self, b) -> Element:
        """u_{A_0[0]} u_{A_1[1]} ... u_{A_{m-1}[m-1]} prod_i K_{alpha_i, i}."""
        classes, kappa = b
        out = self.one()
        for i, c in enumerate(classes):
            if not c.is_zero():
                out = out * self.u(c, i)
        return out * self.basis((self.zeros, kappa))

    def straighten(self, x: Element, trace: list | None = None) -> dict:
        """Coordinates of x over the ordered-product basis.

        Returns {b: c} with x = sum_b c * ordered_product(b).  Lowest degree
        terms are processed first, ties broken by basis order.  When ``trace``
        is a list, (b, [deltas of the other terms of ordered_product(b)]) is
        appended for each expansion used.
        """
        if self.m <= 2:
            raise ValueError("straightening by degree needs m > 2; use mu_rank for m <= 2")
        rem = dict(x.terms)
        coords: dict = {}
        while rem:
            b = min(rem, key=lambda k: (self.delta(k), self.sort_key(k)))
            c = rem[b]
            p = self.ordered_product(b)
            if p.coefficient(b) != 1:
                raise AssertionError(f"ordered product of {self.basis_str(b)} lacks its leading term")
            if trace is not None:
                trace.append((b, [self.delta(k) for k in p.terms if k != b]))
            coords[b] = coords.get(b, Scalar(0, 0, self.q)) + c
            if not coords[b]:
                del coords[b]
            for k, v in p.terms.items():
                nv = rem.get(k, Scalar(0, 0, self.q)) - c * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return coords

    def unstraighten(self, coords: dict) -> Element:
        out = self.zero()
        for b, c in coords.items():
            out = out + self.ordered_product(b) * c
        return out

    def lambda_embed(self, i: int, x: Element) -> Element:
        """u_M K_alpha -> u_{M[i]} K_{alpha, i} on an element of H^e_tw(A)."""
        i %= self.m
        terms = {}
        for (c, a), coef in x.terms.items():
            cl = list(self.zeros)
            ks = list(self.zero_k)
            cl[i], ks[i] = c, tuple(a)
            terms[(tuple(cl), tuple(ks))] = coef
        return self.element(terms)

    def mu_tensor(self, xs) -> Element:
        """prod_i lambda_i(x_i), multiplied left to right."""
        if len(xs) != self.m:
            raise ValueError(f"expected {self.m} factors")
        out = self.one()
        for i, x in enumerate(xs):
            out = out * self.lambda_embed(i, x)
        return out

    def extended_hall(self) -> ExtendedHallAlgebra:
        return ExtendedHallAlgebra(self.cat)


class OddPeriodicAlgebra(_PeriodicBase):
    """DH_m(A) for odd m; basis u_{(+) M_i[i]} keyed by the class tuple.

    ``allow_even`` runs the same formula for even m; the result is not
    associative and exists only to exhibit that.
    """

    def __init__(self, cat: Category, m: int, allow_even: bool = False):
        if m % 2 == 0 and not allow_even:
            raise ValueError("odd period required")
        super().__init__(cat, m)
        self.unit_key = self.zeros

    def u(self, c: IsoClassId, i: int = 0) -> Element:
        cl = list(self.zeros)
        cl[i % self.m] = self.cat.check(c)
        return self.basis(tuple(cl))

    def monomial(self, classes) -> Element:
        return self.basis(self._classes(classes))

    def twist(self, a, b) -> int:
        """sum_i < sum_k (-1)^k A_{i+k}, B_i >."""
        m = self.m
        e = 0
        for i in range(m):
            alt = (0,) * self.cat.n
            for k in range(m):
                d = a[(i + k) % m].dims
                alt = vadd(alt, d) if k % 2 == 0 else vsub(alt, d)
            e += self._ef(alt, b[i])
        return e

    def _mul_basis(self, a, b):
        tw = self.twist(a, b)
        out: dict = {}
        for mm, _, coef in cyclic_terms(self.cat, self.m, a, b):
            out[mm] = out.get(mm, mpq(0)) + coef
        return {mm: v_pow(tw, self.q, c) for mm, c in out.items() if c}

    def basis_str(self, b):
        return "u[" + self._classes_str(b) + "]"

    def basis_json(self, b):
        return {"classes": [str(c) for c in b]}

    def sort_key(self, b):
        return (sum(c.total for c in b), b)


def triple_sum_sides(cat: Category, m: int, a, b, c) -> tuple[dict, dict]:
    """Both triple sums of the odd-period associativity identity, per M-tuple.

    left[M]  = sum_{I,X,J} q^{-sum <I_{i-1}, C_i>} prod H^{X_i}_{I_i[1]+A_i, B_i+I_{i-1}[-1]}/a_{I_i}
                                                   * H^{M_i}_{J_i[1]+X_i, C_i+J_{i-1}[-1]}/a_{J_i}
    right[M] = sum_{I,Y,J} q^{-sum <A_i, J_i>}     prod H^{M_i}_{I_i[1]+A_i, Y_i+I_{i-1}[-1]}/a_{I_i}
                                                   * H^{Y_i}_{J_i[1]+B_i, C_i+J_{i-1}[-1]}/a_{J_i}
    """
    if m % 2 == 0:
        raise ValueError("odd period required")
    q = mpq(cat.q)
    ef = cat.euler_form
    left: dict = {}
    for x, ii, c1 in cyclic_terms(cat, m, a, b):
        w = q ** (-sum(ef(ii[i - 1], c[i]) for i in range(m))) * c1
        for mm, _, c2 in cyclic_terms(cat, m, x, c):
            left[mm] = left.get(mm, mpq(0)) + w * c2
    right: dict = {}
    for y, jj, c2 in cyclic_terms(cat, m, b, c):
        w = q ** (-sum(ef(a[i], jj[i]) for i in range(m))) * c2
        for mm, _, c1 in cyclic_terms(cat, m, a, y):
            right[mm] = right.get(mm, mpq(0)) + w * c1
    clean = lambda d: {k: Scalar(v, 0, cat.q) for k, v in d.items() if v}  # noqa: E731
    return clean(left), clean(right)


def triple_sum_value(cat: Category, m: int, a, b, c, mm) -> tuple[Scalar, Scalar]:
    left, right = triple_sum_sides(cat, m, a, b, c)
    zero = Scalar(0, 0, cat.q)
    return left.get(tuple(mm), zero), right.get(tuple(mm), zero)


def class_tuples(cat: Category, m: int, max_total: int) -> list:
    """All m-tuples of classes whose dimensions add up to at most max_total."""
    by_total = cat.classes_of_total(max_total)
    out = []

    def rec(prefix, budget):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for c in by_total:
            if c.total <= budget:
                rec(prefix + [c], budget - c.total)

    rec([], max_total)
    return out


def class_tuples_per_degree(cat: Category, m: int, bound) -> list:
    """All m-tuples of classes with every dimension vector <= bound."""
    cls = cat.classes_upto(bound)
    return list(itertools.product(cls, repeat=m))


def scalar_rank(rows: list) -> int:
    """Rank of a matrix over Q(v) given as a list of {column: Scalar} rows."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv_row = rows.pop()
        if not piv_row:
            continue
        col = min(piv_row)
        inv = piv_row[col].inv()
        rank += 1
        nxt = []
        for r in rows:
            c = r.get(col)
            if c:
                f = c * inv
                for k, v in piv_row.items():
                    nv = r.get(k, Scalar(0, 0, v.q)) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            if r:
                nxt.append(r)
        rows = nxt
    return rank


def mu_truncated_basis(alg: PeriodicExtendedAlgebra, weight: int) -> list:
    """Basis keys (classes, kappa) with kappa zero off degree m-1, kappa_{m-1} >= 0
    and sum_i dim A_i + 2 |kappa_{m-1}| <= weight.

    The multiplication map sends the matching tensors into the span of this
    same set, so its matrix there is square.
    """
    cat, m = alg.cat, alg.m
    out = []
    from .repcat import dim_vectors_upto

    for k in dim_vectors_upto((weight // 2,) * cat.n):
        w = weight - 2 * sum(k)
        if w < 0:
            continue
        kappa = list(alg.zero_k)
        kappa[m - 1] = tuple(k)
        for cl in class_tuples(cat, m, w):
            out.append((cl, tuple(kappa)))
    return sorted(out, key=alg.sort_key)


def mu_matrix(alg: PeriodicExtendedAlgebra, weight: int) -> tuple[list, list]:
    """(keys, rows): row b holds the coordinates of mu(u_{A_0}K_{a_0} x ... ) for key b."""
    keys = mu_truncated_basis(alg, weight)
    index = {b: j for j, b in enumerate(keys)}
    ext = alg.extended_hall()
    rows = []
    for classes, kappa in keys:
        xs = [ext.basis((c, k)) for c, k in zip(classes, kappa)]
        img = alg.mu_tensor(xs)
        row = {}
        for b, c in img.terms.items():
            if b not in index:
                raise AssertionError(f"{alg.basis_str(b)} escapes the truncation")
            row[index[b]] = c
        rows.append(row)
    return keys, rows


def mu_rank(alg: PeriodicExtendedAlgebra, weight: int) -> tuple[int, int]:
    """(rank, size) of the multiplication map on the truncated tensor basis."""
    keys, rows = mu_matrix(alg, weight)
    return scalar_rank(rows), len(keys)

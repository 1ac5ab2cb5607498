"""Representations of a finite acyclic quiver over F_q.

A :class:`Category` fixes a quiver and a prime q and answers every counting
question the Hall algebras need: isomorphism classes, Hom and Ext^1
dimensions, automorphism orders, Hall numbers and extension counts.  All
answers are memoized per category.
"""

from __future__ import annotations

import itertools
import pickle
import re
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from . import ffla
from .ffla import BudgetExceeded  # noqa: F401  (re-exported)

DimVector = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# small vector helpers on dimension vectors / Grothendieck classes


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vleq(a, b):
    return all(x <= y for x, y in zip(a, b))


def vmin(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def vnonneg(a):
    return all(x >= 0 for x in a)


def dim_vectors_upto(bound):
    return list(itertools.product(*(range(b + 1) for b in bound)))


# ---------------------------------------------------------------------------


class Quiver:
    """Vertices 0..n-1 and a list of arrows (source, target); no oriented cycles."""

    def __init__(self, n: int, arrows=(), name: str | None = None):
        self.n = int(n)
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"arrow {s}->{t} leaves the vertex range")
        self._check_acyclic()
        self.name = name or self.spec()

    def _check_acyclic(self):
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [i for i in range(self.n) if indeg[i] == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for s, t in self.arrows:
                if s == i:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        if seen != self.n:
            raise ValueError("quiver has an oriented cycle")

    def spec(self) -> str:
        return f"{self.n}:" + ",".join(f"{s}-{t}" for s, t in self.arrows)

    @classmethod
    def parse(cls, text: str) -> "Quiver":
        """'A1', 'A3' (linear 0->1->2) or 'n:s-t,s-t,...'."""
        text = text.strip()
        m = re.fullmatch(r"[Aa](\d+)", text)
        if m:
            n = int(m.group(1))
            if n < 1:
                raise ValueError("A_n needs n >= 1")
            return cls(n, [(i, i + 1) for i in range(n - 1)], name=f"A{n}")
        m = re.fullmatch(r"(\d+):(.*)", text)
        if not m:
            raise ValueError(f"cannot parse quiver {text!r}")
        n = int(m.group(1))
        arrows = []
        body = m.group(2).strip()
        if body:
            for part in body.split(","):
                mm = re.fullmatch(r"\s*(\d+)\s*-\s*>?\s*(\d+)\s*", part)
                if not mm:
                    raise ValueError(f"cannot parse arrow {part!r}")
                arrows.append((int(mm.group(1)), int(mm.group(2))))
        return cls(n, arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.n, self.arrows) == (other.n, other.arrows)

    def __hash__(self):
        return hash((self.n, self.arrows))

    def __repr__(self):
        return f"Quiver({self.name})"

    def euler_form(self, a, b) -> int:
        return sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in self.arrows)

    def symmetric_form(self, a, b) -> int:
        return self.euler_form(a, b) + self.euler_form(b, a)


@total_ordering
@dataclass(frozen=True)
class IsoClassId:
    dims: tuple
    index: int

    def __str__(self):
        return "d(" + ",".join(map(str, self.dims)) + f")#{self.index}"

    __repr__ = __str__

    def __lt__(self, other):
        return (sum(self.dims), self.dims, self.index) < (sum(other.dims), other.dims, other.index)

    @property
    def total(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    @classmethod
    def parse(cls, text: str) -> "IsoClassId":
        m = re.fullmatch(r"\s*d\(([\d,\s]*)\)#(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse class label {text!r}")
        dims = tuple(int(x) for x in m.group(1).split(",") if x.strip())
        return cls(dims, int(m.group(2)))


class Rep:
    """Dimension vector plus one matrix per arrow (target dim x source dim)."""

    __slots__ = ("dims", "mats")

    def __init__(self, dims, mats):
        self.dims = tuple(int(d) for d in dims)
        self.mats = tuple(np.asarray(m, dtype=np.int64) for m in mats)

    def key(self) -> tuple:
        return tuple(int(x) for m in self.mats for x in m.ravel())

    def __repr__(self):
        return f"Rep({self.dims}, {[m.tolist() for m in self.mats]})"


def check_rep(quiver: Quiver, rep: Rep, q: int) -> None:
    if len(rep.dims) != quiver.n or len(rep.mats) != len(quiver.arrows):
        raise ValueError("representation does not match the quiver")
    for (s, t), m in zip(quiver.arrows, rep.mats):
        if m.shape != (rep.dims[t], rep.dims[s]):
            raise ValueError(f"arrow matrix of shape {m.shape}, expected {(rep.dims[t], rep.dims[s])}")
        if m.size and (m.min() < 0 or m.max() >= q):
            raise ValueError("matrix entries must lie in [0, q)")


def rep_from_key(quiver: Quiver, dims, key) -> Rep:
    mats, pos = [], 0
    for s, t in quiver.arrows:
        k = dims[t] * dims[s]
        mats.append(np.array(key[pos : pos + k], dtype=np.int64).reshape(dims[t], dims[s]))
        pos += k
    return Rep(dims, mats)


def direct_sum(quiver: Quiver, *reps: Rep) -> Rep:
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(quiver.n))
    mats = [ffla.block_diag(*(r.mats[a] for r in reps)) for a in range(len(quiver.arrows))]
    return Rep(dims, mats)


def intertwiner_matrix(quiver: Quiver, m: Rep, n: Rep, q: int) -> np.ndarray:
    """Matrix of f -> (f_t M_a - N_a f_s)_a on row-major vectorized f = (f_i)_i.

    Variables: f_i in Mat(n_i x m_i), concatenated over vertices.  Equations:
    one block Mat(n_t x m_s) per arrow a: s -> t.
    """
    voff, pos = [], 0
    for i in range(quiver.n):
        voff.append(pos)
        pos += n.dims[i] * m.dims[i]
    nvars = pos
    eoff, pos = [], 0
    for s, t in quiver.arrows:
        eoff.append(pos)
        pos += n.dims[t] * m.dims[s]
    out = ffla.zeros(pos, nvars)
    for a, (s, t) in enumerate(quiver.arrows):
        r0 = eoff[a]
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        ma, na = m.mats[a], n.mats[a]
        # vec(f_t M_a) = (I_{n_t} kron M_a^T) vec(f_t)
        if n.dims[t] * m.dims[t]:
            out[r0 : r0 + rows, voff[t] : voff[t] + n.dims[t] * m.dims[t]] += np.kron(
                ffla.eye(n.dims[t]), ma.T
            )
        # vec(N_a f_s) = (N_a kron I_{m_s}) vec(f_s)
        if n.dims[s] * m.dims[s]:
            out[r0 : r0 + rows, voff[s] : voff[s] + n.dims[s] * m.dims[s]] -= np.kron(
                na, ffla.eye(m.dims[s])
            )
    return out % q


def unflatten_map(m_dims, n_dims, vec) -> list[np.ndarray]:
    """Split a vectorized intertwiner into per-vertex matrices."""
    out, pos = [], 0
    for mi, ni in zip(m_dims, n_dims):
        out.append(np.asarray(vec[pos : pos + mi * ni], dtype=np.int64).reshape(ni, mi))
        pos += mi * ni
    return out


def subquotient(quiver: Quiver, rep: Rep, big, small, q: int) -> Rep:
    """The representation big/small for subrepresentations small <= big <= rep.

    big[i], small[i] are matrices whose columns are bases of subspaces of
    rep_i, with span(small[i]) inside span(big[i]).
    """
    comps, bases = [], []
    for i in range(quiver.n):
        c = ffla.extend_basis(small[i], big[i], q)
        comps.append(c)
        bases.append(np.concatenate([small[i], c], axis=1))
    dims = tuple(c.shape[1] for c in comps)
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        img = (rep.mats[a] @ comps[s]) % q
        coords = ffla.solve_columns(bases[t], img, q)
        mats.append(coords[small[t].shape[1] :, :] % q)
    return Rep(dims, mats)


def _closed(quiver: Quiver, rep: Rep, sub, q: int) -> bool:
    for a, (s, t) in enumerate(quiver.arrows):
        if sub[s].shape[1] == 0:
            continue
        img = (rep.mats[a] @ sub[s]) % q
        if not img.any():
            continue
        if sub[t].shape[1] == 0:
            return False
        if ffla.rank(np.concatenate([sub[t], img], axis=1), q) != sub[t].shape[1]:
            return False
    return True


class _Table:
    """All representations of one dimension vector, split into GL-orbits."""

    def __init__(self, quiver: Quiver, dims, q: int):
        self.dims = dims
        shapes = [(dims[t], dims[s]) for s, t in quiver.arrows]
        nent = sum(r * c for r, c in shapes)
        total = q**nent
        ffla.check_budget(f"representations of dimension {dims}", total)
        self.nent = nent
        self.weights = np.array([q ** (nent - 1 - k) for k in range(nent)], dtype=np.int64)
        idx = np.arange(total, dtype=np.int64)
        pts = np.empty((total, nent), dtype=np.int64)
        rem = idx.copy()
        for k in range(nent - 1, -1, -1):
            pts[:, k] = rem % q
            rem //= q
        label = idx.copy()
        perms = []
        offs = np.cumsum([0] + [r * c for r, c in shapes])
        for v in range(quiver.n):
            for g in ffla.gl_generators(dims[v], q):
                ginv = ffla.inverse(g, q)
                lin = np.eye(nent, dtype=np.int64)
                for a, (s, t) in enumerate(quiver.arrows):
                    r, c = shapes[a]
                    if r * c == 0:
                        continue
                    left = g if t == v else ffla.eye(r)
                    right = ginv if s == v else ffla.eye(c)
                    # vec(L X R) = (L kron R^T) vec(X)
                    lin[offs[a] : offs[a + 1], offs[a] : offs[a + 1]] = np.kron(left, right.T) % q
                img = (pts @ lin.T) % q
                perms.append(img @ self.weights if nent else idx.copy())
        changed = True
        while changed:
            changed = False
            for p in perms:
                new = np.minimum(label, label[p])
                new = new[new]
                if not np.array_equal(new, label):
                    label = new
                    changed = True
        self.label = label
        reps = np.unique(label)
        self.rep_index = [int(r) for r in reps]
        pos = np.full(total, -1, dtype=np.int64)
        pos[reps] = np.arange(len(reps))
        self.class_of = pos[label]
        self.orbit_size = np.bincount(self.class_of, minlength=len(reps))
        self.pts = pts

    def key_index(self, key) -> int:
        if not self.nent:
            return 0
        return int(np.dot(np.asarray(key, dtype=np.int64), self.weights))

    def rep_key(self, k: int) -> tuple:
        return tuple(int(x) for x in self.pts[self.rep_index[k]])


class Category:
    """Finite-dimensional representations of ``quiver`` over F_q."""

    def __init__(self, quiver: Quiver, q: int):
        self.quiver = quiver
        self.q = ffla.check_field(q)
        self.n = quiver.n
        self._tables: dict = {}
        self._cache: dict = {}
        self.zero = IsoClassId((0,) * self.n, 0)

    def __repr__(self):
        return f"Category({self.quiver.name}, q={self.q})"

    # -- memo helpers ------------------------------------------------------
    def _memo(self, kind, key, fn):
        d = self._cache.setdefault(kind, {})
        try:
            return d[key]
        except KeyError:
            val = d[key] = fn()
            return val

    def save_cache(self, path) -> None:
        with open(path, "wb") as fh:
            pickle.dump((self.quiver.spec(), self.q, self._cache), fh)

    def load_cache(self, path) -> None:
        with open(path, "rb") as fh:
            spec, q, cache = pickle.load(fh)
        if spec != self.quiver.spec() or q != self.q:
            raise ValueError("cache file belongs to a different category")
        for kind, d in cache.items():
            self._cache.setdefault(kind, {}).update(d)

    # -- iso classes ---------------------------------------------------------
    def _table(self, dims) -> _Table:
        dims = tuple(dims)
        t = self._tables.get(dims)
        if t is None:
            if len(dims) != self.n or not vnonneg(dims):
                raise ValueError(f"bad dimension vector {dims}")
            t = self._tables[dims] = _Table(self.quiver, dims, self.q)
        return t

    def classes(self, dims) -> list[IsoClassId]:
        """All iso classes of dimension vector dims, in canonical order."""
        dims = tuple(dims)
        return [IsoClassId(dims, k) for k in range(len(self._table(dims).rep_index))]

    enumerate_classes = classes

    def classes_upto(self, bound) -> list[IsoClassId]:
        out = []
        for d in dim_vectors_upto(bound):
            out.extend(self.classes(d))
        return sorted(out)

    def classes_of_total(self, total: int) -> list[IsoClassId]:
        out = []
        for d in dim_vectors_upto((total,) * self.n):
            if sum(d) <= total:
                out.extend(self.classes(d))
        return sorted(out)

    def rep(self, c: IsoClassId) -> Rep:
        t = self._table(c.dims)
        if not 0 <= c.index < len(t.rep_index):
            raise ValueError(f"no class {c}")
        return rep_from_key(self.quiver, c.dims, t.rep_key(c.index))

    def check(self, c: IsoClassId) -> IsoClassId:
        self.rep(c)
        return c

    def canonical_id(self, rep: Rep) -> IsoClassId:
        check_rep(self.quiver, rep, self.q)
        t = self._table(rep.dims)
        return IsoClassId(rep.dims, int(t.class_of[t.key_index(rep.key())]))

    def orbit_size(self, c: IsoClassId) -> int:
        return int(self._table(c.dims).orbit_size[c.index])

    def direct_sum(self, *cs: IsoClassId) -> IsoClassId:
        cs = [c for c in cs if not c.is_zero()]
        if not cs:
            return self.zero
        if len(cs) == 1:
            return cs[0]
        return self._memo("sum", tuple(sorted(cs)), lambda: self.canonical_id(
            direct_sum(self.quiver, *(self.rep(c) for c in cs))))

    # -- forms -----------------------------------------------------------
    def euler_form(self, a, b) -> int:
        return self.quiver.euler_form(_dv(a), _dv(b))

    def symmetric_form(self, a, b) -> int:
        return self.quiver.symmetric_form(_dv(a), _dv(b))

    # -- Hom / Ext ---------------------------------------------------------
    def _hom_ext(self, m: IsoClassId, n: IsoClassId):
        def go():
            phi = intertwiner_matrix(self.quiver, self.rep(m), self.rep(n), self.q)
            r = ffla.rank(phi, self.q)
            return phi.shape[1] - r, phi.shape[0] - r

        return self._memo("homext", (m, n), go)

    def hom_dim(self, m: IsoClassId, n: IsoClassId) -> int:
        return self._hom_ext(m, n)[0]

    def ext1_dim(self, m: IsoClassId, n: IsoClassId) -> int:
        return self._hom_ext(m, n)[1]

    def hom_basis(self, m: IsoClassId, n: IsoClassId) -> np.ndarray:
        phi = intertwiner_matrix(self.quiver, self.rep(m), self.rep(n), self.q)
        return ffla.kernel_basis(phi, self.q)

    # -- automorphisms -------------------------------------------------------
    def aut_order(self, c: IsoClassId) -> int:
        """|Aut(c)| by orbit-stabilizer inside the product of GL(d_i)."""
        g = 1
        for d in c.dims:
            g *= ffla.gl_order(d, self.q)
        return g // self.orbit_size(c)

    def aut_order_bruteforce(self, c: IsoClassId) -> int:
        """|Aut(c)| by enumerating End(c) and testing invertibility."""
        basis = self.hom_basis(c, c)
        ffla.check_budget("endomorphisms", self.q ** basis.shape[1])
        count = 0
        for coef in itertools.product(range(self.q), repeat=basis.shape[1]):
            vec = (basis @ np.array(coef, dtype=np.int64)) % self.q if coef else basis[:, :0].sum(1)
            fs = unflatten_map(c.dims, c.dims, vec)
            if all(ffla.rank(f, self.q) == f.shape[0] for f in fs):
                count += 1
        return count

    # -- subobjects ----------------------------------------------------------
    def subobject_profile(self, l: IsoClassId) -> dict:
        """{(quotient class, subobject class): number of such subobjects of l}."""

        def go():
            rep = self.rep(l)
            q = self.q
            per_vertex = []
            size = 1
            for d in l.dims:
                subs = [b.T.copy() for k in range(d + 1) for b in ffla.enumerate_subspaces(d, k, q)]
                per_vertex.append(subs)
                size *= len(subs)
            ffla.check_budget(f"subspace tuples of {l}", size)
            full = [ffla.eye(d) for d in l.dims]
            zero = [ffla.zeros(d, 0) for d in l.dims]
            prof: dict = {}
            for sub in itertools.product(*per_vertex):
                if not _closed(self.quiver, rep, sub, q):
                    continue
                s = self.canonical_id(subquotient(self.quiver, rep, sub, zero, q))
                o = self.canonical_id(subquotient(self.quiver, rep, full, sub, q))
                prof[(o, s)] = prof.get((o, s), 0) + 1
            return prof

        return self._memo("subprof", l, go)

    def hall_number(self, l: IsoClassId, m: IsoClassId, n: IsoClassId) -> int:
        """g^l_{m,n}: subobjects X of l with X = n and l/X = m."""
        if vadd(m.dims, n.dims) != l.dims:
            return 0
        return self.subobject_profile(l).get((m, n), 0)

    def hall_profile(self, m: IsoClassId, n: IsoClassId) -> dict:
        """{l: g^l_{m,n}} over all l with nonzero Hall number."""

        def go():
            out = {}
            for l in self.classes(vadd(m.dims, n.dims)):
                g = self.hall_number(l, m, n)
                if g:
                    out[l] = g
            return out

        return self._memo("hallprof", (m, n), go)

    # -- extensions ----------------------------------------------------------
    def _ext_data(self, m: IsoClassId, n: IsoClassId):
        rm, rn = self.rep(m), self.rep(n)
        phi = intertwiner_matrix(self.quiver, rm, rn, self.q)
        img = ffla.column_space(phi, self.q)
        comp = ffla.extend_basis(img, ffla.eye(phi.shape[0]), self.q)
        return rm, rn, comp

    def ext_middle(self, m: IsoClassId, n: IsoClassId, e) -> IsoClassId:
        """Middle term E of the extension 0 -> n -> E -> m -> 0 with cocycle e.

        e is a flat vector in the target of the intertwiner map, i.e. one
        n_t x m_s block per arrow s -> t.
        """
        rm, rn = self.rep(m), self.rep(n)
        e = np.asarray(e, dtype=np.int64) % self.q
        mats, pos = [], 0
        for a, (s, t) in enumerate(self.quiver.arrows):
            k = rn.dims[t] * rm.dims[s]
            ea = e[pos : pos + k].reshape(rn.dims[t], rm.dims[s])
            pos += k
            top = np.concatenate([rn.mats[a], ea], axis=1)
            bot = np.concatenate([ffla.zeros(rm.dims[t], rn.dims[s]), rm.mats[a]], axis=1)
            mats.append(np.concatenate([top, bot], axis=0))
        if pos != e.size:
            raise ValueError("cocycle has the wrong length")
        return self.canonical_id(Rep(vadd(rn.dims, rm.dims), mats))

    def ext_profile(self, m: IsoClassId, n: IsoClassId) -> dict:
        """{L: |Ext^1(m, n)_L|}, realizing every class of Ext^1(m, n)."""

        def go():
            _, _, comp = self._ext_data(m, n)
            k = comp.shape[1]
            ffla.check_budget(f"Ext^1({m},{n})", self.q**k)
            out: dict = {}
            for coef in itertools.product(range(self.q), repeat=k):
                e = (comp @ np.array(coef, dtype=np.int64)) % self.q if k else comp.sum(1)
                l = self.ext_middle(m, n, e)
                out[l] = out.get(l, 0) + 1
            return out

        return self._memo("extprof", (m, n), go)

    def ext_class_count(self, m: IsoClassId, n: IsoClassId, l: IsoClassId) -> int:
        return self.ext_profile(m, n).get(l, 0)


def _dv(x):
    return x.dims if isinstance(x, IsoClassId) else tuple(x)


_registry: dict = {}


def category(quiver, q: int) -> Category:
    """Shared Category per (quiver, q) so memo tables are reused."""
    if isinstance(quiver, str):
        quiver = Quiver.parse(quiver)
    key = (quiver, q)
    c = _registry.get(key)
    if c is None:
        c = _registry[key] = Category(quiver, q)
    return c

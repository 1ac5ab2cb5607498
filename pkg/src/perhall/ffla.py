"""Dense linear algebra over prime fields F_q.

Matrices are numpy int64 arrays with entries reduced into [0, q).  Everything
here is small and exact; there is no attempt at asymptotically fast
elimination.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

DEFAULT_BUDGET = 2**24

_budget = DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the budget."""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"oracle out of budget: {what} needs {size} > {budget}")
        self.size = size
        self.budget = budget


def get_budget() -> int:
    return _budget


def set_budget(budget: int) -> int:
    """Set the global enumeration budget, returning the previous value."""
    global _budget
    if budget < 1:
        raise ValueError("budget must be positive")
    old, _budget = _budget, int(budget)
    return old


def check_budget(what: str, size: int) -> None:
    if size > _budget:
        raise BudgetExceeded(what, size, _budget)


@lru_cache(maxsize=None)
def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def check_field(q: int) -> int:
    q = int(q)
    if not is_prime(q):
        raise ValueError(f"field order {q} is not prime")
    return q


@lru_cache(maxsize=None)
def _inverses(q: int) -> tuple[int, ...]:
    return (0,) + tuple(pow(x, -1, q) for x in range(1, q))


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    if q == 2:
        return 1
    factors = [p for p in range(2, q) if (q - 1) % p == 0 and is_prime(p)]
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise ValueError(q)


def mat(rows, q: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build a reduced int64 matrix from nested lists."""
    a = np.array(rows, dtype=np.int64)
    if shape is not None:
        a = a.reshape(shape)
    return a % q


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def rref_pivots(m: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form together with the list of pivot columns."""
    a = np.array(m, dtype=np.int64) % q
    rows, cols = a.shape
    inv = _inverses(q)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        s = inv[int(a[r, c])]
        if s != 1:
            a[r] = (a[r] * s) % q
        col = a[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: np.ndarray, q: int) -> tuple[np.ndarray, int]:
    a, piv = rref_pivots(m, q)
    return a, len(piv)


def rank(m: np.ndarray, q: int) -> int:
    if m.size == 0:
        return 0
    return len(rref_pivots(m, q)[1])


def kernel_basis(m: np.ndarray, q: int) -> np.ndarray:
    """Columns form a basis of the right null space of m."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return eye(cols)
    a, piv = rref_pivots(m, q)
    free = [c for c in range(cols) if c not in piv]
    k = zeros(cols, len(free))
    for j, f in enumerate(free):
        k[f, j] = 1
        for i, p in enumerate(piv):
            k[p, j] = (-a[i, f]) % q
    return k


def column_space(m: np.ndarray, q: int) -> np.ndarray:
    """An independent set of columns spanning the column space of m."""
    if m.shape[1] == 0:
        return m.copy()
    _, piv = rref_pivots(m, q)
    return m[:, piv] % q


def extend_basis(sub: np.ndarray, amb: np.ndarray, q: int) -> np.ndarray:
    """Columns of amb (in order) that extend the independent columns of sub.

    The result C satisfies span(sub | C) = span(sub | amb) with sub | C
    independent.  Greedy in column order, hence deterministic.
    """
    k = sub.shape[1]
    both = np.concatenate([sub, amb], axis=1) if k else amb
    _, piv = rref_pivots(both, q)
    chosen = [p - k for p in piv if p >= k]
    return amb[:, chosen] % q


def solve_columns(b: np.ndarray, w: np.ndarray, q: int) -> np.ndarray:
    """Solve b @ x = w for x, where b has independent columns.

    Raises ValueError if some column of w is not in the span of b.
    """
    k = b.shape[1]
    if w.shape[1] == 0:
        return zeros(k, 0)
    if k == 0:
        if np.any(w % q):
            raise ValueError("inconsistent system")
        return zeros(0, w.shape[1])
    a, piv = rref_pivots(np.concatenate([b, w], axis=1), q)
    if piv[:k] != list(range(k)) or (len(piv) > k):
        raise ValueError("inconsistent system or dependent basis")
    return a[:k, k:] % q


def inverse(m: np.ndarray, q: int) -> np.ndarray:
    n = m.shape[0]
    return solve_columns(m, eye(n), q)


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def enumerate_matrices(r: int, c: int, q: int):
    """All q^(r*c) r-by-c matrices, lexicographic in row-major entries."""
    check_budget(f"{r}x{c} matrices over F_{q}", q ** (r * c))
    for entries in itertools.product(range(q), repeat=r * c):
        yield np.array(entries, dtype=np.int64).reshape(r, c)


def enumerate_vectors(n: int, q: int):
    """All vectors of F_q^n as tuples, lexicographic."""
    check_budget(f"vectors of F_{q}^{n}", q**n)
    return itertools.product(range(q), repeat=n)


def enumerate_subspaces(n: int, k: int, q: int):
    """k-dimensional subspaces of F_q^n, each as its k-by-n RREF basis.

    Ordered by pivot set, then lexicographically by the free entries.
    """
    for piv in itertools.combinations(range(n), k):
        free = [(i, c) for i, p in enumerate(piv) for c in range(p + 1, n) if c not in piv]
        for vals in itertools.product(range(q), repeat=len(free)):
            b = zeros(k, n)
            for i, p in enumerate(piv):
                b[i, p] = 1
            for (i, c), x in zip(free, vals):
                b[i, c] = x
            yield b


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_generators(n: int, q: int) -> list[np.ndarray]:
    """A generating set of GL_n(F_q): elementary transvections and a diagonal."""
    gens = []
    if n == 0:
        return gens
    for i in range(n):
        for j in range(n):
            if i != j:
                g = eye(n)
                g[i, j] = 1
                gens.append(g)
    g = eye(n)
    g[0, 0] = primitive_root(q)
    if q != 2:
        gens.append(g)
    return gens


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out

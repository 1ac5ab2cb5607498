import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perhall import ffla


def matrices(q, max_side=4):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c)
            )
        )
    )


@pytest.mark.parametrize("q", [2, 3, 5])
def test_gl_order_small(q):
    assert ffla.gl_order(1, q) == q - 1
    assert ffla.gl_order(2, q) == (q * q - 1) * (q * q - q)


def test_gl_order_matches_enumeration():
    for q in (2, 3):
        count = sum(1 for m in ffla.enumerate_matrices(2, 2, q) if ffla.rank(m, q) == 2)
        assert count == ffla.gl_order(2, q)


@pytest.mark.parametrize("q", [2, 3])
def test_gaussian_binomial_counts_subspaces(q):
    for n in range(4):
        for k in range(n + 1):
            assert sum(1 for _ in ffla.enumerate_subspaces(n, k, q)) == ffla.gaussian_binomial(n, k, q)


def test_not_a_field():
    with pytest.raises(ValueError):
        ffla.check_field(4)


def test_primitive_root():
    assert ffla.primitive_root(2) == 1
    g = ffla.primitive_root(7)
    assert sorted(pow(g, k, 7) for k in range(6)) == list(range(1, 7))


@settings(max_examples=60, deadline=None)
@given(matrices(3))
def test_rank_nullity(m):
    q = 3
    k = ffla.kernel_basis(m, q)
    assert not ((m @ k) % q).any()
    assert ffla.rank(m, q) + k.shape[1] == m.shape[1]


@settings(max_examples=60, deadline=None)
@given(matrices(2))
def test_column_space_spans(m):
    q = 2
    c = ffla.column_space(m, q)
    assert c.shape[1] == ffla.rank(m, q)
    x = ffla.solve_columns(c, m, q)
    assert np.array_equal((c @ x) % q, m % q)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=9, max_size=9))
def test_inverse(xs):
    q = 5
    m = np.array(xs, dtype=np.int64).reshape(3, 3)
    if ffla.rank(m, q) < 3:
        with pytest.raises(ValueError):
            ffla.inverse(m, q)
    else:
        assert np.array_equal((m @ ffla.inverse(m, q)) % q, ffla.eye(3))


def test_extend_basis_is_greedy():
    q = 2
    sub = np.array([[1], [0], [0]])
    amb = np.eye(3, dtype=np.int64)
    ext = ffla.extend_basis(sub, amb, q)
    assert ext.tolist() == [[0, 0], [1, 0], [0, 1]]


def test_budget():
    old = ffla.set_budget(10)
    try:
        with pytest.raises(ffla.BudgetExceeded):
            list(ffla.enumerate_matrices(2, 2, 2))
    finally:
        ffla.set_budget(old)
    assert ffla.get_budget() == old

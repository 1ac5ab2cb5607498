import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perhall import ffla
from perhall.repcat import Category, IsoClassId, Quiver, category, dim_vectors_upto, vadd


def test_quiver_parse():
    assert Quiver.parse("A3").arrows == ((0, 1), (1, 2))
    assert Quiver.parse("3:0-1,0->2").arrows == ((0, 1), (0, 2))
    with pytest.raises(ValueError):
        Quiver.parse("2:0-1,1-0")
    with pytest.raises(ValueError):
        Quiver.parse("B2")


def test_label_round_trip():
    c = IsoClassId((1, 1), 1)
    assert str(c) == "d(1,1)#1"
    assert IsoClassId.parse(str(c)) == c
    with pytest.raises(ValueError):
        IsoClassId.parse("d(1,1)")


def test_class_order():
    a, b = IsoClassId((2, 0), 0), IsoClassId((0, 1), 0)
    assert b < a  # total dimension first


def test_a1_one_class_per_dimension(a1):
    for d in range(4):
        assert len(a1.classes((d,))) == 1


@pytest.mark.parametrize("q", [2, 3])
def test_a2_class_counts(q):
    c = category("A2", q)
    # indecomposables S0, S1, P; classes are multisets of them
    assert [len(c.classes(d)) for d in [(1, 1), (2, 1), (2, 2)]] == [2, 2, 3]


def test_a2_ordering(a2):
    split, proj = a2.classes((1, 1))
    assert a2.rep(split).mats[0].tolist() == [[0]]
    assert a2.rep(proj).mats[0].tolist() == [[1]]


@pytest.mark.parametrize("q", [2, 3])
def test_orbits_partition_the_representations(q):
    c = category("A2", q)
    for d in dim_vectors_upto((2, 2)):
        total = sum(c.orbit_size(x) for x in c.classes(d))
        assert total == q ** (d[0] * d[1])


@pytest.mark.parametrize("q", [2, 3])
def test_aut_order_brute_force(q):
    c = category("A2", q)
    for x in c.classes_upto((2, 1)):
        assert c.aut_order(x) == c.aut_order_bruteforce(x)


def test_aut_orders_frozen(a2):
    # derived: |Aut| of every class with dims <= (2,2) at q = 2
    assert [a2.aut_order(x) for x in a2.classes_upto((2, 2))] == [1, 1, 1, 6, 1, 1, 6, 6, 2, 6, 2, 36, 4, 6]


def test_hom_ext_simples(a2):
    s0, s1 = a2.classes((1, 0))[0], a2.classes((0, 1))[0]
    assert (a2.hom_dim(s0, s1), a2.ext1_dim(s0, s1)) == (0, 1)
    assert (a2.hom_dim(s1, s0), a2.ext1_dim(s1, s0)) == (0, 0)
    assert a2.euler_form(s0, s1) == -1
    assert a2.symmetric_form((1, 0), (0, 1)) == -1


def test_hall_numbers(a2):
    s0, s1 = a2.classes((1, 0))[0], a2.classes((0, 1))[0]
    split, proj = a2.classes((1, 1))
    assert a2.hall_profile(s0, s1) == {split: 1, proj: 1}
    assert a2.hall_profile(s1, s0) == {split: 1}
    assert a2.ext_profile(s0, s1) == {split: 1, proj: 1}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_hall_number_of_two_points(q):
    c = category("A1", q)
    f, f2 = c.classes((1,))[0], c.classes((2,))[0]
    assert c.hall_number(f2, f, f) == q + 1


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_subobject_count_is_gaussian(q, data):
    c = category("A1", q)
    n = data.draw(st.integers(0, 3))
    k = data.draw(st.integers(0, n))
    big = c.classes((n,))[0]
    sub = c.classes((k,))[0]
    quot = c.classes((n - k,))[0]
    assert c.hall_number(big, quot, sub) == ffla.gaussian_binomial(n, k, q)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_direct_sum_is_commutative_and_additive(data):
    c = category("A2", 2)
    cls = c.classes_upto((1, 1))
    x, y = data.draw(st.sampled_from(cls)), data.draw(st.sampled_from(cls))
    s = c.direct_sum(x, y)
    assert s == c.direct_sum(y, x)
    assert s.dims == vadd(x.dims, y.dims)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_euler_identity(data):
    c = category("A2", data.draw(st.sampled_from([2, 3])))
    cls = c.classes_upto((2, 2))
    x, y = data.draw(st.sampled_from(cls)), data.draw(st.sampled_from(cls))
    assert c.hom_dim(x, y) - c.ext1_dim(x, y) == c.euler_form(x, y)


def test_three_vertex_quiver():
    c = category("3:0-1,0-2", 2)
    assert sum(c.orbit_size(x) for x in c.classes((2, 1, 1))) == 2 ** 4
    for x, y in itertools.product(c.classes_upto((1, 1, 1)), repeat=2):
        assert c.hom_dim(x, y) - c.ext1_dim(x, y) == c.euler_form(x, y)


def test_unknown_class(a1):
    with pytest.raises((ValueError, IndexError, KeyError)):
        a1.check(IsoClassId((1,), 5))


def test_cache_round_trip(tmp_path, a2):
    s0, s1 = a2.classes((1, 0))[0], a2.classes((0, 1))[0]
    a2.hall_profile(s0, s1)
    path = tmp_path / "cache.pkl"
    a2.save_cache(path)
    fresh = Category(Quiver.parse("A2"), 2)
    fresh.load_cache(path)
    assert fresh.hall_profile(s0, s1) == a2.hall_profile(s0, s1)

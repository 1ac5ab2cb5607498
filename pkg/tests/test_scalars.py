import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from perhall.scalars import Scalar, as_scalar, v_pow

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12).map(lambda f: mpq(f.numerator, f.denominator))


def scalars(q):
    return st.builds(lambda a, b: Scalar(a, b, q), rationals, rationals)


@given(scalars(2), scalars(2), scalars(2))
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(scalars(3))
def test_inverse(x):
    if x:
        assert x * x.inv() == 1
        assert (x / x) == 1
    else:
        with pytest.raises(ZeroDivisionError):
            x.inv()


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_v_powers_add(i, j):
    for q in (2, 3):
        assert v_pow(i, q) * v_pow(j, q) == v_pow(i + j, q)


def test_v_squared_is_q():
    assert v_pow(2, 3) == 3
    assert v_pow(1, 2) * v_pow(1, 2) == 2
    assert v_pow(-1, 2) == Scalar(0, mpq(1, 2), 2)
    assert Scalar(0, 1, 2) ** -2 == mpq(1, 2)


@given(scalars(5))
def test_json_round_trip(x):
    assert Scalar.from_json(x.to_json(), 5) == x


def test_json_is_exact_pairs():
    assert v_pow(1, 2, mpq(1, 2)).to_json() == {"a": "0/1", "b": "1/2"}


def test_str():
    assert str(v_pow(1, 2, mpq(1, 2))) == "(1/2)v"
    assert str(Scalar(1, -1, 2)) == "1 - v"
    assert str(as_scalar(3, 2)) == "3"


def test_different_fields_do_not_mix():
    with pytest.raises(ValueError):
        Scalar(1, 1, 2) + Scalar(1, 1, 3)

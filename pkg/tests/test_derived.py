import pytest
from gmpy2 import mpq

from perhall import StalkSum
from perhall.derived import brace, derived_H, derived_H_profile, four_term_F, shift_pair_F


def test_stalk_sum_basics(a1, F):
    x = StalkSum.build(a1, [(0, F), (0, F), (2, F)])
    assert repr(x) == "d(2)#0@0 + d(1)#0@2"
    assert x.shift(-2).items() == [(-2, a1.classes((2,))[0]), (0, F)]
    assert StalkSum.parse(repr(x), a1) == x
    assert x.grothendieck(1) == (3,)


def test_periodic_stalk_sum(a1, F):
    x = StalkSum.stalk(F, 4, 3)
    assert x.items() == [(1, F)]
    assert x.as_tuple(a1.zero) == (a1.zero, F, a1.zero)
    assert x.as_tuple(a1.zero, offset=1) == (F, a1.zero, a1.zero)
    assert StalkSum.from_tuple((F, a1.zero, F), 3) == StalkSum.build(a1, [(0, F), (2, F)], 3)


def test_mixing_periods(a1, F):
    with pytest.raises(ValueError):
        StalkSum.stalk(F, 0, 3).plus(a1, StalkSum.stalk(F))


def test_parse_errors(a1):
    with pytest.raises(ValueError):
        StalkSum.parse("d(1)#0@x", a1)


def test_brace(a2):
    s0, s1 = a2.classes((1, 0))[0], a2.classes((0, 1))[0]
    # Hom(S0[i], S1[k]) = Ext^{k-i}(S0, S1), and only i > 0 counts
    assert brace(a2, StalkSum.stalk(s0), StalkSum.stalk(s1, 1)) == 1
    assert brace(a2, StalkSum.stalk(s0), StalkSum.stalk(s1, 2)) == mpq(1, 2)
    assert brace(a2, StalkSum.stalk(s0), StalkSum.stalk(s1, 3)) == 2


def test_shift_pair_frozen(a1, F):
    assert shift_pair_F(a1, F, F, F, F) == mpq(1, 2)


def test_derived_H_frozen(a1, F):
    z = a1.zero
    f2 = a1.classes((2,))[0]
    assert derived_H_profile(a1, F, F, F, F) == {z: mpq(1, 2)}
    assert derived_H_profile(a1, z, F, F, z) == {f2: mpq(1, 2)}
    assert derived_H(a1, z, F, F, z, f2) == mpq(1, 2)


def test_derived_H_reduces_to_twisted_hall(a2):
    # with I = J = 0 the number is |Ext(A,B)_M| / |Hom(A,B)|
    z = a2.zero
    for a in a2.classes_upto((1, 1)):
        for b in a2.classes_upto((1, 1)):
            h = a2.q ** a2.hom_dim(a, b)
            for m, cnt in a2.ext_profile(a, b).items():
                assert derived_H(a2, z, a, b, z, m) == mpq(cnt, h)


def test_four_term_is_hall_number_without_shifts(a2):
    z = a2.zero
    for a in a2.classes_upto((1, 1)):
        for b in a2.classes_upto((1, 1)):
            for m, g in a2.hall_profile(a, b).items():
                assert four_term_F(a2, a, z, z, b, m) == g

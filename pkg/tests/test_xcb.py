import json

import pytest
from gmpy2 import mpq

from perhall import PeriodicExtendedAlgebra, StalkSum, category
from perhall import xcb
from perhall.scalars import v_pow

HALF_V = v_pow(1, 2, mpq(1, 2))


def st3(c, k=0):
    return StalkSum.stalk(c, k, 3)


def test_bracket(a1, F):
    x = st3(F)
    assert xcb.bracket(a1, x, x) == mpq(1, 2)
    assert xcb.bracket(a1, StalkSum({}, 3), x) == 1
    assert xcb.bracket(a1, x.shift(2), x.shift(2)) == xcb.bracket(a1, x, x)
    assert xcb.bracket_exponent(a1, x, st3(F, 1)) == -1
    assert xcb.bracket_exponent(a1, x, st3(F, 1), oracle=True) == -1


def test_bracket_even_period(a1, F):
    with pytest.raises(ValueError, match="odd period"):
        xcb.bracket(a1, StalkSum.stalk(F, 0, 2), StalkSum.stalk(F, 0, 2))


@pytest.mark.parametrize("method", ["closed", "oracle"])
def test_curly_H_examples(a1, F, method):
    x = st3(F)
    assert xcb.curly_H(a1, x, x, st3(a1.direct_sum(F, F)), method) == HALF_V
    assert xcb.curly_H(a1, x, st3(F, 1), x.plus(a1, st3(F, 1)), method) == v_pow(1, 2)
    assert xcb.curly_H(a1, x, x, x, method) == 0


def test_curly_F(a1, F):
    x = st3(F)
    l = st3(a1.direct_sum(F, F))
    assert xcb.curly_F(a1, x, x, l) == xcb.curly_F(a1, x, x, l, "oracle") == v_pow(1, 2, mpq(3, 2))
    first, second = xcb.curly_F_toen(a1, x, x, l)
    assert first == second == xcb.curly_F(a1, x, x, l)
    assert xcb.curly_F(a1, x, StalkSum({}, 3), x) == 1


def test_curly_F_matches_toen_on_a2(a2):
    from itertools import product

    from perhall.periodic import class_tuples_per_degree

    objs = [StalkSum.from_tuple(t, 3) for t in class_tuples_per_degree(a2, 3, (1, 0))]
    for x, y in product(objs, repeat=2):
        alg = xcb.OddPeriodicAlgebra(a2, 3)
        for key in alg.mul_basis(x.as_tuple(a2.zero), y.as_tuple(a2.zero)):
            l = StalkSum.from_tuple(key, 3)
            first, second = xcb.curly_F_toen(a2, x, y, l)
            assert first == second == xcb.curly_F(a2, x, y, l)


def test_rho_scale(a1, F):
    assert xcb.rho_scale(a1, st3(F)) == v_pow(-1, 2)


def test_gamma(a1, F, a1q3):
    z = a1.zero
    assert xcb.gamma(a1, F, F, F, F) == 1
    assert xcb.gamma(a1, F, F, z, z) == 1
    assert xcb.gamma(a1, F, F, F, z) == 0
    f3 = a1q3.classes((1,))[0]
    # only I = F contributes: a_F / a_F^2 = 1 / a_F
    assert xcb.gamma(a1q3, f3, f3, a1q3.zero, a1q3.zero) == mpq(1, 2)


def test_phi(a1, F):
    p = PeriodicExtendedAlgebra(a1, 3)
    assert xcb.phi_image(p, [xcb.e(F, 0), xcb.e(F, 2)]) == p.monomial((F, a1.zero, F)) + p.K((1,), 2)
    assert xcb.phi_image(p, [xcb.K((1,), 1)]) == p.K((1,), 1)
    assert xcb.phi_image(p, []) == p.one()
    c3 = category("A1", 3)
    f3 = c3.classes((1,))[0]
    p3 = PeriodicExtendedAlgebra(c3, 3)
    assert xcb.phi_image(p3, [xcb.e(f3, 4)]) == p3.u(f3, 1) * mpq(1, 2)


def test_word_str(F):
    assert xcb.word_str([xcb.e(F, 0), xcb.K((1,), 2)]) == "e[d(1)#0]@0 K[1]@2"


@pytest.mark.parametrize("m", [3, 5])
def test_relations_hold(a2, m):
    checks = xcb.check_bridgeland_relations(a2, m, (1, 1))
    assert checks and all(c.equal for c in checks)
    expected = {"KK-product", "KK-exchange", "Ke", "ee-same", "ee-adjacent"}
    # far-apart degrees only exist once m > 3
    if m > 3:
        expected.add("ee-distant")
    assert {c.relation for c in checks} == expected


def test_relation_report_is_json(a1):
    checks = xcb.check_bridgeland_relations(a1, 3, (1,))
    json.dumps([c.to_json() for c in checks])


def test_symmetric_exponents_fail(a1):
    bad = [c for c in xcb.check_bridgeland_relations(a1, 3, (1,), symmetric_exponents=True) if not c.equal]
    assert bad and {c.relation for c in bad} == {"ee-same"}


def test_distant_degrees_commute_at_period_five(a1, F):
    p = PeriodicExtendedAlgebra(a1, 5)
    assert p.u(F, 2) * p.u(F, 0) == p.u(F, 0) * p.u(F, 2)


def test_presentation_needs_m_above_two(a1):
    with pytest.raises(ValueError):
        xcb.check_bridgeland_relations(a1, 2, (1,))

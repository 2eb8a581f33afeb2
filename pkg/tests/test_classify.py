from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apparition.classify import (
    Genericity,
    associates,
    cheb_preimages,
    circular_tower_depth,
    classify,
    predicted_densities,
    r_facts,
    r_primitive,
    to_json_dict,
)
from apparition.errors import ExcludedParameter


def test_excluded():
    for t in (0, 1, -1, 2, -2):
        with pytest.raises(ExcludedParameter):
            classify(t)


def test_classify_generic():
    c = classify(3)
    assert not (c.reducible or c.circular or c.cubic or c.type_a or c.type_b)
    assert c.two_generic and c.twin_primitive
    assert c.per_r[2].primitive and c.per_r[3].primitive
    assert c.per_r[3].genericity is Genericity.GENERIC
    assert c.per_r[5].genericity is Genericity.PLUS_SQUARE  # 5 = 5 * 1**2
    assert c.per_r[5].scale_root == 1


def test_classify_cubic():
    c = classify(F(2, 7))
    assert c.cubic and c.cubic_b == F(8, 7)
    assert c.cubic_associates == (F(11, 7), F(-13, 7))
    assert c.cubic_primitive  # den 7 is not a cube for any of the three
    assert c.per_r[3].genericity is Genericity.MINUS_SQUARE


def test_classify_circular():
    c = classify(F(6, 5))
    assert c.circular and c.circular_associate == F(8, 5)
    assert c.circular_primitive  # 16/5 and 32/5 are not squares
    assert not (c.type_a or c.type_b)


def test_classify_types_a_b():
    c = classify(F(2, 3))
    assert c.type_b and not c.type_a  # 2*(4 - 4/9) = (8/3)**2
    c = classify(6)
    assert c.type_a and not c.type_b  # 2*8 = 4**2
    c = classify(F(5, 2))
    assert c.reducible and c.reducible_witness == F(3, 2)
    assert c.type_a  # xi = 2 = 2*1**2
    c = classify(F(10, 3))
    assert c.reducible and c.two_generic and not c.type_a


def test_classify_minus_square_r7():
    c = classify(F(3, 2))
    assert c.per_r[7].genericity is Genericity.MINUS_SQUARE
    assert c.per_r[7].scale_root == F(1, 2)  # 9/4 - 4 = -7*(1/2)**2
    assert c.per_r[7].primitive


def test_associates():
    assert associates(F(2, 7)) == [
        ("twin", F(-2, 7)),
        ("cubic_a1", F(11, 7)),
        ("cubic_a2", F(-13, 7)),
    ]
    assert associates(F(6, 5)) == [("twin", F(-6, 5)), ("circular", F(8, 5))]
    assert associates(3) == [("twin", F(-3))]


def test_cubic_invariant():
    # C_3(t) = C_3(a1) = C_3(a2) exactly
    from apparition.chebyshev import cheb_c_exact

    c = classify(F(2, 7))
    a1, a2 = c.cubic_associates
    val = cheb_c_exact(3, F(2, 7))
    assert val == cheb_c_exact(3, a1) == cheb_c_exact(3, a2) == F(-286, 343)
    # associates are themselves cubic
    for v in (a1, a2):
        assert classify(v, rs=()).cubic


def test_preimages():
    assert cheb_preimages(2, 7) == [-3, 3]  # x**2 - 2 = 7
    assert cheb_preimages(3, 18) == [3]  # x**3 - 3x = 18
    # all three cubic associates are preimages of their common C_3 value
    assert cheb_preimages(3, F(-286, 343)) == [F(-13, 7), F(2, 7), F(11, 7)]
    assert cheb_preimages(2, 3) == []
    assert r_primitive(3, 3) and not r_primitive(18, 3)


def test_twin_mirror():
    for t in (F(3), F(2, 7), F(6, 5), F(2, 3), F(6), F(5, 2)):
        c, cm = classify(t), classify(-t)
        assert c.twin_primitive == cm.twin_primitive
        assert c.two_generic == cm.two_generic
        assert (c.reducible, c.circular, c.cubic) == (cm.reducible, cm.circular, cm.cubic)
        assert (c.type_a, c.type_b) == (cm.type_a, cm.type_b)
        if c.cubic:
            assert {a for a in cm.cubic_associates} == {-a for a in c.cubic_associates}


# ---------------------------------------------------------------------------
# predictions
# ---------------------------------------------------------------------------


def _dens(t, r, j_max):
    return predicted_densities(classify(F(t)), r, j_max)


def test_prediction_generic_r2():
    p = _dens(3, 2, 3)
    assert p.densities == [F(1, 3), F(1, 3), F(1, 6), F(1, 12)]
    assert p.source == "two-generic" and not p.conjectural


def test_prediction_cubic_primitive():
    p = _dens(F(2, 7), 3, 3)
    assert p.densities == [F(1, 4), F(1, 2), F(1, 6), F(1, 18)]


def test_prediction_minus_square_r7():
    p = _dens(F(3, 2), 7, 1)
    assert p.densities == [F(17, 24), F(1, 4)]


def test_prediction_type_b():
    p = _dens(F(2, 3), 2, 4)
    assert p.densities == [F(7, 24), F(7, 24), F(1, 12), F(1, 6), F(1, 12)]


def test_prediction_type_a():
    p = _dens(6, 2, 3)
    assert p.densities == [F(7, 24), F(7, 24), F(1, 3), F(1, 24)]


def test_prediction_circular_primitive():
    p = _dens(F(6, 5), 2, 3)
    assert p.densities == [F(1, 6), F(1, 6), F(1, 3), F(1, 6)]


def test_prediction_plus_square_equals_generic():
    # r = 1 mod 4 with delta = r*b**2 keeps the generic values
    p = _dens(3, 5, 2)
    assert p.source == "plus-square"
    assert p.densities == [F(19, 24), F(1, 6), F(1, 30)]
    # identical to a genuinely generic parameter at the same r
    q = _dens(4, 5, 2)
    assert q.source == "generic"
    assert q.densities == p.densities


def test_prediction_root_shift():
    # 7 = C_2(3): level 0 merges, deeper levels shift down
    p = _dens(7, 2, 3)
    assert p.densities == [F(2, 3), F(1, 6), F(1, 12), F(1, 24)]
    assert p.source.startswith("root-shift")
    # 18 = C_3(3)
    p = _dens(18, 3, 2)
    assert p.densities == [F(7, 8), F(1, 12), F(1, 36)]


def test_prediction_circular_tower():
    assert circular_tower_depth(F(48, 25)) == 1
    assert circular_tower_depth(F(-672, 625)) == 2
    assert circular_tower_depth(F(6, 5)) is None  # circular primitive itself
    p = _dens(F(48, 25), 2, 3)
    assert p.conjectural
    assert p.densities == [F(1, 12), F(1, 12), F(2, 3), F(1, 12)]
    p = _dens(F(-672, 625), 2, 3)
    assert p.densities == [F(1, 24), F(1, 24), F(5, 6), F(1, 24)]


def test_prediction_unsupported_cubic_tower():
    # cubic and 3-primitive, but an associate has a rational C_3-preimage
    p = _dens(F(683, 343), 3, 3)
    assert not p.supported


def test_prediction_not_twin_primitive_unsupported():
    # t = -7 is 2-primitive but its twin 7 is not; no table rule applies
    p = _dens(-7, 2, 3)
    assert not p.supported


def test_mass_is_one():
    cases = [
        (F(3), 2), (F(3), 3), (F(3), 5), (F(2, 7), 3), (F(2, 3), 2),
        (F(6, 5), 2), (F(6), 2), (F(3, 2), 7), (F(7), 2), (F(5, 2), 2),
        (F(10, 3), 3), (F(48, 25), 2), (F(18), 3),
    ]
    for t, r in cases:
        for j_max in (0, 1, 2, 5, 8):
            p = predicted_densities(classify(t), r, j_max)
            assert p.supported and p.total_mass() == 1, (t, r, j_max)
            assert all(0 <= d <= 1 for d in p.densities)
            assert len(p.densities) == j_max + 1


def test_r_must_be_prime():
    with pytest.raises(ValueError):
        predicted_densities(classify(3), 4, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(-60, 60), st.integers(1, 40), st.sampled_from([2, 3, 5, 7]))
def test_mass_property(num, den, r):
    t = F(num, den)
    if t in (0, 1, -1, 2, -2):
        return
    p = predicted_densities(classify(t), r, 6)
    if p.supported:
        assert p.total_mass() == 1
        assert all(0 <= d <= 1 for d in p.densities)


def test_json_dict():
    d = to_json_dict(classify(F(2, 7)))
    assert d["cubic"] is True and d["cubic_b"] == "8/7"
    assert d["cubic_associates"] == ["11/7", "-13/7"]
    assert d["per_r"]["3"]["genericity"] == "minus-square"


def test_r_facts_standalone():
    f = r_facts(F(3, 2), 7)
    assert f.genericity is Genericity.MINUS_SQUARE and f.primitive

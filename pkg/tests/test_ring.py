from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apparition.chebyshev import cheb_c_mod
from apparition.errors import BoundViolation, DenominatorDivisible, NotUnitDeterminant
from apparition.primes import factorize, sieve
from apparition.ring import (
    GroupOrder,
    ModParam,
    OrderKind,
    RingElem,
    d_elem,
    elem_from_rationals,
    element_order,
    group_order,
    identity,
    index,
    index_by_scan,
    reduce_param,
)

ODD_PRIMES = [p for p in sieve(300) if p > 2]


def test_reduce_param():
    assert reduce_param(F(2, 7), 5).t_mod == 1  # 7^{-1} = 3 mod 5
    assert reduce_param(3, 11).t_mod == 3
    assert reduce_param(F(6, 5), 7).t_mod == 4  # 5^{-1} = 3 mod 7
    assert reduce_param(3, 11).delta_mod == 5
    with pytest.raises(DenominatorDivisible):
        reduce_param(F(2, 7), 7)
    with pytest.raises(ValueError):
        reduce_param(3, 2)
    with pytest.raises(ValueError):
        reduce_param(3, 9)


def test_mul():
    m = reduce_param(3, 11)
    d = d_elem(m)
    assert d * d == RingElem(m, 3, 8)  # D^2 = [t, t^2-1]
    m7 = reduce_param(3, 7)
    x = RingElem(m7, 4, 6)
    assert identity(m7) * x == x
    neg_i = RingElem(m7, 0, 6)
    assert neg_i * neg_i == identity(m7)


def test_pow():
    m = reduce_param(3, 11)
    assert d_elem(m) ** 5 == identity(m)  # U_5(3) = 55 = 0, U_6(3) = 144 = 1
    m7 = reduce_param(3, 7)
    assert d_elem(m7) ** 4 == RingElem(m7, 0, 6)  # U_4 = 21 = 0, U_5 = 55 = 6
    x = RingElem(m7, 4, 6)
    assert x**0 == identity(m7)


def test_pow_matches_repeated_mul():
    m = reduce_param(F(2, 7), 13)
    x = RingElem(m, 5, 9)
    acc = identity(m)
    for n in range(12):
        assert x**n == acc
        acc = acc * x


def test_group_order():
    assert group_order(reduce_param(3, 11)) == GroupOrder(10, OrderKind.SPLIT)
    assert group_order(reduce_param(-3, 7)) == GroupOrder(8, OrderKind.INERT)
    # t = 9 = 2 mod 7: delta zero, order p
    assert group_order(reduce_param(9, 7)) == GroupOrder(7, OrderKind.DELTA_ZERO)
    # t = 5 = -2 mod 7: order 2p
    assert group_order(reduce_param(5, 7)) == GroupOrder(14, OrderKind.DELTA_ZERO)


def test_element_order():
    m = reduce_param(3, 7)
    neg_i = RingElem(m, 0, 6)
    assert element_order(neg_i, factorize(8)) == 2
    assert element_order(RingElem(m, 4, 6), factorize(8)) == 4  # trace 0
    m19 = reduce_param(3, 19)
    assert element_order(d_elem(m19), factorize(18)) == 9  # U_9(3) = 0 mod 19, D^9 = I
    with pytest.raises(NotUnitDeterminant):
        element_order(RingElem(m, 1, 1), factorize(8))
    with pytest.raises(BoundViolation):
        element_order(d_elem(m), factorize(3))


def test_index_examples():
    assert index(3, 11) == 5
    assert index(-3, 11) == 10  # Fibonacci bridge, F_10 = 55
    assert index(3, 7) == 8  # D^4 = -I mod 7
    assert index(3, 5) == 10  # 3 = -2 mod 5, delta-zero case
    assert index(9, 7) == 7  # t = 2 mod 7
    with pytest.raises(DenominatorDivisible):
        index(F(2, 7), 7)


def test_index_by_scan_examples():
    assert index_by_scan(3, 13) == 14  # U_7 = 0, D^7 = -I mod 13
    assert index_by_scan(-6, 3) == 4  # Pell bridge, L_4 = 12
    assert index_by_scan(3, 11) == 5


@pytest.mark.parametrize("t", [F(3), F(-3), F(2, 7), F(6, 5), F(2, 3), F(6), F(5, 2)])
def test_oracle_equivalence(t):
    for p in ODD_PRIMES:
        if t.denominator % p == 0:
            continue
        assert index(t, p) == index_by_scan(t, p), (t, p)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ODD_PRIMES), st.integers(-40, 40), st.integers(1, 39))
def test_index_minimality(p, tn, td):
    t = F(tn, td)
    if t.denominator % p == 0 or tn == 0:
        return
    chi = index(t, p)
    m = reduce_param(t, p)
    d = d_elem(m)
    assert (d**chi).is_identity
    for q in factorize(chi):
        assert not (d ** (chi // q)).is_identity
    if m.delta_mod != 0:
        assert group_order(m).value % chi == 0  # Lagrange


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(ODD_PRIMES),
    st.integers(-30, 30),
    st.integers(0, 4),
    st.integers(0, 4),
    st.integers(0, 4),
    st.integers(0, 4),
)
def test_det_multiplicative_and_trace(p, tn, a0, a1, b0, b1):
    m = reduce_param(tn if tn else 1, p)
    x = RingElem(m, a0 % p, a1 % p)
    y = RingElem(m, b0 % p, b1 % p)
    assert (x * y).det == x.det * y.det % p
    assert x * y == y * x  # the ring is commutative
    n = (a0 * 7 + b1 + 3) % 10**4
    assert (d_elem(m) ** n).trace == cheb_c_mod(n, m.t_mod, p)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ODD_PRIMES), st.integers(-20, 20), st.integers(1, 200), st.booleans())
def test_power_order_equals_trace_index(p, tn, k, flip):
    # ord(Y) = chi(trace(Y), p) for Y = +-D^k in the unit group
    t = F(tn) if tn else F(5)
    if t.denominator % p == 0:
        return
    m = reduce_param(t, p)
    y = d_elem(m) ** k
    if flip:
        y = -y
    b = y.trace
    if b == 2 % p or b == (-2) % p:
        return  # torsion / unipotent residues: order 1, 2, p or 2p
    phat = group_order(m).value
    assert element_order(y, factorize(phat)) == index(b, p)


def test_elem_from_rationals():
    m = reduce_param(3, 7)
    y = elem_from_rationals(m, F(-8, 19), F(-33, 19))
    assert (y.x0, y.x1) == (4, 6)
    assert y.det == 1 and y.trace == 0

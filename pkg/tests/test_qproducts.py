"""Pochhammer evaluation, the negative-index convention, and the theta oracle."""

import random
from fractions import Fraction as F

import pytest

from qbailey.cyclo import as_cyclo
from qbailey.errors import QBaileyError, ZeroDivisorError
from qbailey.qproducts import (INFINITE, ProductSpec, ZERO_DIVISOR,
                               jtp_theta_oracle, poch, poch_eval, poch_inf,
                               product_spec_eval, qpoch)
from qbailey.qseries import QSeries


def S(pairs, order):
    return QSeries.from_terms(pairs, order)


def test_empty_product():
    for base in (1, 2, 5):
        assert poch_eval(qpoch(base, 1, 0), 9) == QSeries.one(9)


def test_qq3_hand_expansion():
    # (1-q)(1-q^2)(1-q^3) multiplied out by hand
    got = poch_eval(qpoch(1, 1, 3), 7)
    assert got == S([(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)], 7)


def test_signed_step():
    # (-q;-q)_2 = (1+q)(1-q^2)
    got = poch_eval(poch(-1, 1, -1, 1, 2), 9)
    ref = S([(0, 1), (1, 1)], 9) * S([(0, 1), (2, -1)], 9)
    assert got == ref


def test_negative_length_convention():
    # (a;q)_{-m} = 1/((a q^{-m};q)_m); for a = q^3: 1/((q;q)_2) = 1/((1-q)(1-q^2))
    got = poch_eval(qpoch(3, 1, -2), 12)
    ref = (S([(0, 1), (1, -1)], 12) * S([(0, 1), (2, -1)], 12)).invert()
    assert got.equal_to_order(ref, 10).equal
    # (q;q)_{-m} is the reciprocal of a vanishing product
    assert poch_eval(qpoch(1, 1, -2), 8) == ZERO_DIVISOR
    # and its reciprocal symbol is plain zero
    assert poch_eval(qpoch(1, 1, -2, power=-1), 8).is_zero()


def test_vanishing_positive_power():
    assert poch_eval(qpoch(0, 1, 2), 8).is_zero()          # (1;q)_2 = 0
    assert poch_eval(qpoch(0, 1, 2, power=-1), 8) == ZERO_DIVISOR


def test_power_reciprocal_roundtrip():
    rng = random.Random(21)
    for _ in range(25):
        f = poch(rng.choice([1, -1, 2]), rng.randint(1, 3), 1,
                 rng.randint(1, 3), rng.randint(0, 5))
        a = poch_eval(f, 15)
        b = poch_eval(poch(f.base_unit, f.base_exp, f.step_unit, f.step_exp,
                           f.length, -1), 15)
        prod = a * b
        assert prod.equal_to_order(QSeries.one(15), 15).equal


def test_index_additivity():
    rng = random.Random(4)
    for _ in range(30):
        bu = rng.choice([1, -1, 2, -2])
        be = rng.randint(0, 3)
        se = rng.randint(1, 3)
        su = rng.choice([1, -1])
        m, n = rng.randint(0, 4), rng.randint(0, 4)
        whole = poch_eval(poch(bu, be, su, se, m + n), 20)
        left = poch_eval(poch(bu, be, su, se, m), 20)
        shifted = poch_eval(poch(as_cyclo(bu) * as_cyclo(su) ** m, be + m * se,
                                 su, se, n), 20)
        assert whole == left * shifted


def test_poch_inf_pentagonal():
    got = poch_inf(qpoch(1, 1, INFINITE), 13)
    assert got == S([(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)], 13)


def test_poch_inf_scaling_law():
    a = poch_inf(qpoch(2, 2, INFINITE), 26)
    b = poch_inf(qpoch(1, 1, INFINITE), 13).scale_exponents(2)
    assert a == b


def test_poch_inf_divergent_base_rejected():
    with pytest.raises(QBaileyError):
        qpoch(0, 1, INFINITE)


def test_product_spec_rr_rhs():
    # (q^2,q^3,q^5;q^5)_inf / (q;q)_inf counts partitions into parts = 1,4 mod 5
    spec = ProductSpec((qpoch(2, 5, INFINITE), qpoch(3, 5, INFINITE),
                        qpoch(5, 5, INFINITE), qpoch(1, 1, INFINITE, power=-1)))
    got = product_spec_eval(spec, 7)
    T = 7
    cnt = [1] + [0] * (T - 1)
    for part in [p for p in range(1, T) if p % 5 in (1, 4)]:
        for m in range(part, T):
            cnt[m] += cnt[m - part]
    assert [int(got.coefficient(m).rational()) for m in range(T)] == cnt
    assert cnt == [1, 1, 1, 1, 2, 2, 3]


def test_product_spec_cancellation():
    spec = ProductSpec((qpoch(1, 1, INFINITE), qpoch(1, 1, INFINITE, power=-1)))
    assert product_spec_eval(spec, 30) == QSeries.one(30)
    # (q,q^4,q^5;q^5)/(q;q) = 1/((q^2;q^5)(q^3;q^5)) to order 30
    lhs = product_spec_eval(ProductSpec((
        qpoch(1, 5, INFINITE), qpoch(4, 5, INFINITE), qpoch(5, 5, INFINITE),
        qpoch(1, 1, INFINITE, power=-1))), 30)
    rhs = product_spec_eval(ProductSpec((
        qpoch(2, 5, INFINITE, power=-1), qpoch(3, 5, INFINITE, power=-1))), 30)
    assert lhs.equal_to_order(rhs, 30).equal


def test_product_spec_zero_divisor_is_hard_error():
    with pytest.raises(ZeroDivisorError):
        product_spec_eval(ProductSpec((qpoch(1, 1, -2),)), 10)


def test_jtp_oracle():
    # a=1, m=3 regroups all residues: equals (q;q)_inf
    th = jtp_theta_oracle(1, 3, 20)
    assert th.equal_to_order(poch_inf(qpoch(1, 1, INFINITE), 20), 20).equal
    # a=1, m=2: 1 - 2q + 2q^4 - 2q^9 ...
    th = jtp_theta_oracle(1, 2, 12)
    assert th == S([(0, 1), (1, -2), (4, 2), (9, -2)], 12)
    # below the first nonconstant exponent only the constant term remains
    assert jtp_theta_oracle(1, 3, F(1, 2)) == QSeries.one(F(1, 2))
    with pytest.raises(QBaileyError):
        jtp_theta_oracle(3, 3, 10)

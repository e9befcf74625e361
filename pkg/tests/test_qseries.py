"""Truncated series ring: arithmetic, truncation semantics, inversion."""

import random
from fractions import Fraction as F

import pytest

from qbailey.cyclo import as_cyclo, I
from qbailey.errors import QBaileyError, TruncationError
from qbailey.qseries import QSeries


def rand_series(rng, order=12, allow_unit=True):
    terms = [(e, rng.randint(-5, 5)) for e in range(order)]
    if allow_unit and terms[0][1] == 0:
        terms[0] = (0, 1)
    return QSeries.from_terms([(e, c) for e, c in terms if c], order)


def series_of(pairs, order):
    return QSeries.from_terms(pairs, order)


def test_mul_basics():
    f = series_of([(0, 1), (1, -1)], 10)
    g = series_of([(0, 1), (1, 1)], 10)
    assert f * g == series_of([(0, 1), (2, -1)], 10)
    h = QSeries.monomial(1, F(1, 2), 5)
    assert h * h == QSeries.monomial(1, 1, F(11, 2))


def test_mul_truncation_rule():
    f = series_of([(0, 1), (1, -1)], 3)
    g = QSeries.one(5)
    p = f * g
    assert p.order == 3
    assert p == series_of([(0, 1), (1, -1)], 3)
    # valuation shifts the sound order
    h = QSeries.monomial(1, 2, 9)
    assert (f * h).order == 5


def test_addition_order_and_pruning():
    f = series_of([(0, 1), (2, 3)], 6)
    g = series_of([(2, -3), (4, 1)], 9)
    s = f + g
    assert s.order == 6
    assert s.terms() == [(F(0), as_cyclo(1)), (F(4), as_cyclo(1))]


def test_invert_geometric():
    f = series_of([(0, 1), (1, -1)], 4)
    assert f.invert() == series_of([(0, 1), (1, 1), (2, 1), (3, 1)], 4)
    assert QSeries.constant(2, 7).invert() == QSeries.constant(F(1, 2), 7)


def test_invert_partition_series():
    # independent oracle: partition counting by dynamic programming
    T = 6
    p = [1] + [0] * (T - 1)
    for part in range(1, T):
        for m in range(part, T):
            p[m] += p[m - part]
    euler = QSeries.one(T)
    for n in range(1, T):
        euler = euler.mul_linear(1, n)
    inv = euler.invert()
    assert [int(inv.coefficient(m).rational()) for m in range(T)] == p
    assert p == [1, 1, 2, 3, 5, 7]


def test_invert_nonzero_valuation():
    f = series_of([(2, 3), (3, -1)], 8)
    g = f.invert()
    assert g.order == 8 - 4
    prod = f * g
    assert prod.equal_to_order(QSeries.one(prod.order), prod.order).equal


def test_invert_roundtrip_random():
    rng = random.Random(99)
    for _ in range(100):
        f = rand_series(rng)
        g = f.invert()
        prod = f * g
        assert prod.equal_to_order(QSeries.one(prod.order), prod.order).equal


def test_ring_axioms_random():
    rng = random.Random(5)
    for _ in range(60):
        f, g, h = (rand_series(rng, allow_unit=False) for _ in range(3))
        lhs = (f + g) * h
        rhs = f * h + g * h
        t = min(lhs.order, rhs.order)
        assert lhs.equal_to_order(rhs, t).equal
        fg, gf = f * g, g * f
        assert fg.equal_to_order(gf, min(fg.order, gf.order)).equal


def test_scale_exponents():
    f = series_of([(0, 1), (1, 1)], 7)
    assert f.scale_exponents(2) == series_of([(0, 1), (2, 1)], 14)
    assert f.scale_exponents(F(1, 2)) == QSeries.from_terms(
        [(0, 1), (F(1, 2), 1)], F(7, 2))
    with pytest.raises(QBaileyError):
        f.scale_exponents(0)
    rng = random.Random(8)
    for _ in range(20):
        a, b = rand_series(rng), rand_series(rng)
        c = F(rng.randint(1, 4), rng.randint(1, 3))
        assert (a * b).scale_exponents(c) == a.scale_exponents(c) * b.scale_exponents(c)


def test_coefficient_queries():
    f = series_of([(0, 1), (1, -1), (2, -1), (5, 1)], 6)
    assert f.coefficient(5) == as_cyclo(1)
    assert f.coefficient(F(1, 2)) == as_cyclo(0)
    with pytest.raises(TruncationError):
        f.coefficient(6)
    with pytest.raises(TruncationError):
        f.coefficient(F(13, 2))


def test_equal_to_order():
    f = series_of([(0, 1), (1, 1)], 4)
    g = series_of([(0, 1), (1, 2)], 4)
    v = f.equal_to_order(g, 2)
    assert not v.equal and v.exponent == 1
    assert v.left == as_cyclo(1) and v.right == as_cyclo(2)
    assert f.equal_to_order(series_of([(0, 1), (1, 1), (3, 9)], 4), 2).equal
    with pytest.raises(TruncationError):
        f.equal_to_order(g, 5)


def test_rendering_and_dump():
    f = QSeries.from_terms([(0, 1), (F(1, 2), I), (2, F(-3, 2))], 4)
    s = str(f)
    assert "q^(1/2)" in s and "(mod q^4)" in s
    assert QSeries.load(f.dump()) == f

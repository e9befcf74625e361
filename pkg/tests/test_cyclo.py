"""Field arithmetic in Q(zeta_12)."""

import random
from fractions import Fraction as F

import pytest

from qbailey.cyclo import (Cyclo, I, OMEGA, OMEGA2, ONE, ZERO, as_cyclo,
                           parse_unit, unit_cbrt, unit_sqrt)
from qbailey.errors import QBaileyError


def rand_elt(rng):
    return Cyclo(tuple(rng.randint(-9, 9) for _ in range(4)), rng.randint(1, 7))


def test_defining_relations():
    assert I * I == as_cyclo(-1)
    assert OMEGA * OMEGA * OMEGA == ONE
    assert (ONE + OMEGA + OMEGA2).is_zero()
    assert (as_cyclo(1) + I) * (as_cyclo(1) - I) == as_cyclo(2)


def test_inverses():
    assert I.inverse() == -I
    assert OMEGA.inverse() == OMEGA2
    assert (as_cyclo(1) + I).inverse() == (as_cyclo(1) - I) * as_cyclo(F(1, 2))
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_field_axioms_random():
    rng = random.Random(12)
    for _ in range(200):
        x, y, z = (rand_elt(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        if not x.is_zero():
            assert x * x.inverse() == ONE


def test_conjugation():
    assert I.conj() == -I
    assert OMEGA.conj() == OMEGA2
    rng = random.Random(3)
    for _ in range(50):
        x, y = rand_elt(rng), rand_elt(rng)
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()
    # fixed field is exactly the rationals among these generators
    assert as_cyclo(F(7, 3)).conj() == as_cyclo(F(7, 3))
    assert (OMEGA + OMEGA2).conj() == OMEGA + OMEGA2  # = -1


def test_rationality_flags():
    assert as_cyclo(F(3, 2)).is_rational()
    assert not (I + ONE).is_rational()
    assert (I * I).is_rational()
    with pytest.raises(QBaileyError):
        I.rational()


def test_pow():
    assert I ** 4 == ONE and I ** -1 == -I
    assert OMEGA ** 3 == ONE and OMEGA ** -2 == OMEGA
    x = as_cyclo(F(2, 3))
    assert x ** -2 == as_cyclo(F(9, 4))


def test_parse_and_render():
    assert parse_unit("i") == I
    assert parse_unit("-i") == -I
    assert parse_unit("omega") == OMEGA
    assert parse_unit("omega2") == OMEGA2
    assert parse_unit("-3/4") == as_cyclo(F(-3, 4))
    assert parse_unit(["1/2", "0", "1", "0"]) == Cyclo((1, 0, 2, 0), 2)
    assert str(as_cyclo(F(1, 2)) + I) == "1/2 + ζ^3"
    with pytest.raises(QBaileyError):
        parse_unit("nonsense")


def test_unit_roots():
    assert unit_sqrt(as_cyclo(F(9, 4))) == as_cyclo(F(3, 2))
    assert unit_sqrt(as_cyclo(-1)) == I
    assert unit_sqrt(OMEGA) ** 2 == OMEGA
    assert unit_sqrt(OMEGA2) ** 2 == OMEGA2
    assert unit_cbrt(as_cyclo(-8)) == as_cyclo(-2)
    with pytest.raises(QBaileyError):
        unit_sqrt(I)
    with pytest.raises(QBaileyError):
        unit_cbrt(as_cyclo(2))

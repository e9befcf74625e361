"""Euler-product sieve and periodicity detection."""

import random
from fractions import Fraction as F

import pytest

from qbailey.errors import QBaileyError
from qbailey.qproducts import INFINITE, qpoch, poch_inf
from qbailey.qseries import QSeries
from qbailey.recognizer import (euler_exponents_of_product, periodicity_fit,
                                product_exponents)
from qbailey.registry import eval_lhs, load_registry


@pytest.fixture(scope="module")
def by_id():
    return {e.id: e for e in load_registry()}


def test_constant_one():
    res = product_exponents(QSeries.one(25), 25)
    assert res.exponents == [0] * 24 and res.rescale == 1


def test_partition_generating_function():
    f = poch_inf(qpoch(1, 1, INFINITE), 30).invert()
    assert product_exponents(f, 30).exponents == [1] * 29


def test_rra1_pattern(by_id):
    res = product_exponents(eval_lhs(by_id["RRa1"], 61), 61)
    assert res.exponents == [1 if n % 5 in (1, 4) else 0 for n in range(1, 61)]
    assert periodicity_fit(res.exponents, 10) == (5, (1, 0, 0, 1, 0))


def test_roundtrip_random_lists():
    rng = random.Random(42)
    for _ in range(15):
        cs = [rng.randint(-3, 3) for _ in range(20)]
        f = QSeries.one(41)
        for n, c in enumerate(cs, start=1):
            for _ in range(abs(c)):
                f = f.div_linear(1, n) if c > 0 else f.mul_linear(1, n)
        got = product_exponents(f, 41).exponents
        assert got[:20] == cs and all(v == 0 for v in got[20:])


def test_periodicity_edge_cases():
    assert periodicity_fit([0] * 12, 6) == (1, (0,))
    assert periodicity_fit(list(range(1, 40)), 10) is None
    # not enough confirming entries: need at least 2p beyond the first period
    assert periodicity_fit([1, 0, 1, 0, 1], 2) == (2, (1, 0))
    assert periodicity_fit([1, 0, 1, 0], 2) is None


def test_non_unit_rejected():
    with pytest.raises(QBaileyError):
        product_exponents(QSeries.from_terms([(0, 2)], 10), 10)


def test_non_integer_sieve_aborts():
    f = QSeries.from_terms([(0, 1), (1, F(1, 2))], 10)
    with pytest.raises(QBaileyError, match="rational integer"):
        product_exponents(f, 10)


def test_fractional_lattice_rescale():
    f = poch_inf(qpoch(1, 1, INFINITE), 15).invert().scale_exponents(F(1, 2))
    res = product_exponents(f, 15)
    assert res.rescale == 2
    assert res.exponents == [1] * 14


def test_expected_exponents_helper(by_id):
    got = euler_exponents_of_product(by_id["RRa1"].rhs, 20)
    assert got == [1 if n % 5 in (1, 4) else 0 for n in range(1, 20)]
    got = euler_exponents_of_product(by_id["ATNS123"].rhs, 15)
    sieved = product_exponents(eval_lhs(by_id["ATNS123"], 16), 15)
    assert got[:14] == sieved.exponents

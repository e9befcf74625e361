"""Registry loading, validation, summation, and verification."""

import json
from collections import defaultdict
from dataclasses import replace
from fractions import Fraction as F

import pytest

from qbailey.errors import RegistryError
from qbailey.qproducts import INFINITE, PochFactor, ProductSpec, qpoch
from qbailey.qseries import QSeries
from qbailey.registry import (IdentitySpec, eval_lhs, eval_rhs, load_registry,
                              sum_lhs, triple_product_blocks, verify_all,
                              verify_identity)


@pytest.fixture(scope="module")
def reg():
    return load_registry()


@pytest.fixture(scope="module")
def by_id(reg):
    return {e.id: e for e in reg}


def test_shipped_registry_size(reg):
    assert len(reg) >= 47
    ids = {e.id for e in reg}
    for required in ("RRa1", "RRa2", "ex1", "ex2", "ex3", "ex4", "ex5", "ex6",
                     "PNS123", "ATNS123", "SS215", "SS417", "PNS327", "PNS337",
                     "ATNS417", "PNS223", "PNS224"):
        assert required in ids


def test_load_rejects_duplicates(tmp_path):
    doc = {"identities": [
        {"id": "X", "vars": ["n"], "lhs": {"qexp": {"A": "1"}, "den": []},
         "rhs": [], "meta": {}},
        {"id": "X", "vars": ["n"], "lhs": {"qexp": {"A": "1"}, "den": []},
         "rhs": [], "meta": {}},
    ]}
    p = tmp_path / "dup.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(RegistryError, match="duplicate"):
        load_registry(p)


def test_load_rejects_noncoercive(tmp_path):
    doc = {"identities": [
        {"id": "BAD", "vars": ["n"], "lhs": {"qexp": {"A": "0"}, "den": []},
         "rhs": [], "meta": {}},
    ]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(RegistryError, match="coercive"):
        load_registry(p)


def test_load_empty_file(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    assert load_registry(p) == []


def test_load_parse_error_context(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(RegistryError, match="line"):
        load_registry(p)


def brute_double_sum(qexp, pochs_num, pochs_den, units, T):
    """Nested-loop oracle over the lattice with Fraction dict arithmetic.

    qexp(n, r) -> Fraction; pochs give lists of ((coeff, exp) factors)(n, r);
    units(n, r) -> Fraction.  Denominator factors must be unit series.
    """
    total = defaultdict(F)
    n = 0
    while qexp(n, 0) < T:
        r = 0
        while qexp(n, r) < T:
            shift = qexp(n, r)
            term = {F(0): units(n, r)}
            dead = False
            for coeff, exp in pochs_num(n, r):
                new = defaultdict(F, term)
                for e, c in term.items():
                    if e + exp < T - shift:
                        new[e + exp] -= c * coeff
                term = {e: c for e, c in new.items() if c}
                if not term:
                    dead = True
                    break
            if not dead:
                for coeff, exp in pochs_den(n, r):
                    geom = {F(0): F(1)}
                    k, c = exp, coeff
                    while k < T - shift:
                        geom[k] = geom.get(k, F(0)) + c
                        c, k = c * coeff, k + exp
                    new = defaultdict(F)
                    for e1, c1 in term.items():
                        for e2, c2 in geom.items():
                            if e1 + e2 < T - shift:
                                new[e1 + e2] += c1 * c2
                    term = {e: c for e, c in new.items() if c}
                for e, c in term.items():
                    total[e + shift] += c
            r += 1
        n += 1
    return {e: c for e, c in total.items() if c}


def test_rra1_lhs_against_oracle(by_id):
    got = eval_lhs(by_id["RRa1"], 7)
    ref = brute_double_sum(
        lambda n, r: F(n * n) if r == 0 else F(7),   # single-index sum
        lambda n, r: [],
        lambda n, r: [(F(1), F(j + 1)) for j in range(n)],
        lambda n, r: F(1), 7)
    assert {e: c.rational() for e, c in got.terms()} == ref
    assert ref == {F(0): 1, F(1): 1, F(2): 1, F(3): 1, F(4): 2, F(5): 2, F(6): 3}


def test_pns417_negative_index_vanishing(by_id):
    # the (1,1) lattice point has n - 2r = -1 < 0, so it contributes nothing:
    # the sum to q^4 is the n-axis alone
    got = eval_lhs(by_id["PNS417"], 4)
    ref = brute_double_sum(
        lambda n, r: F(n * n + 2 * r * r),
        lambda n, r: [],
        lambda n, r: ([(F(1), F(2 * j + 1)) for j in range(n)]
                      + [(F(1), F(2 * j + 2)) for j in range(r)]
                      + [(F(1), F(4 * j + 2)) for j in range(r)]
                      + [(F(1), F(j + 1)) for j in range(n - 2 * r)])
        if n >= 2 * r else [],
        lambda n, r: F(1) if n >= 2 * r else F(0), 4)
    assert {e: c.rational() for e, c in got.terms()} == ref


def test_ss215_half_integer_lattice(by_id):
    got = eval_lhs(by_id["SS215"], 10)
    # independent oracle on the half-integer lattice
    def qexp(n, r):
        return F(n * n + n, 2) + n * r + F(3 * r * r + r, 2)
    def den(n, r):
        return ([(F(1), F(j + 1)) for j in range(n)]
                + [(F(1), F(j + 1)) for j in range(r)]
                + [(F(1), F(2 * j + 1)) for j in range(r)])
    def num(n, r):
        return [(F(-1), F(j)) for j in range(n + r)]
    ref = brute_double_sum(qexp, num, den, lambda n, r: F(1), 10)
    assert {e: c.rational() for e, c in got.terms()} == ref
    # the exponent form has genuinely fractional coefficients even though its
    # lattice values are integral; the evaluator works on the exact rationals
    assert by_id["SS215"].lhs.qexp.A == F(1, 2)
    assert by_id["SS215"].lhs.qexp.C == F(3, 2)


def test_verify_identity_pass(by_id):
    assert verify_identity(by_id["PNS123"], 60).status == "pass"
    assert verify_identity(by_id["PNS223"], 60).status == "pass"
    assert by_id["PNS223"].meta.get("attribution") == "due to S. O. Warnaar"
    assert by_id["PNS224"].meta.get("attribution") == "due to G. E. Andrews"


def test_verify_identity_corruption(by_id):
    # change the RHS modulus 13 to 12 and watch the mismatch get reported
    e = by_id["PNS224"]
    broken_factors = tuple(
        PochFactor(f.base_unit, f.base_exp, f.step_unit, F(12), f.length, f.power)
        if f.step_exp == 13 else f
        for f in e.rhs.factors)
    bad = IdentitySpec(e.id, e.lhs, ProductSpec(broken_factors), e.meta)
    rep = verify_identity(bad, 30)
    assert rep.status == "fail"
    assert rep.first_mismatch is not None and rep.first_mismatch.exponent is not None


def test_verify_all_full_registry(reg):
    reports = verify_all(reg, 30)
    assert all(r.status == "pass" for r in reports)
    assert [r.id for r in reports] == [e.id for e in reg]


def test_verify_all_vacuous_at_zero(reg):
    reports = verify_all(reg[:5], 0)
    assert all(r.status == "pass" for r in reports)


def test_stability_30_vs_60(reg):
    # doubling the order never flips a pass to fail
    r30 = {r.id: r.status for r in verify_all(reg, 30)}
    r60 = {r.id: r.status for r in verify_all(reg, 60)}
    for k in r30:
        assert not (r30[k] == "pass" and r60[k] != "pass")


def test_triple_product_blocks(by_id):
    blocks = triple_product_blocks(by_id["PNS123"].rhs)
    assert blocks == [(F(4), F(9))]
    blocks = triple_product_blocks(by_id["SS215"].rhs)
    assert blocks == [(F(9), F(18))]


def test_registry_meta_brackets(reg):
    for e in reg:
        assert "dek" in e.meta and "a" in e.meta
        d, eee, k = e.meta["dek"]
        assert min(d, eee, k) >= 1

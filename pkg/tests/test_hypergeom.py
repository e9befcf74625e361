"""phi evaluation against brute force, W expansion, and the six transformations."""

import random
from collections import defaultdict
from fractions import Fraction as F

import pytest

from qbailey.errors import NonTerminatingError, QBaileyError, ZeroDivisorError
from qbailey.hypergeom import (DEFAULT_ASSIGNMENTS, PhiSpec, WSpec, mono,
                               parse_monomial, phi_eval, qpow,
                               transformation_sides, verify_transformation,
                               vwp_order, w_eval)
from qbailey.qseries import QSeries


def brute_phi(uppers, lowers, base, z, T, buffer=24):
    """Independent nested-loop summation with plain Fraction polynomials.

    Parameters are (coeff, exp) pairs with rational coeff; base and z too.
    Works at precision T + buffer so negative-exponent factors cannot pull
    dropped terms back below T, then filters to T at the end.
    """
    W = T + buffer

    def poly_mul_linear(poly, coeff, exp):
        out = defaultdict(F, poly)
        for e, c in poly.items():
            if e + exp < W:
                out[e + exp] -= c * coeff
        return {e: c for e, c in out.items() if c and e < W}

    def poly_div_linear(poly, coeff, exp):
        # divide by (1 - coeff*q^exp), exp > 0, as the geometric series
        lo = min(poly) if poly else F(0)
        geom = {F(0): F(1)}
        k, c = exp, coeff
        while k < W - lo:
            geom[k] = geom.get(k, F(0)) + c
            c *= coeff
            k += exp
        out = defaultdict(F)
        for e1, c1 in poly.items():
            for e2, c2 in geom.items():
                if e1 + e2 < W:
                    out[e1 + e2] += c1 * c2
        return {e: c for e, c in out.items() if c}

    total = defaultdict(F)
    zc, ze = z
    bc, be = base
    for r in range(0, 4 * int(T) + 8):
        term = {F(0): F(1)}
        dead = False
        for uc, ue in uppers:
            cc, ee = uc, ue
            for _ in range(r):
                if ee == 0 and cc == 1:
                    dead = True
                term = poly_mul_linear(term, cc, ee)
                cc, ee = cc * bc, ee + be
        if dead:
            break
        for lc, le in [(bc, be)] + list(lowers):
            cc, ee = lc, le
            for _ in range(r):
                term = poly_div_linear(term, cc, ee)
                cc, ee = cc * bc, ee + be
        wc, we = zc ** r, ze * r
        for e, c in term.items():
            if e + we < W:
                total[e + we] += c * wc
        if we >= W:
            break
    return {e: c for e, c in total.items() if c and e < T}


def test_phi_r0_term_is_one():
    spec = PhiSpec((qpow(3), qpow(2)), (qpow(4),), qpow(1), qpow(2))
    got = phi_eval(spec, F(1, 2))
    assert got == QSeries.one(F(1, 2))


def test_phi_terminating_rule():
    # upper q^{-2} kills all terms with r >= 3; the oracle sums them anyway
    # and lands on the same series
    spec = PhiSpec((qpow(-2), qpow(1)), (qpow(3),), qpow(1), qpow(5))
    full = phi_eval(spec, 40)
    ref = brute_phi([(F(1), F(-2)), (F(1), F(1))], [(F(1), F(3))],
                    (F(1), F(1)), (F(1), F(5)), 40)
    assert {e: c.rational() for e, c in full.terms()} == ref


def test_phi_brute_force_oracle():
    spec = PhiSpec((qpow(1), qpow(1)), (qpow(2),), qpow(1), qpow(1))
    got = phi_eval(spec, 5)
    ref = brute_phi([(F(1), F(1)), (F(1), F(1))], [(F(1), F(2))],
                    (F(1), F(1)), (F(1), F(1)), 5)
    assert {e: c.rational() for e, c in got.terms()} == ref


def test_phi_nonterminating_needs_positive_argument():
    spec = PhiSpec((qpow(1), qpow(1)), (qpow(2),), qpow(1), qpow(0))
    with pytest.raises(NonTerminatingError):
        phi_eval(spec, 10)


def test_phi_denominator_zero():
    spec = PhiSpec((qpow(-3), qpow(1)), (qpow(0),), qpow(1), qpow(1))
    with pytest.raises(ZeroDivisorError):
        phi_eval(spec, 10)


def test_phi_max_terms_guard():
    spec = PhiSpec((qpow(1), qpow(1)), (qpow(2),), qpow(1), qpow(F(1, 7)))
    with pytest.raises(NonTerminatingError):
        phi_eval(spec, 40, max_terms=5)


def test_w_equals_definitional_expansion():
    # tail exponents stay at most exp(a) so no lower parameter aq/t hits 1
    rng = random.Random(17)
    for _ in range(20):
        m = rng.randint(1, 3)
        a = qpow(2 * m)
        tail = tuple(qpow(rng.randint(1, 2 * m)) for _ in range(rng.randint(1, 3))) \
            + (qpow(-rng.randint(1, 3)),)
        w = WSpec(a, tail, qpow(1), qpow(rng.randint(1, 2)))
        assert w_eval(w, 25) == phi_eval(w.expand(), 25)


def test_w_terminating_rational():
    # a = q^2: the inserted pattern is q^2, -q^2 over q, -q
    w = WSpec(qpow(2), (qpow(1), qpow(-3)), qpow(1), qpow(2))
    got = w_eval(w, 30)
    ref = brute_phi([(F(1), F(2)), (F(1), F(2)), (F(-1), F(2)),
                     (F(1), F(1)), (F(1), F(-3))],
                    [(F(1), F(1)), (F(-1), F(1)), (F(1), F(2)), (F(1), F(6))],
                    (F(1), F(1)), (F(1), F(2)), 30)
    assert {e: c.rational() for e, c in got.terms()} == ref
    assert got.is_rational()


def test_w_empty_tail():
    w = WSpec(qpow(2), (), qpow(1), qpow(3))
    assert not w_eval(w, 15).is_zero()


def test_w_rejects_rootless_unit():
    with pytest.raises(QBaileyError):
        w_eval(WSpec(mono("i", 2), (qpow(-2),), qpow(1), qpow(1)), 10)


def test_vwp_order():
    assert vwp_order(2, 1, 5) == 9
    assert vwp_order(1, 1, 2) == 5
    assert vwp_order(1, 2, 3) == 7
    with pytest.raises(QBaileyError):
        vwp_order(0, 1, 1)


def test_all_transformations_default_assignments():
    for tid, cases in DEFAULT_ASSIGNMENTS.items():
        for asg_text, n in cases:
            asg = {k: parse_monomial(v) for k, v in asg_text.items()}
            v = verify_transformation(tid, asg, n, 40)
            assert v.equal, (tid, asg_text, n, v)


def test_transformation_corruption_detected():
    base = {k: parse_monomial(v)
            for k, v in DEFAULT_ASSIGNMENTS["WQW"][0][0].items()}
    n = DEFAULT_ASSIGNMENTS["WQW"][0][1]
    lhs, _ = transformation_sides("WQW", base, n, 40)
    bad = dict(base)
    bad["d"] = parse_monomial("2*q^3")
    _, rhs_bad = transformation_sides("WQW", bad, n, 40)
    t = min(lhs.order, rhs_bad.order)
    assert not lhs.equal_to_order(rhs_bad, t).equal


def test_vj3_rational_and_omega():
    asg = {k: parse_monomial(v) for k, v in DEFAULT_ASSIGNMENTS["VJ3"][0][0].items()}
    lhs, rhs = transformation_sides("VJ3", asg, 2, 40)
    assert lhs.is_rational() and rhs.is_rational()


def test_incomplete_assignment():
    with pytest.raises(QBaileyError):
        verify_transformation("WQW", {"a": qpow(4)}, 3, 20)
    with pytest.raises(QBaileyError):
        verify_transformation("NOPE", {}, 1, 20)

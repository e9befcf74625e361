#!/usr/bin/env python3
"""Regenerate the bundled registry data files.

Writes src/qbailey/data/identities.json (the identity catalog) and
src/qbailey/data/bailey_pairs.json (the closed beta formulas).  Kept as a
script so the data files stay reviewable and reproducible.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "qbailey", "data")


def LF(n=0, r=0, c=0):
    d = {}
    if n:
        d["n"] = n
    if r:
        d["r"] = r
    if c:
        d["c"] = c
    return d


def F(bu, be, se, n=0, r=0, c=0, power=1, apow=0, su="1"):
    """Finite Pochhammer ((bu*a^apow)*q^be; su*q^se)_{n*N + r*R + c}."""
    d = {"base_unit": str(bu), "base_exp": str(be), "step_exp": str(se),
         "length": LF(n, r, c)}
    if su != "1":
        d["step_unit"] = str(su)
    if power != 1:
        d["power"] = power
    if apow:
        d["apow"] = apow
    return d


def QX(A=0, B=0, C=0, D=0, E=0, F_=0):
    d = {}
    for k, v in (("A", A), ("B", B), ("C", C), ("D", D), ("E", E), ("F", F_)):
        if v:
            d[k] = str(v)
    return d


def U(unit, n=0, r=0, c=0):
    return {"unit": unit, "power": LF(n, r, c)}


def T(a, m):
    """Triple product block (q^a, q^{m-a}, q^m; q^m)_inf as factor dicts."""
    if 2 * a == m:
        return [{"base_unit": "1", "base_exp": str(a), "step_unit": "1",
                 "step_exp": str(m), "length": "inf", "power": 2},
                {"base_unit": "1", "base_exp": str(m), "step_unit": "1",
                 "step_exp": str(m), "length": "inf", "power": 1}]
    return [{"base_unit": "1", "base_exp": str(e), "step_unit": "1",
             "step_exp": str(m), "length": "inf", "power": 1}
            for e in (a, m - a, m)]


def X(bu, be, se, power=1):
    return [{"base_unit": str(bu), "base_exp": str(be), "step_unit": "1",
             "step_exp": str(se), "length": "inf", "power": power}]


def E(s):
    return X("1", s, s, power=-1)


def ident(id_, qexp, den, num=(), units=(), rhs=(), vars_=("n", "r"), **meta):
    lhs = {"qexp": qexp}
    if units:
        lhs["units"] = list(units)
    if num:
        lhs["num"] = list(num)
    lhs["den"] = list(den)
    return {"id": id_, "vars": list(vars_), "lhs": lhs, "rhs": list(rhs),
            "meta": meta}


IDENTITIES = [
    # -- the classical pair of anchors ------------------------------------
    ident("RRa1", QX(A=1), [F(1, 1, 1, n=1)], rhs=T(2, 5) + E(1), vars_=("n",),
          dek=[1, 1, 2], a="1", rho1="inf", rho2="inf", N="inf",
          lemma_check=True, rescale="1"),
    ident("RRa2", QX(A=1, D=1), [F(1, 1, 1, n=1)], rhs=T(1, 5) + E(1), vars_=("n",),
          dek=[1, 1, 2], a="q", rho1="inf", rho2="inf", N="inf"),

    # -- the six display examples ------------------------------------------
    ident("ex1", QX(A=2, B=4, C=3),
          [F(-1, 1, 1, n=1, r=1), F(-1, 1, 1, n=1, r=2), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1)],
          rhs=T(4, 9) + E(2),
          dek=[1, 2, 3], a="1", rho1="inf", rho2="inf", N="inf",
          lemma_check=True, rescale="1", note="same identity as PNS123"),
    ident("ex2", QX(A=1, B=4, C=3),
          [F(1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(1, 2, 2, n=1)],
          num=[F(-1, 1, 1, n=2, r=2, su="-1")],
          rhs=T(6, 14) + X(1, 2, 4) + E(1),
          dek=[2, 2, 3], a="1", rho1="inf", rho2="-q", N="inf",
          lemma_check=True, rescale="1", note="signed-step form of ATNS223"),
    ident("ex3", QX(A=3, B=6, C=6),
          [F(1, 3, 3, r=2), F(1, 3, 3, r=1), F(1, 3, 3, n=1)],
          num=[F(1, 1, 1, r=3)],
          rhs=T(7, 15) + E(3),
          dek=[1, 3, 5], a="1", rho1="inf", rho2="inf", N="inf",
          lemma_check=True, rescale="1", note="same identity as PNS135"),
    ident("ex4", QX(A=2, B=4, C=3),
          [F(-1, 1, 1, n=2, r=2), F(1, 1, 2, r=1), F(1, 1, 1, r=1), F(1, 2, 2, n=1)],
          rhs=T(14, 30) + E(2),
          dek=[2, 2, 5], a="1", rho1="inf", rho2="inf", N="inf",
          lemma_check=True, rescale="1", note="same identity as PNS225"),
    ident("ex5", QX(A=1, B=2, C=3),
          [F(1, 2, 2, n=1), F(1, 2, 2, r=1), F(1, 2, 4, r=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          rhs=T(16, 36) + X(1, 2, 4) + E(1),
          dek=[2, 1, 5], a="1", rho1="inf", rho2="-q^(1/2)", N="inf",
          lemma_check=True, rescale="2", note="same identity as ATNS215"),
    ident("ex6", QX(A=1, C=2),
          [F(1, 1, 2, n=1), F(1, 2, 2, r=1), F(1, 2, 4, r=1), F(1, 1, 1, n=1, r=-2)],
          rhs=T(28, 60) + E(1),
          dek=[4, 1, 7], a="1", rho1="inf", rho2="inf", N="inf",
          lemma_check=True, rescale="1", source_typo="(q^2,q^4)_r read as (q^2;q^4)_r",
          note="same identity as PNS417"),

    # -- the catalog, in increasing modulus order ---------------------------
    ident("ATNS123", QX(A=1, B=2, C=2),
          [F(-1, 1, 1, n=1, r=1), F(-1, 1, 1, n=1, r=2), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          rhs=T(3, 7) + X(-1, 1, 2) + E(2),
          dek=[1, 2, 3], a="1", rho1="inf", rho2="-q", N="inf"),
    ident("PNS131", QX(A="5/2", D="-1/2", B=4, C=2),
          [F(1, 3, 3, n=1, r=1), F(1, 3, 3, n=1, r=2), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1), F(1, 1, 1, n=2, r=2)],
          num=[F(1, 1, 1, n=1, r=1), F(1, 1, 1, n=1, r=2), F(1, 1, 1, n=2, r=3)],
          units=[U("-1", n=1)],
          rhs=T(3, 7) + E(3),
          dek=[1, 3, 1], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS131", QX(A=2, D=-1, B=2, C=1),
          [F(1, 6, 6, n=1, r=1), F(1, 6, 6, n=1, r=2), F(1, 2, 2, n=1),
           F(1, 2, 2, r=1), F(1, 2, 2, n=2, r=2)],
          num=[F(-1, 3, 6, n=1, r=1), F(1, 2, 2, n=1, r=1), F(1, 2, 2, n=1, r=2),
               F(1, 2, 2, n=2, r=3)],
          units=[U("-1", n=1)],
          rhs=T(3, 8) + X(-1, 3, 6) + E(6),
          dek=[1, 3, 1], a="1", rho1="inf", rho2="-q^(3/2)", N="inf"),
    ident("PNS123-2", QX(A=2, D=2, B=4, C=3, E=3),
          [F(-1, 1, 1, n=1, r=1), F(-1, 1, 1, n=1, r=2, c=1), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1)],
          rhs=T(1, 9) + E(2),
          dek=[1, 2, 3], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS123", QX(A=2, B=4, C=3),
          [F(-1, 1, 1, n=1, r=1), F(-1, 1, 1, n=1, r=2), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1)],
          rhs=T(4, 9) + E(2),
          dek=[1, 2, 3], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS124", QX(A=1, B=2, C=3),
          [F(-1, 1, 1, r=2), F(1, 2, 2, n=1), F(1, 2, 2, r=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          rhs=T(4, 9) + X(-1, 1, 2) + E(2),
          dek=[1, 2, 4], a="1", rho1="inf", rho2="-q", N="inf"),
    ident("PNS141-2", QX(A=6, B=8, C=5, D=4, E=4),
          [F(-1, 2, 2, n=2, r=2, c=1), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, c=1),
           F(1, 4, 4, n=1)],
          units=[U("-1", n=1, r=1)],
          rhs=T(1, 9) + E(4),
          dek=[1, 4, 1], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS141", QX(A=6, B=8, C=5),
          [F(-1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2), F(1, 4, 4, n=1)],
          units=[U("-1", n=1, r=1)],
          rhs=T(4, 9) + E(4),
          dek=[1, 4, 1], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS222", QX(A=2, B=2, C="3/2", E="-1/2"),
          [F(-1, 1, 1, n=2, r=2), F(1, 1, 1, r=1), F(1, 1, 2, r=1), F(1, 2, 2, n=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          units=[U("-1", n=1)],
          rhs=T(4, 10) + X(-1, 1, 2) + E(2),
          dek=[2, 2, 2], a="1", rho1="inf", rho2="-q", N="inf"),
    ident("ATNS141", QX(A=8, B=8, C=6),
          [F(-1, 4, 4, n=2, r=2), F(1, 4, 4, r=1), F(-1, 2, 2, r=2), F(1, 8, 8, n=1)],
          num=[F(-1, 4, 8, n=1, r=1)],
          units=[U("-1", n=1, r=1)],
          rhs=T(4, 10) + X(-1, 4, 8) + E(8),
          dek=[1, 4, 1], a="1", rho1="inf", rho2="-q^2", N="inf"),
    ident("PNS223-2", QX(A=1, B=3, C=2, D=2, E=3),
          [F(1, 1, 1, n=2, r=2, c=2), F(1, 1, 1, r=1), F(1, 1, 1, n=1)],
          num=[F(1, 1, 1, n=1, r=1, c=1)],
          rhs=T(1, 11) + E(1),
          dek=[2, 2, 3], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS223", QX(A=1, B=3, C=2),
          [F(1, 1, 1, n=2, r=2), F(1, 1, 1, r=1), F(1, 1, 1, n=1)],
          num=[F(1, 1, 1, n=1, r=1)],
          rhs=T(5, 11) + E(1),
          dek=[2, 2, 3], a="1", rho1="inf", rho2="inf", N="inf",
          attribution="due to S. O. Warnaar"),
    ident("PNS124-2", QX(A=2, D=2, B=4, C=4, E=4),
          [F(-1, 1, 1, r=2, c=1), F(1, 2, 2, n=1), F(1, 2, 2, r=1)],
          rhs=T(1, 11) + E(2),
          dek=[1, 2, 4], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS133-2", QX(A=3, B=6, C=4, D=3, E=4),
          [F(1, 3, 3, n=1, r=1), F(1, 3, 3, n=1, r=2, c=1), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1), F(1, 1, 1, n=2, r=2, c=1)],
          num=[F(1, 1, 1, n=1, r=1), F(1, 1, 1, n=2, r=3, c=1),
               F(1, 1, 1, n=1, r=2, c=1)],
          rhs=T(1, 11) + E(3),
          dek=[1, 3, 3], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS133", QX(A=3, B=6, C=4),
          [F(1, 3, 3, n=1, r=1), F(1, 3, 3, n=1, r=2), F(1, 1, 1, n=1),
           F(1, 1, 1, r=1), F(1, 1, 1, n=2, r=2)],
          num=[F(1, 1, 1, n=1, r=1), F(1, 1, 1, n=2, r=3), F(1, 1, 1, n=1, r=2)],
          rhs=T(5, 11) + E(3),
          dek=[1, 3, 3], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("PNS142", QX(A=5, B=8, C=4),
          [F(1, 4, 4, n=1, r=1), F("i", 1, 1, n=2, r=2, power=2), F(1, 1, 1, r=1),
           F("-i", 1, 1, n=1, r=2), F(-1, 1, 1, n=1, r=2), F(1, 1, 1, n=1),
           F("i", 1, 1, n=1)],
          num=[F("i", 1, 1, n=1, r=1), F(1, 1, 1, n=1, r=1), F("i", 1, 1, n=2, r=3)],
          units=[U("i", n=1)],
          rhs=T(5, 11) + E(4),
          dek=[1, 4, 2], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS144", QX(A=2, B=4, C=4),
          [F(-1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2), F(1, 4, 4, n=1)],
          num=[F(-1, 2, 4, n=1, r=1)],
          rhs=T(5, 11) + X(-1, 2, 4) + E(4),
          dek=[1, 4, 4], a="1", rho1="inf", rho2="-q^2", N="inf"),
    ident("ATNS163", QX(A=3, B=6, C=6),
          [F(1, 6, 6, n=2, r=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2), F(1, 6, 6, n=1)],
          num=[F(-1, 3, 6, n=1, r=1), F(1, 2, 2, n=3, r=2)],
          units=[U("-1", r=1)],
          rhs=T(5, 11) + X(-1, 3, 6) + E(6),
          dek=[1, 6, 3], a="1", rho1="inf", rho2="-q^3", N="inf"),
    ident("PNS224-2", QX(A=1, B=2, C=2, D=2, E=3),
          [F(1, 1, 1, n=2, r=2, c=2), F(1, 1, 1, r=1), F(1, 1, 1, n=1)],
          num=[F(1, 1, 1, n=1, r=1, c=1)],
          rhs=T(1, 13) + E(1),
          dek=[2, 2, 4], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS224", QX(A=1, B=2, C=2),
          [F(1, 1, 1, n=2, r=2), F(1, 1, 1, r=1), F(1, 1, 1, n=1)],
          num=[F(1, 1, 1, n=1, r=1)],
          rhs=T(6, 13) + E(1),
          dek=[2, 2, 4], a="1", rho1="inf", rho2="inf", N="inf",
          attribution="due to G. E. Andrews"),
    ident("PNS143", QX(A=4, B=8, C=5),
          [F(1, 4, 4, n=1, r=1), F("i", 1, 1, n=2, r=2, power=2), F(1, 1, 1, r=1),
           F("-i", 1, 1, n=1, r=2), F(-1, 1, 1, n=1, r=2), F(1, 1, 1, n=1),
           F("i", 1, 1, n=1)],
          num=[F("i", 1, 1, n=1, r=1), F(1, 1, 1, n=1, r=1), F("i", 1, 1, n=2, r=3)],
          rhs=T(6, 13) + E(4),
          dek=[1, 4, 3], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS164", QX(A=3, B=6, C=5),
          [F(1, 6, 6, n=2, r=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2), F(1, 6, 6, n=1)],
          num=[F(-1, 3, 6, n=1, r=1), F(1, 2, 2, n=3, r=2)],
          rhs=T(6, 13) + X(-1, 3, 6) + E(6),
          dek=[1, 6, 4], a="1", rho1="inf", rho2="-q^3", N="inf"),
    ident("ATNS223", QX(A=1, B=4, C=3),
          [F(1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(1, 2, 2, n=1)],
          num=[F(-1, 1, 2, n=1, r=1), F(1, 2, 2, n=1, r=1)],
          rhs=T(6, 14) + X(-1, 1, 2) + E(2),
          dek=[2, 2, 3], a="1", rho1="inf", rho2="-q", N="inf"),
    ident("ATNS142", QX(A=6, B=8, C=4),
          [F(1, 8, 8, n=1, r=1), F("i", 2, 2, n=2, r=2, power=2), F(1, 2, 2, r=1),
           F("-i", 2, 2, n=1, r=2), F(-1, 2, 2, n=1, r=2), F(1, 2, 2, n=1),
           F("i", 2, 2, n=1)],
          num=[F(-1, 4, 8, n=1, r=1), F("i", 2, 2, n=1, r=1), F(1, 2, 2, n=1, r=1),
               F("i", 2, 2, n=2, r=3)],
          units=[U("i", n=1)],
          rhs=T(6, 14) + X(-1, 4, 8) + E(8),
          dek=[1, 4, 2], a="1", rho1="inf", rho2="-q^2", N="inf"),
    ident("PNS135-2", QX(A=3, B=6, C=6, D=3, E=6),
          [F(1, 3, 3, r=2, c=1), F(1, 3, 3, r=1), F(1, 3, 3, n=1)],
          num=[F(1, 1, 1, r=3, c=1)],
          rhs=T(1, 15) + E(3),
          dek=[1, 3, 5], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS135", QX(A=3, B=6, C=6),
          [F(1, 3, 3, r=2), F(1, 3, 3, r=1), F(1, 3, 3, n=1)],
          num=[F(1, 1, 1, r=3)],
          rhs=T(7, 15) + E(3),
          dek=[1, 3, 5], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("PNS144-2", QX(A=4, B=8, C=6, D=4, E=6),
          [F(-1, 2, 2, n=2, r=2, c=1), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, c=1),
           F(1, 4, 4, n=1)],
          rhs=T(1, 15) + E(4),
          dek=[1, 4, 4], a="q", rho1="inf", rho2="inf", N="inf"),
    ident("PNS144", QX(A=4, B=8, C=6),
          [F(-1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2), F(1, 4, 4, n=1)],
          rhs=T(7, 15) + E(4),
          dek=[1, 4, 4], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS133", QX(A=3, B=6, C=5),
          [F(1, 6, 6, n=1, r=1), F(1, 6, 6, n=1, r=2), F(1, 2, 2, n=1),
           F(1, 2, 2, r=1), F(1, 2, 2, n=2, r=2)],
          num=[F(-1, 3, 6, n=1, r=1), F(1, 2, 2, n=1, r=1), F(1, 2, 2, n=2, r=3),
               F(1, 2, 2, n=1, r=2)],
          rhs=T(7, 16) + X(-1, 3, 6) + E(6),
          dek=[1, 3, 3], a="1", rho1="inf", rho2="-q^(3/2)", N="inf"),
    ident("PNS222-2", QX(A=3, D=4, B=4, C="5/2", E="7/2"),
          [F(-1, 1, 1, n=2, r=2, c=2), F(1, 1, 1, r=1), F(1, 1, 2, r=1, c=1),
           F(1, 2, 2, n=1)],
          units=[U("-1", n=1)],
          rhs=T(2, 18) + E(2),
          dek=[2, 2, 2], a="q^2", rho1="inf", rho2="inf", N="inf"),
    ident("PNS222", QX(A=3, B=4, C="5/2", E="-1/2"),
          [F(-1, 1, 1, n=2, r=2), F(1, 1, 1, r=1), F(1, 1, 2, r=1), F(1, 2, 2, n=1)],
          units=[U("-1", n=1)],
          rhs=T(8, 18) + E(2),
          dek=[2, 2, 2], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS143", QX(A=4, B=8, C=6),
          [F(1, 8, 8, n=1, r=1), F("i", 2, 2, n=2, r=2, power=2), F(1, 2, 2, r=1),
           F("-i", 2, 2, n=1, r=2), F(-1, 2, 2, n=1, r=2), F(1, 2, 2, n=1),
           F("i", 2, 2, n=1)],
          num=[F(-1, 4, 8, n=1, r=1), F("i", 2, 2, n=1, r=1), F(1, 2, 2, n=1, r=1),
               F("i", 2, 2, n=2, r=3)],
          rhs=T(8, 18) + X(-1, 4, 8) + E(8),
          dek=[1, 4, 3], a="1", rho1="inf", rho2="-q^2", N="inf"),
    ident("ATNS224", QX(A=1, B=2, C=3),
          [F(1, 2, 2, n=2, r=2), F(1, 2, 2, r=1), F(1, 2, 2, n=1)],
          num=[F(-1, 1, 2, n=1, r=1), F(1, 2, 2, n=1, r=1)],
          rhs=T(8, 18) + X(-1, 1, 2) + E(2),
          dek=[2, 2, 4], a="1", rho1="inf", rho2="-q", N="inf"),
    ident("SS215", QX(A="1/2", D="1/2", B=1, C="3/2", E="1/2"),
          [F(1, 1, 1, n=1), F(1, 1, 1, r=1), F(1, 1, 2, r=1)],
          num=[F(-1, 0, 1, n=1, r=1)],
          rhs=T(9, 18) + X(-1, 1, 1) + E(1),
          dek=[2, 1, 5], a="1", rho1="inf", rho2="-1", N="inf"),
    ident("ATNS225", QX(A=1, B=2, C=2),
          [F(-1, 1, 1, n=2, r=2), F(1, 1, 2, r=1), F(1, 1, 1, r=1), F(1, 2, 2, n=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          rhs=T(10, 22) + X(-1, 1, 2) + E(2),
          dek=[2, 2, 5], a="1", rho1="inf", rho2="-q", N="inf",
          source_typo="printed (q;q)_n corrected to (q^2;q^2)_n; "
                       "the printed form already fails at q^2"),
    ident("ATNS135", QX(A=3, B=6, C=9),
          [F(1, 6, 6, r=2), F(1, 6, 6, r=1), F(1, 6, 6, n=1)],
          num=[F(-1, 3, 6, n=1, r=1), F(1, 2, 2, r=3)],
          rhs=T(11, 24) + X(-1, 3, 6) + E(6),
          dek=[1, 3, 5], a="1", rho1="inf", rho2="-q^(3/2)", N="inf"),
    ident("PNS225-2", QX(A=2, B=4, C=3, D=4, E=6),
          [F(-1, 1, 1, n=2, r=2, c=2), F(1, 1, 2, r=1, c=1), F(1, 1, 1, r=1),
           F(1, 2, 2, n=1)],
          rhs=T(2, 30) + E(2),
          dek=[2, 2, 5], a="q^2", rho1="inf", rho2="inf", N="inf"),
    ident("PNS225", QX(A=2, B=4, C=3),
          [F(-1, 1, 1, n=2, r=2), F(1, 1, 2, r=1), F(1, 1, 1, r=1), F(1, 2, 2, n=1)],
          rhs=T(14, 30) + E(2),
          dek=[2, 2, 5], a="1", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS215", QX(A=1, B=2, C=3),
          [F(1, 2, 2, n=1), F(1, 2, 2, r=1), F(1, 2, 4, r=1)],
          num=[F(-1, 1, 2, n=1, r=1)],
          rhs=T(16, 36) + X(-1, 1, 2) + E(2),
          dek=[2, 1, 5], a="1", rho1="inf", rho2="-q^(1/2)", N="inf"),
    ident("SS417", QX(A="1/2", D="1/2", C=2),
          [F(1, 1, 2, n=1), F(1, 2, 2, r=1), F(1, 2, 4, r=1), F(1, 1, 1, n=1, r=-2)],
          num=[F(-1, 0, 1, n=1)],
          rhs=T(22, 44) + X(-1, 1, 1) + E(1),
          dek=[4, 1, 7], a="1", rho1="inf", rho2="-1", N="inf",
          source_typo="(q^2,q^4)_r read as (q^2;q^4)_r"),
    ident("PNS417-2", QX(A=1, C=2, D=4, E=4),
          [F(1, 1, 2, n=1, c=2), F(1, 2, 2, r=1), F(1, 2, 4, r=1, c=1),
           F(1, 1, 1, n=1, r=-2)],
          rhs=T(4, 60) + E(1),
          dek=[4, 1, 7], a="q^4", rho1="inf", rho2="inf", N="inf",
          source_typo="(q^2,q^4)_{r+1} read as (q^2;q^4)_{r+1}"),
    ident("PNS417", QX(A=1, C=2),
          [F(1, 1, 2, n=1), F(1, 2, 2, r=1), F(1, 2, 4, r=1), F(1, 1, 1, n=1, r=-2)],
          rhs=T(28, 60) + E(1),
          dek=[4, 1, 7], a="1", rho1="inf", rho2="inf", N="inf",
          source_typo="(q^2,q^4)_r read as (q^2;q^4)_r"),
    ident("PNS327", QX(A=2, B=4, C=3, D=6, E=9),
          [F(-1, 1, 1, n=2, r=2, c=3), F(1, 1, 1, r=2, c=2), F(1, 1, 1, r=1),
           F(1, 2, 2, n=1)],
          num=[F(1, 3, 3, r=1)],
          rhs=T(3, 63) + E(2),
          dek=[3, 2, 7], a="q^3", rho1="inf", rho2="inf", N="inf"),
    ident("PNS337", QX(A=3, B=6, C=4, D=9, E=12),
          [F(1, 3, 3, n=2, r=2, c=3), F(1, 1, 1, r=1), F(1, 1, 1, r=2, c=2),
           F(1, 3, 3, n=1)],
          num=[F(1, 3, 3, r=1), F(1, 1, 1, n=3, r=2, c=3)],
          rhs=T(3, 81) + E(3),
          dek=[3, 3, 7], a="q^3", rho1="inf", rho2="inf", N="inf"),
    ident("ATNS417", QX(A=1, C=4),
          [F(1, 2, 4, n=1), F(1, 4, 4, r=1), F(1, 4, 8, r=1), F(1, 2, 2, n=1, r=-2)],
          num=[F(-1, 1, 2, n=1)],
          rhs=T(40, 88) + X(-1, 1, 2) + E(2),
          dek=[4, 1, 7], a="1", rho1="inf", rho2="-q^(1/2)", N="inf"),
]


def beta(id_, dek, qexp, den, num=(), units=(), apow=None):
    b = {"qexp": qexp}
    if units:
        b["units"] = list(units)
    if apow is not None:
        b["apow"] = apow
    if num:
        b["num"] = list(num)
    b["den"] = list(den)
    return {"id": id_, "dek": list(dek), "beta": b}


PAIRS = [
    beta("BP123", (1, 2, 3), QX(C=1),
         [F(-1, 1, 1, n=1), F(1, 1, 1, r=1), F(1, 1, 1, n=1, r=-1),
          F(-1, 1, 1, n=1, r=1, apow=1)],
         apow=LF(r=1)),
    beta("BP124", (1, 2, 4), QX(C=2),
         [F(-1, 1, 1, r=2, apow=1), F(1, 2, 2, r=1), F(1, 2, 2, n=1, r=-1)],
         apow=LF(r=2)),
    beta("BP131", (1, 3, 1), QX(A="-1/2", D="-1/2", C="1/2", E="1/2", B=-1),
         [F(1, 3, 3, n=1), F(1, 1, 1, n=2, apow=1), F(1, 3, 3, n=1, r=1, apow=3),
          F(1, 1, 1, r=1), F(1, 1, 1, n=1, r=-1)],
         num=[F(1, 1, 1, n=1), F(1, 1, 1, n=1, r=1, apow=1),
              F(1, 1, 1, n=2, r=1, apow=1)],
         units=[U("-1", n=1, r=1)],
         apow=LF(n=-1)),
    # printed prefactor (aq;q)_n corrected to (q;q)_n; only the latter matches
    # the defining sum away from a = 1 (and the a = q identity's plain (q;q)_{n+r})
    beta("BP133", (1, 3, 3), QX(C=1),
         [F(1, 1, 1, n=2, apow=1), F(1, 3, 3, n=1), F(1, 3, 3, n=1, r=1, apow=3),
          F(1, 1, 1, r=1), F(1, 1, 1, n=1, r=-1)],
         num=[F(1, 1, 1, n=1), F(1, 1, 1, n=2, r=1, apow=1),
              F(1, 1, 1, n=1, r=1, apow=1)],
         apow=LF(r=1)),
    beta("BP135", (1, 3, 5), QX(C=3),
         [F(1, 3, 3, r=2, apow=3), F(1, 3, 3, r=1), F(1, 3, 3, n=1, r=-1)],
         num=[F(1, 1, 1, r=3, apow=1)],
         apow=LF(r=3)),
    beta("BP141", (1, 4, 1), QX(A=2, C=3, B=-4),
         [F(-1, 2, 2, n=2, apow=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, apow=1),
          F(1, 4, 4, n=1, r=-1)],
         units=[U("-1", n=1)]),
    beta("BP142", (1, 4, 2), QX(A=1, C=1, B=-2),
         [F(1, 4, 4, n=1), F("i", 1, 1, n=2, power=2, apow=1), F(1, 1, 1, r=1),
          F("-i", 1, 1, n=1, r=1, apow=1), F(-1, 1, 1, n=1, r=1, apow=1),
          F(1, 1, 1, n=1, r=-1), F("i", 1, 1, n=1, r=-1)],
         num=[F("i", 1, 1, n=1), F(1, 1, 1, n=1), F("i", 1, 1, n=2, r=1, apow=1)],
         units=[U("i", n=1), U("-i", r=1)]),
    beta("BP143", (1, 4, 3), QX(C=1),
         [F(1, 4, 4, n=1), F("i", 1, 1, n=2, power=2, apow=1), F(1, 1, 1, r=1),
          F("-i", 1, 1, n=1, r=1, apow=1), F(-1, 1, 1, n=1, r=1, apow=1),
          F(1, 1, 1, n=1, r=-1), F("i", 1, 1, n=1, r=-1)],
         num=[F("i", 1, 1, n=1), F(1, 1, 1, n=1), F("i", 1, 1, n=2, r=1, apow=1)],
         apow=LF(r=1)),
    beta("BP144", (1, 4, 4), QX(C=2),
         [F(-1, 2, 2, n=2, apow=2), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, apow=1),
          F(1, 4, 4, n=1, r=-1)],
         apow=LF(r=2)),
    beta("BP163", (1, 6, 3), QX(C=3),
         [F(1, 6, 6, n=2, apow=6), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, apow=1),
          F(1, 6, 6, n=1, r=-1)],
         num=[F(1, 2, 2, n=3, r=-1, apow=2)],
         units=[U("-1", r=1)],
         apow=LF(r=2)),
    beta("BP164", (1, 6, 4), QX(C=2),
         [F(1, 6, 6, n=2, apow=6), F(1, 2, 2, r=1), F(-1, 1, 1, r=2, apow=1),
          F(1, 6, 6, n=1, r=-1)],
         num=[F(1, 2, 2, n=3, r=-1, apow=2)],
         apow=LF(r=2)),
    beta("BP215", (2, 1, 5), QX(C=1),
         [F(1, 1, 1, r=1), F(1, 1, 2, r=1, apow=1), F(1, 1, 1, n=1, r=-1)],
         apow=LF(r=1)),
    beta("BP222", (2, 2, 2), QX(A=1, C="3/2", E="-1/2", B=-2),
         [F(-1, 1, 1, n=2, apow=1), F(1, 1, 2, r=1, apow=1), F(1, 1, 1, r=1),
          F(1, 2, 2, n=1, r=-1)],
         units=[U("-1", n=1, r=1)]),
    beta("BP223", (2, 2, 3), QX(B=2),
         [F(1, 2, 2, n=2, apow=2), F(1, 2, 2, r=1), F(1, 2, 2, n=1, r=-1)],
         num=[F(1, 2, 2, n=1, apow=1)],
         apow=LF(r=1)),
    beta("BP224", (2, 2, 4), QX(C=2),
         [F(1, 2, 2, n=2, apow=2), F(1, 2, 2, r=1), F(1, 2, 2, n=1, r=-1)],
         num=[F(1, 2, 2, n=1, apow=1)],
         apow=LF(r=1)),
    beta("BP225", (2, 2, 5), QX(C=1),
         [F(-1, 1, 1, n=2, apow=1), F(1, 1, 1, r=1), F(1, 1, 2, r=1, apow=1),
          F(1, 2, 2, n=1, r=-1)],
         apow=LF(r=1)),
    beta("BP327", (3, 2, 7), QX(C=1),
         [F(-1, 1, 1, n=2, apow=1), F(1, 0, 1, r=2, apow=1), F(1, 1, 1, r=1),
          F(1, 2, 2, n=1, r=-1)],
         num=[F(1, 0, 3, r=1, apow=1)],
         apow=LF(r=1)),
    # printed weight q^{3n^2+r} corrected to q^{r^2} (the void valuation of the
    # printed form contradicts beta_0 = 1; the corrected weight matches the
    # defining sum and the modulus-81 identity's exponent bookkeeping)
    beta("BP337", (3, 3, 7), QX(C=1),
         [F(1, 3, 3, n=2, apow=3), F(1, 1, 1, r=1), F(1, 0, 1, r=2, apow=1),
          F(1, 3, 3, n=1, r=-1)],
         num=[F(1, 0, 3, r=1, apow=1), F(1, 1, 1, n=3, r=-1, apow=1)],
         apow=LF(r=1)),
    beta("BP417", (4, 1, 7), QX(C=2),
         [F(1, 2, 2, r=1), F(1, 2, 4, r=1, apow=1), F(1, 1, 1, n=1, r=-2)],
         num=[],
         apow=LF(r=1)),
]

# BP417 also carries the 1/(aq;q^2)_n prefactor
PAIRS[-1]["beta"]["den"].append(F(1, 1, 2, n=1, apow=1))


def main():
    os.makedirs(OUT, exist_ok=True)
    with open(os.path.join(OUT, "identities.json"), "w") as fh:
        json.dump({"identities": IDENTITIES}, fh, indent=1)
        fh.write("\n")
    with open(os.path.join(OUT, "bailey_pairs.json"), "w") as fh:
        json.dump({"pairs": PAIRS}, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(IDENTITIES)} identities and {len(PAIRS)} pairs to {OUT}")


if __name__ == "__main__":
    main()

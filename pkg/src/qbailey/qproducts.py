"""q-Pochhammer machinery: rising factorials with signed bases and steps.

A PochFactor denotes ((bu*q^be); (su*q^se))_m ^ power, whose j-th linear
factor is (1 - bu*su^j * q^(be + j*se)).  Negative lengths follow the
standard convention (a;q)_{-m} = 1/((a*q^{-m};q)_m), which is what makes
summands with lengths like n-2r vanish for n < 2r.

Everything downstream (hypergeometric terms, Bailey sums, registry
summands) funnels through `assemble_term`, which multiplies and divides
tagged linear factors into a series at a fixed truncation order.  Tags
distinguish structural zeros (present for every parameter value) from
parametric ones introduced by specializing the symbol a; parametric zeros
cancel pairwise between numerator and denominator, implementing the
removable singularities at a = 1 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyclo, ONE as C_ONE, as_cyclo
from .errors import QBaileyError, ZeroDivisorError
from .qseries import QSeries

INFINITE = None

#: Flag returned by poch_eval when the reciprocal of a vanishing product is
#: demanded; callers either turn it into a vanishing term or raise.
ZERO_DIVISOR = "ZERO-DIVISOR"


@dataclass(frozen=True)
class PochFactor:
    """One symbol ((base_unit*q^base_exp); (step_unit*q^step_exp))_length ^ power."""
    base_unit: Cyclo
    base_exp: Fraction
    step_unit: Cyclo
    step_exp: Fraction
    length: int | None        # None means infinite
    power: int = 1

    def __post_init__(self):
        if self.power == 0:
            raise QBaileyError("PochFactor power must be nonzero")
        if self.length is INFINITE:
            if self.base_exp <= 0:
                raise QBaileyError(
                    f"infinite Pochhammer needs base exponent > 0, got {self.base_exp}")
            if self.step_exp <= 0:
                raise QBaileyError(
                    f"infinite Pochhammer needs step exponent > 0, got {self.step_exp}")


def poch(base_unit, base_exp, step_unit, step_exp, length, power=1) -> PochFactor:
    return PochFactor(as_cyclo(base_unit), Fraction(base_exp),
                      as_cyclo(step_unit), Fraction(step_exp), length, power)


def qpoch(base_exp, step_exp, length, power=1) -> PochFactor:
    """Plain (q^base_exp; q^step_exp)_length ^ power."""
    return poch(1, base_exp, 1, step_exp, length, power)


@dataclass(frozen=True)
class ProductSpec:
    """A product of Pochhammer factors, e.g. an identity's right-hand side."""
    factors: tuple[PochFactor, ...]


# -- linear-factor expansion --------------------------------------------------

def finite_linear_factors(f: PochFactor) -> tuple[bool, list[tuple[Cyclo, Fraction]]]:
    """Linear factors (unit, exp) of a finite symbol at power +1.

    Returns (flip, factors): flip=True means the factors belong on the
    opposite side (the negative-length reciprocal convention).
    """
    m = f.length
    if m is INFINITE:
        raise QBaileyError("finite_linear_factors on an infinite symbol")
    if m >= 0:
        u = f.base_unit
        out = []
        for j in range(m):
            out.append((u, f.base_exp + j * f.step_exp))
            u = u * f.step_unit
        return False, out
    m = -m
    # (a;Q)_{-m} = 1 / ((a*Q^{-m};Q)_m)
    u = f.base_unit * f.step_unit ** (-m)
    out = []
    for j in range(m):
        out.append((u, f.base_exp + (j - m) * f.step_exp))
        u = u * f.step_unit
    return True, out


def infinite_linear_factors(f: PochFactor, order: Fraction) -> list[tuple[Cyclo, Fraction]]:
    """Factors of an infinite symbol with exponent below `order`; the rest are 1."""
    out = []
    u = f.base_unit
    e = f.base_exp
    while e < order:
        out.append((u, e))
        u = u * f.step_unit
        e = e + f.step_exp
    return out


def has_vanishing_factor(f: PochFactor) -> bool:
    """True when the finite symbol (at |length|) contains an exact (1 - 1) factor."""
    m = f.length
    if m is INFINITE:
        return False
    flip, factors = finite_linear_factors(f)
    return any(x == 0 and u == C_ONE for u, x in factors)


# -- term assembly ------------------------------------------------------------

def assemble_term(unit, shift, num, den, order) -> QSeries | None:
    """unit * q^shift * prod(num) / prod(den) truncated at `order`.

    num and den are lists of (unit, exp, parametric) linear factors, each
    standing for (1 - unit*q^exp).  Returns None when the term vanishes.

    Zero policy, in decreasing precedence:
      1. a structural (non-parametric) zero upstairs makes the term vanish;
      2. a structural zero downstairs is a hard error;
      3. parametric zeros cancel pairwise; a leftover upstairs vanishes the
         term, a leftover downstairs is a genuine pole and a hard error.
    """
    unit = as_cyclo(unit)
    shift = Fraction(shift)
    order = Fraction(order)
    if unit.is_zero():
        return None

    nz_param = 0
    dz_param = 0
    num_live: list[tuple[Cyclo, Fraction]] = []
    den_live: list[tuple[Cyclo, Fraction]] = []
    for u, x, parametric in num:
        if x == 0 and u == C_ONE:
            if not parametric:
                return None
            nz_param += 1
        else:
            num_live.append((u, x))
    for u, x, parametric in den:
        if x == 0 and u == C_ONE:
            if not parametric:
                raise ZeroDivisorError("structural zero factor in a denominator")
            dz_param += 1
        else:
            den_live.append((u, x))
    if nz_param > dz_param:
        return None
    if dz_param > nz_param:
        raise ZeroDivisorError(
            f"{dz_param - nz_param} uncancelled parametric zero(s) in a denominator")

    # pull monomials out of negative-exponent and constant factors
    for u, x in num_live:
        if x < 0:
            # (1 - u q^x) = (-u q^x)(1 - q^-x / u)
            unit = unit * (-u)
            shift += x
    for u, x in den_live:
        if x < 0:
            unit = unit * (-u).inverse()
            shift -= x

    if shift >= order:
        return None
    prec = order - shift
    acc = QSeries.constant(unit, prec)
    for u, x in num_live:
        acc = acc.mul_linear(u, x) if x > 0 else (
            acc.scaled(C_ONE - u) if x == 0 else acc.mul_linear(u.inverse(), -x))
    for u, x in den_live:
        acc = acc.div_linear(u, x) if x >= 0 else acc.div_linear(u.inverse(), -x)
    return acc.shifted(shift)


def _plain(factors: list[tuple[Cyclo, Fraction]]) -> list[tuple[Cyclo, Fraction, bool]]:
    return [(u, x, False) for u, x in factors]


# -- public evaluators ---------------------------------------------------------

@lru_cache(maxsize=16384)
def _poch_series(f: PochFactor, order: Fraction):
    num: list = []
    den: list = []
    if f.length is INFINITE:
        factors = infinite_linear_factors(f, order)
        (num if f.power > 0 else den).extend(_plain(factors) * abs(f.power))
    else:
        flip, factors = finite_linear_factors(f)
        reciprocal = flip != (f.power < 0)
        if any(x == 0 and u == C_ONE for u, x in factors):
            return QSeries.zero(order) if not reciprocal else ZERO_DIVISOR
        (den if reciprocal else num).extend(_plain(factors) * abs(f.power))
    out = assemble_term(1, 0, num, den, order)
    return out if out is not None else QSeries.zero(order)


def poch_eval(f: PochFactor, order):
    """Evaluate a finite symbol (any power) truncated at `order`.

    A vanishing product evaluates to the zero series when it sits upstairs
    and to the ZERO_DIVISOR flag when its reciprocal is demanded.
    """
    if f.length is INFINITE:
        raise QBaileyError("poch_eval expects a finite length; use poch_inf")
    return _poch_series(f, Fraction(order))


def poch_inf(f: PochFactor, order) -> QSeries:
    """Evaluate an infinite symbol truncated at `order`."""
    if f.length is not INFINITE:
        raise QBaileyError("poch_inf expects an infinite length")
    return _poch_series(f, Fraction(order))


def product_spec_eval(spec: ProductSpec, order) -> QSeries:
    """Evaluate a full product of factors at `order`.

    A vanishing reciprocal anywhere is a hard error here: right-hand-side
    products never vanish identically.
    """
    order = Fraction(order)
    num: list = []
    den: list = []
    for f in spec.factors:
        if f.length is INFINITE:
            side = num if f.power > 0 else den
            side.extend(_plain(infinite_linear_factors(f, order)) * abs(f.power))
        else:
            flip, factors = finite_linear_factors(f)
            reciprocal = flip != (f.power < 0)
            if reciprocal and any(x == 0 and u == C_ONE for u, x in factors):
                raise ZeroDivisorError("vanishing reciprocal inside a product spec")
            (den if reciprocal else num).extend(_plain(factors) * abs(f.power))
    out = assemble_term(1, 0, num, den, order)
    return out if out is not None else QSeries.zero(order)


def jtp_theta_oracle(a, m, order) -> QSeries:
    """Bilateral theta sum for the triple product (q^a, q^{m-a}, q^m; q^m)_inf.

    Computes sum over all integers j of (-1)^j q^{m j(j-1)/2 + a j},
    an oracle independent of the product evaluator.
    """
    a = Fraction(a)
    m = Fraction(m)
    order = Fraction(order)
    if not (0 < a < m):
        raise QBaileyError(f"need 0 < a < m, got a={a}, m={m}")
    terms: list[tuple[Fraction, Cyclo]] = []
    j = 0
    while True:
        e = m * j * (j - 1) / 2 + a * j
        if e >= order:
            break
        terms.append((e, as_cyclo(1 if j % 2 == 0 else -1)))
        j += 1
    j = -1
    while True:
        e = m * j * (j - 1) / 2 + a * j
        if e >= order:
            break
        terms.append((e, as_cyclo(1 if j % 2 == 0 else -1)))
        j -= 1
    return QSeries.from_terms(terms, order)

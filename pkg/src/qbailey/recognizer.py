"""Euler-product recognition for unit q-series.

product_exponents peels a series f with constant term 1 into the unique
integers c_n with f = prod_{n>=1} (1 - q^n)^{-c_n}, reading c_n off the
current q^n coefficient and clearing it with (1-q^n)^{c_n} before moving
on.  periodicity_fit then looks for the smallest modulus on which the
exponent list is periodic, which is the signature of a Rogers-Ramanujan
type product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import ONE as C_ONE
from .errors import QBaileyError
from .qseries import QSeries


@dataclass(frozen=True)
class SieveResult:
    exponents: list[int]          # c_1 .. c_{T-1}
    rescale: Fraction             # the q -> q^rescale substitution applied first

    def __iter__(self):
        return iter(self.exponents)


def product_exponents(f: QSeries, t_int: int) -> SieveResult:
    """Euler exponents c_1..c_{t_int - 1} of f, rescaling fractional lattices.

    Requires constant term 1; fractional exponents are first cleared by the
    substitution q -> q^L (L the lcm of exponent denominators), and the lcm
    is reported so recovered moduli refer to the rescaled variable.
    """
    if f.coefficient(0) != C_ONE:
        raise QBaileyError("product sieve needs a series with constant term 1")
    rescale = Fraction(1)
    dens = [e.denominator for e, _ in f.terms()] + [f.order.denominator]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    if lcm > 1:
        rescale = Fraction(lcm)
        f = f.scale_exponents(lcm)
    if f.order < t_int:
        raise QBaileyError(
            f"series known to q^{f.order}, cannot sieve to n = {t_int - 1}")
    if any(e.denominator != 1 for e, _ in f.terms()):
        raise QBaileyError("sieve expects integer exponents after rescaling")

    work = f.truncated(t_int)
    out: list[int] = []
    for n in range(1, t_int):
        c = work.coefficient(n)
        if not c.is_rational() or c.rational().denominator != 1:
            raise QBaileyError(
                f"coefficient at q^{n} is {c}, not a rational integer: "
                "input is not an Euler product of this shape")
        cn = int(c.rational())
        out.append(cn)
        if cn > 0:
            for _ in range(cn):
                work = work.mul_linear(1, n)
        elif cn < 0:
            for _ in range(-cn):
                work = work.div_linear(1, n)
    return SieveResult(out, rescale)


def periodicity_fit(c: list[int], max_period: int):
    """Smallest period p <= max_period on which c_n depends only on n mod p.

    The list is read as c_1, c_2, ...; a fit needs every entry beyond the
    first period to match and at least 2p confirming entries.  Returns
    (period, pattern) with the pattern indexed from residue 1, or None.
    """
    size = len(c)
    for p in range(1, max_period + 1):
        if size - p < 2 * p:
            continue
        if all(c[i] == c[i - p] for i in range(p, size)):
            return p, tuple(c[:p])
    return None


def euler_exponents_of_product(spec, t_int: int) -> list[int]:
    """Expected c_n for a product of plain (+-q^b; q^s)_inf factors.

    Derived combinatorially, independent of the series sieve:
    (q^b;q^s)_inf contributes -1 at n = b + j*s; (-q^b;q^s)_inf expands as
    (q^{2b};q^{2s})_inf / (q^b;q^s)_inf.
    """
    from .qproducts import INFINITE

    counts = [0] * t_int

    def add_plain(b: Fraction, s: Fraction, mult: int):
        if b.denominator != 1 or s.denominator != 1:
            raise QBaileyError("fractional product lattice; rescale first")
        n = int(b)
        while n < t_int:
            counts[n] -= mult
            n += int(s)

    for f in spec.factors:
        if f.length is not INFINITE:
            raise QBaileyError("expected an infinite product")
        if f.step_unit != C_ONE:
            raise QBaileyError("signed steps unsupported by the exponent reader")
        if f.base_unit == C_ONE:
            add_plain(f.base_exp, f.step_exp, f.power)
        elif f.base_unit == -C_ONE:
            add_plain(2 * f.base_exp, 2 * f.step_exp, f.power)
            add_plain(f.base_exp, f.step_exp, -f.power)
        else:
            raise QBaileyError(f"unit {f.base_unit} unsupported by the exponent reader")
    return counts[1:]

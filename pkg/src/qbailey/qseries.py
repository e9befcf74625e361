"""Truncated generalized power series in q with exact rational exponents.

A QSeries is a finite map exponent -> coefficient together with a truncation
order T, read as "known modulo q^T": every stored exponent is strictly below
T and no stored coefficient is zero.  Exponents may be negative or fractional
(half-integer exponents occur naturally).  Coefficients live in the
cyclotomic field of cyclo.Cyclo, so all arithmetic is exact.

Internally exponents sit on an integer lattice: exp = key / lattice.  All
hot-loop arithmetic is therefore plain integer dictionary work; Fractions
only appear at the API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import Cyclo, as_cyclo, ZERO as C_ZERO, ONE as C_ONE
from .errors import QBaileyError, TruncationError


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equality comparison up to a given order."""
    equal: bool
    exponent: Fraction | None = None
    left: Cyclo | None = None
    right: Cyclo | None = None

    def __bool__(self):
        return self.equal


class QSeries:
    __slots__ = ("_lat", "_c", "_on")

    def __init__(self, lattice: int, coeffs: dict[int, Cyclo], order_num: int):
        # trusted constructor; use the factory methods below from outside
        self._lat = lattice
        self._c = coeffs
        self._on = order_num

    # -- construction -----------------------------------------------------

    @staticmethod
    def _build(lattice: int, coeffs: dict[int, Cyclo], order_num: int) -> "QSeries":
        coeffs = {k: c for k, c in coeffs.items() if k < order_num and not c.is_zero()}
        g = order_num if order_num > 0 else -order_num
        g = gcd(g, lattice)
        for k in coeffs:
            g = gcd(g, k if k >= 0 else -k)
            if g == 1:
                break
        if g > 1 and lattice % g == 0:
            coeffs = {k // g: c for k, c in coeffs.items()}
            return QSeries(lattice // g, coeffs, order_num // g)
        return QSeries(lattice, coeffs, order_num)

    @staticmethod
    def from_terms(terms, order) -> "QSeries":
        order = Fraction(order)
        pairs = [(Fraction(e), as_cyclo(c)) for e, c in terms]
        lat = order.denominator
        for e, _ in pairs:
            lat = lat * e.denominator // gcd(lat, e.denominator)
        acc: dict[int, Cyclo] = {}
        for e, c in pairs:
            k = e.numerator * (lat // e.denominator)
            acc[k] = acc.get(k, C_ZERO) + c
        return QSeries._build(lat, acc, order.numerator * (lat // order.denominator))

    @staticmethod
    def zero(order) -> "QSeries":
        order = Fraction(order)
        return QSeries(order.denominator, {}, order.numerator)

    @staticmethod
    def constant(value, order) -> "QSeries":
        return QSeries.monomial(value, 0, order)

    @staticmethod
    def one(order) -> "QSeries":
        return QSeries.monomial(1, 0, order)

    @staticmethod
    def monomial(unit, exp, order) -> "QSeries":
        return QSeries.from_terms([(Fraction(exp), as_cyclo(unit))], order)

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> Fraction:
        return Fraction(self._on, self._lat)

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> list[tuple[Fraction, Cyclo]]:
        return [(Fraction(k, self._lat), self._c[k]) for k in sorted(self._c)]

    def valuation(self) -> Fraction | None:
        """Least exponent with a nonzero coefficient; None for the zero series."""
        if not self._c:
            return None
        return Fraction(min(self._c), self._lat)

    def _valn(self) -> int:
        # valuation in lattice units, with the zero series reading as the order
        return min(self._c) if self._c else self._on

    def coefficient(self, exp) -> Cyclo:
        """Coefficient of q^exp; querying at or beyond the order is an error."""
        e = Fraction(exp)
        if e >= self.order:
            raise TruncationError(
                f"coefficient at q^{e} requested, series only known modulo q^{self.order}")
        num = e.numerator * self._lat
        if num % e.denominator:
            return C_ZERO
        return self._c.get(num // e.denominator, C_ZERO)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self._c.values())

    # -- lattice plumbing --------------------------------------------------

    def _on_lattice(self, lat: int) -> "QSeries":
        if lat == self._lat:
            return self
        m = lat // self._lat
        return QSeries(lat, {k * m: c for k, c in self._c.items()}, self._on * m)

    @staticmethod
    def _common(a: "QSeries", b: "QSeries") -> tuple["QSeries", "QSeries"]:
        if a._lat == b._lat:
            return a, b
        lat = a._lat * b._lat // gcd(a._lat, b._lat)
        return a._on_lattice(lat), b._on_lattice(lat)

    # -- ring operations ----------------------------------------------------

    def __neg__(self):
        return QSeries(self._lat, {k: -c for k, c in self._c.items()}, self._on)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.order)
        a, b = QSeries._common(self, other)
        on = min(a._on, b._on)
        acc = {k: c for k, c in a._c.items() if k < on}
        for k, c in b._c.items():
            if k < on:
                s = acc.get(k)
                acc[k] = c if s is None else s + c
        return QSeries._build(a._lat, acc, on)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scaled(other)
        a, b = QSeries._common(self, other)
        # sound tightest order: min(T_f + val(g), T_g + val(f))
        on = min(a._on + b._valn(), b._on + a._valn())
        if len(b._c) < len(a._c):
            a, b = b, a
        bkeys = sorted(b._c)
        acc: dict[int, Cyclo] = {}
        for k1, c1 in a._c.items():
            lim = on - k1
            for k2 in bkeys:
                if k2 >= lim:
                    break
                k = k1 + k2
                p = c1 * b._c[k2]
                s = acc.get(k)
                acc[k] = p if s is None else s + p
        return QSeries._build(a._lat, acc, on)

    __rmul__ = __mul__

    def scaled(self, scalar) -> "QSeries":
        c = as_cyclo(scalar)
        if c.is_zero():
            return QSeries(self._lat, {}, self._on)
        return QSeries._build(self._lat, {k: v * c for k, v in self._c.items()}, self._on)

    def shifted(self, exp) -> "QSeries":
        """Multiply by q^exp (an exact monomial, so precision shifts with it)."""
        e = Fraction(exp)
        if e == 0:
            return self
        lat = self._lat * e.denominator // gcd(self._lat, e.denominator)
        s = self._on_lattice(lat)
        d = e.numerator * (lat // e.denominator)
        return QSeries(lat, {k + d: c for k, c in s._c.items()}, s._on + d)

    def mul_linear(self, unit, exp) -> "QSeries":
        """Multiply by the exact two-term factor (1 - unit*q^exp)."""
        u = as_cyclo(unit)
        e = Fraction(exp)
        lat = self._lat * e.denominator // gcd(self._lat, e.denominator)
        s = self._on_lattice(lat)
        d = e.numerator * (lat // e.denominator)
        on = s._on + min(0, d)
        acc = {k: c for k, c in s._c.items() if k < on}
        for k, c in s._c.items():
            k2 = k + d
            if k2 < on:
                p = u * c
                t = acc.get(k2)
                acc[k2] = -p if t is None else t - p
        return QSeries._build(lat, acc, on)

    def div_linear(self, unit, exp) -> "QSeries":
        """Divide by (1 - unit*q^exp); requires exp > 0, or exp == 0 with unit != 1."""
        u = as_cyclo(unit)
        e = Fraction(exp)
        if e == 0:
            c = C_ONE - u
            if c.is_zero():
                raise ZeroDivisionError("division by the zero factor (1 - 1)")
            return self.scaled(c.inverse())
        if e < 0:
            # (1 - u q^e) = -u q^e (1 - q^-e / u); peel the monomial off first
            return self.shifted(-e).scaled((-u).inverse()).div_linear(u.inverse(), -e)
        lat = self._lat * e.denominator // gcd(self._lat, e.denominator)
        s = self._on_lattice(lat)
        d = e.numerator * (lat // e.denominator)
        if not s._c:
            return s
        v = min(s._c)
        span = s._on - v
        dense: list[Cyclo] = [C_ZERO] * span
        for k, c in s._c.items():
            dense[k - v] = c
        for m in range(span):
            if m >= d:
                prev = dense[m - d]
                if not prev.is_zero():
                    dense[m] = dense[m] + u * prev
        acc = {v + m: c for m, c in enumerate(dense) if not c.is_zero()}
        return QSeries._build(lat, acc, s._on)

    def invert(self) -> "QSeries":
        """Multiplicative inverse; factors the leading monomial out first."""
        if not self._c:
            raise ZeroDivisionError("cannot invert the zero series")
        v = min(self._c)
        lead = self._c[v]
        if lead.is_zero():  # unreachable given normalization, defensive
            raise ZeroDivisionError("zero leading coefficient")
        span = self._on - v
        f: list[Cyclo] = [C_ZERO] * span
        for k, c in self._c.items():
            f[k - v] = c
        linv = lead.inverse()
        g: list[Cyclo] = [C_ZERO] * span
        g[0] = linv
        nz = [m for m in range(1, span) if not f[m].is_zero()]
        for m in range(1, span):
            s = C_ZERO
            for j in nz:
                if j > m:
                    break
                if not g[m - j].is_zero():
                    s = s + f[j] * g[m - j]
            if not s.is_zero():
                g[m] = -(linv * s)
        acc = {m - v: c for m, c in enumerate(g) if not c.is_zero()}
        return QSeries._build(self._lat, acc, self._on - 2 * v)

    def scale_exponents(self, factor) -> "QSeries":
        """Substitute q -> q^factor: each exponent e becomes factor*e; factor > 0."""
        c = Fraction(factor)
        if c <= 0:
            raise QBaileyError(f"exponent scale factor must be positive, got {c}")
        return QSeries.from_terms(
            [(e * c, v) for e, v in self.terms()], self.order * c)

    def truncated(self, order) -> "QSeries":
        """Weaken knowledge to a smaller order (never extends it)."""
        t = Fraction(order)
        if t > self.order:
            raise TruncationError(
                f"cannot extend knowledge from q^{self.order} to q^{t}")
        lat = self._lat * t.denominator // gcd(self._lat, t.denominator)
        s = self._on_lattice(lat)
        on = t.numerator * (lat // t.denominator)
        return QSeries._build(lat, {k: c for k, c in s._c.items() if k < on}, on)

    # -- comparison ---------------------------------------------------------

    def equal_to_order(self, other: "QSeries", order) -> Verdict:
        """Compare coefficients below `order`; both series must be known that far."""
        t = Fraction(order)
        if self.order < t or other.order < t:
            raise TruncationError(
                f"comparison to q^{t} requested but series known to "
                f"q^{self.order} and q^{other.order}")
        a, b = QSeries._common(self, other)
        on = t.numerator * (a._lat // t.denominator) if a._lat % t.denominator == 0 \
            else None
        if on is None:
            lat = a._lat * t.denominator // gcd(a._lat, t.denominator)
            a, b = a._on_lattice(lat), b._on_lattice(lat)
            on = t.numerator * (lat // t.denominator)
        keys = sorted(set(a._c) | set(b._c))
        for k in keys:
            if k >= on:
                break
            ca = a._c.get(k, C_ZERO)
            cb = b._c.get(k, C_ZERO)
            if ca != cb:
                return Verdict(False, Fraction(k, a._lat), ca, cb)
        return Verdict(True)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = QSeries._common(self, other)
        return a._on == b._on and a._c == b._c

    def __hash__(self):
        return hash((self._lat, self._on, tuple(sorted(self._c.items()))))

    # -- rendering and dumps --------------------------------------------------

    def __str__(self):
        def fmt_exp(e: Fraction) -> str:
            return str(e.numerator) if e.denominator == 1 else f"({e})"

        def fmt_coeff(c: Cyclo) -> tuple[str, str]:
            if c.is_rational():
                f = c.rational()
                sign = "-" if f < 0 else "+"
                mag = abs(f)
                return sign, (str(mag.numerator) if mag.denominator == 1 else str(mag))
            return "+", f"({c})"

        parts = []
        for e, c in self.terms():
            sign, mag = fmt_coeff(c)
            if e == 0:
                body = mag
            elif mag == "1":
                body = f"q^{fmt_exp(e)}" if e != 1 else "q"
            else:
                body = f"{mag}*q^{fmt_exp(e)}" if e != 1 else f"{mag}*q"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(("+ " if sign == "+" else "- ") + body)
        body = " ".join(parts) if parts else "0"
        return f"{body} (mod q^{fmt_exp(self.order)})"

    def __repr__(self):
        return f"QSeries({self})"

    def dump(self) -> dict:
        """Machine-readable form: exponents and coefficient coordinates as strings."""
        return {
            "order": str(self.order),
            "terms": [[str(e), [str(x) for x in c.coords]] for e, c in self.terms()],
        }

    @staticmethod
    def load(data: dict) -> "QSeries":
        terms = [(Fraction(e), Cyclo.from_coords(*(Fraction(x) for x in coords)))
                 for e, coords in data["terms"]]
        return QSeries.from_terms(terms, Fraction(data["order"]))

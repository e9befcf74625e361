"""Exact arithmetic in Q(z), z a primitive 12th root of unity.

Elements are written c0 + c1*z + c2*z^2 + c3*z^3 with rational ci, reduced
modulo the minimal polynomial z^4 = z^2 - 1.  The field contains
i = z^3 (i^2 = -1) and omega = z^2 - 1 (omega^3 = 1, 1 + omega + omega^2 = 0),
which is all the identity machinery ever needs.

Internally a value is a 4-tuple of integers over one positive denominator,
reduced to lowest terms; plain integers stay single-word fast.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import QBaileyError

_RAT_TAGS = {"1": 1, "-1": -1, "0": 0}


def _reduce(nums: tuple[int, int, int, int], den: int) -> tuple[tuple[int, int, int, int], int]:
    if den < 0:
        nums = (-nums[0], -nums[1], -nums[2], -nums[3])
        den = -den
    if den == 1:
        return nums, 1
    g = gcd(gcd(gcd(gcd(nums[0], nums[1]), nums[2]), nums[3]), den)
    if g > 1:
        nums = (nums[0] // g, nums[1] // g, nums[2] // g, nums[3] // g)
        den //= g
    return nums, den


class Cyclo:
    """An element of Q(z) with exact rational coordinates."""

    __slots__ = ("_n", "_d")

    def __init__(self, nums=(0, 0, 0, 0), den=1):
        self._n, self._d = _reduce(tuple(int(v) for v in nums), int(den))

    @staticmethod
    def from_rational(value) -> "Cyclo":
        f = Fraction(value)
        return Cyclo((f.numerator, 0, 0, 0), f.denominator)

    @staticmethod
    def from_coords(c0, c1, c2, c3) -> "Cyclo":
        f0, f1, f2, f3 = Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)
        den = f0.denominator
        for f in (f1, f2, f3):
            den = den * f.denominator // gcd(den, f.denominator)
        return Cyclo(
            (f0.numerator * (den // f0.denominator),
             f1.numerator * (den // f1.denominator),
             f2.numerator * (den // f2.denominator),
             f3.numerator * (den // f3.denominator)),
            den,
        )

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        d = self._d
        return tuple(Fraction(n, d) for n in self._n)

    def is_zero(self) -> bool:
        return self._n == (0, 0, 0, 0)

    def is_rational(self) -> bool:
        n = self._n
        return n[1] == 0 and n[2] == 0 and n[3] == 0

    def is_one(self) -> bool:
        return self._d == 1 and self._n == (1, 0, 0, 0)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise QBaileyError(f"not a rational element: {self}")
        return Fraction(self._n[0], self._d)

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash((self._n, self._d))

    def __eq__(self, other):
        other = as_cyclo(other)
        return self._n == other._n and self._d == other._d

    def __neg__(self):
        a = self._n
        out = Cyclo.__new__(Cyclo)
        out._n, out._d = (-a[0], -a[1], -a[2], -a[3]), self._d
        return out

    def __add__(self, other):
        other = as_cyclo(other)
        a, b = self._n, other._n
        da, db = self._d, other._d
        if da == db:
            return Cyclo((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]), da)
        return Cyclo(
            (a[0] * db + b[0] * da, a[1] * db + b[1] * da,
             a[2] * db + b[2] * da, a[3] * db + b[3] * da),
            da * db,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_cyclo(other))

    def __rsub__(self, other):
        return as_cyclo(other) + (-self)

    def __mul__(self, other):
        other = as_cyclo(other)
        a, b = self._n, other._n
        # rational * rational is the overwhelmingly common case
        if a[1] == 0 and a[2] == 0 and a[3] == 0:
            if a[0] == 0:
                return _ZERO
            return Cyclo((a[0] * b[0], a[0] * b[1], a[0] * b[2], a[0] * b[3]),
                         self._d * other._d)
        if b[1] == 0 and b[2] == 0 and b[3] == 0:
            if b[0] == 0:
                return _ZERO
            return Cyclo((b[0] * a[0], b[0] * a[1], b[0] * a[2], b[0] * a[3]),
                         self._d * other._d)
        p0 = a[0] * b[0]
        p1 = a[0] * b[1] + a[1] * b[0]
        p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        p3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        p4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        p5 = a[2] * b[3] + a[3] * b[2]
        p6 = a[3] * b[3]
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        return Cyclo((p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5), self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse, by the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclo((self._d, 0, 0, 0), self._n[0])
        # xgcd of self (deg <= 3) against x^4 - x^2 + 1 over Q
        r0 = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]
        r1 = [Fraction(n, self._d) for n in self._n]
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for k in range(len(p) - 1, -1, -1):
                if p[k]:
                    return k
            return -1

        while deg(r1) > 0:
            q, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        if deg(r1) != 0:
            raise ZeroDivisionError("element is a zero divisor (impossible in a field)")
        c = r1[0]
        inv = [v / c for v in s1]
        inv += [Fraction(0)] * (4 - len(inv))
        return Cyclo.from_coords(inv[0], inv[1], inv[2], inv[3])

    def __truediv__(self, other):
        return self * as_cyclo(other).inverse()

    def __rtruediv__(self, other):
        return as_cyclo(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclo":
        if k < 0:
            return self.inverse() ** (-k)
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Cyclo":
        """The automorphism z -> 1/z; fixes rationals, sends i -> -i, omega -> omega^2."""
        a = self._n
        return Cyclo((a[0] + a[2], a[1], -a[2], -a[1] - a[3]), self._d)

    def __repr__(self):
        return f"Cyclo({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, n in enumerate(self._n):
            if n == 0:
                continue
            f = Fraction(n, self._d)
            mag = abs(f)
            coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            sym = ("", "ζ", "ζ^2", "ζ^3")[k]
            if sym and coeff == "1":
                body = sym
            elif sym:
                body = f"({coeff}){sym}"
            else:
                body = coeff
            if not parts:
                parts.append(("-" if f < 0 else "") + body)
            else:
                parts.append(("- " if f < 0 else "+ ") + body)
        return " ".join(parts)


def _polydivmod(a, b):
    a = list(a)
    db = max(k for k in range(len(b)) if b[k])
    q = [Fraction(0)] * (len(a))
    for k in range(len(a) - 1, db - 1, -1):
        if k < len(a) and a[k]:
            c = a[k] / b[db]
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    while a and not a[-1]:
        a.pop()
    return q, a or [Fraction(0)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else Fraction(0)) - (b[k] if k < len(b) else Fraction(0))
            for k in range(n)]


def as_cyclo(value) -> Cyclo:
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, int):
        return Cyclo((value, 0, 0, 0), 1)
    if isinstance(value, Fraction):
        return Cyclo((value.numerator, 0, 0, 0), value.denominator)
    raise TypeError(f"cannot coerce {value!r} to Cyclo")


ZERO = _ZERO = Cyclo((0, 0, 0, 0), 1)
ONE = _ONE = Cyclo((1, 0, 0, 0), 1)
I = Cyclo((0, 0, 0, 1), 1)            # i = z^3
OMEGA = Cyclo((-1, 0, 1, 0), 1)       # omega = z^2 - 1
OMEGA2 = OMEGA * OMEGA

_TAGS = {
    "1": ONE, "-1": -ONE, "0": ZERO,
    "i": I, "-i": -I,
    "omega": OMEGA, "-omega": -OMEGA,
    "omega2": OMEGA2, "-omega2": -OMEGA2,
}


def parse_unit(text_or_value) -> Cyclo:
    """Parse a scalar: a shorthand tag, a "p/q" rational, or a 4-list of rationals."""
    if isinstance(text_or_value, Cyclo):
        return text_or_value
    if isinstance(text_or_value, int):
        return as_cyclo(text_or_value)
    if isinstance(text_or_value, (list, tuple)):
        if len(text_or_value) != 4:
            raise QBaileyError(f"unit coordinate list must have 4 entries: {text_or_value!r}")
        return Cyclo.from_coords(*(Fraction(v) for v in text_or_value))
    text = str(text_or_value).strip()
    if text in _TAGS:
        return _TAGS[text]
    try:
        return Cyclo.from_rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise QBaileyError(f"cannot parse unit {text!r}") from exc


def _rational_nth_root(f: Fraction, n: int) -> Fraction | None:
    if f < 0:
        return None
    num, den = f.numerator, f.denominator

    def iroot(v: int) -> int | None:
        if n == 2:
            r = isqrt(v)
            return r if r * r == v else None
        r = round(v ** (1.0 / n))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** n == v:
                return c
        return None

    rn, rd = iroot(num), iroot(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def unit_sqrt(u: Cyclo) -> Cyclo:
    """A square root of u inside Q(z); raises when none exists there."""
    if u.is_rational():
        f = u.rational()
        r = _rational_nth_root(abs(f), 2)
        if r is not None:
            return Cyclo.from_rational(r) if f >= 0 else I * Cyclo.from_rational(r)
    else:
        zsq = Cyclo((0, 0, 1, 0), 1)
        if u == OMEGA:
            return zsq
        if u == OMEGA2:
            return -OMEGA
    raise QBaileyError(f"no square root of {u} in the coefficient field")


def unit_cbrt(u: Cyclo) -> Cyclo:
    """A rational cube root of u; raises when none exists."""
    if u.is_rational():
        f = u.rational()
        r = _rational_nth_root(abs(f), 3)
        if r is not None:
            return Cyclo.from_rational(r if f >= 0 else -r)
    raise QBaileyError(f"no cube root of {u} in the coefficient field")

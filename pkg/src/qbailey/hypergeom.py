"""Basic hypergeometric series and the very-well-poised abbreviation.

A Monomial is unit*q^exp with an exact cyclotomic unit and rational
exponent; parameters of every series here are monomials (a distinguished
INFINITY marker exists for limit specifications elsewhere).

phi_eval sums

    sum_r  prod_i (a_i; Q)_r / ((Q; Q)_r prod_i (b_i; Q)_r) * z^r

term by term, terminating either through an upper parameter of the form
Q^{-n} (whose zero factor persists for all later terms) or through the
exact term-valuation cutoff for positive-exponent arguments.

verify_transformation checks the six named transformation formulas at
monomial specializations by evaluating both sides independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclo, ONE as C_ONE, as_cyclo, unit_cbrt, unit_sqrt
from .errors import NonTerminatingError, QBaileyError
from .qseries import QSeries, Verdict
from .qproducts import assemble_term


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


@dataclass(frozen=True)
class Monomial:
    unit: Cyclo
    exp: Fraction

    def __post_init__(self):
        if self.unit.is_zero():
            raise QBaileyError("zero monomial where a unit is required")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.unit * other.unit, self.exp + other.exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.unit * other.unit.inverse(), self.exp - other.exp)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.unit, self.exp)

    def inverse(self) -> "Monomial":
        return Monomial(self.unit.inverse(), -self.exp)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.unit ** k, self.exp * k)

    def pow_frac(self, f) -> "Monomial":
        """Rational power; the unit must have the required exact root."""
        f = Fraction(f)
        s = f.denominator
        if s == 1:
            root = self.unit
        elif self.unit == C_ONE:
            root = C_ONE
        elif s == 2:
            root = unit_sqrt(self.unit)
        elif s == 3:
            root = unit_cbrt(self.unit)
        else:
            raise QBaileyError(f"cannot take an exact {s}-th root of unit {self.unit}")
        return Monomial(root ** f.numerator, self.exp * f)

    def sqrt(self) -> "Monomial":
        return self.pow_frac(Fraction(1, 2))

    def is_one(self) -> bool:
        return self.exp == 0 and self.unit == C_ONE

    def as_series(self, order) -> QSeries:
        return QSeries.monomial(self.unit, self.exp, order)

    def __str__(self):
        if self.exp == 0:
            return str(self.unit)
        e = self.exp
        q = "q" if e == 1 else (f"q^{e.numerator}" if e.denominator == 1 else f"q^({e})")
        if self.unit == C_ONE:
            return q
        if self.unit == -C_ONE:
            return f"-{q}"
        return f"{self.unit}*{q}"


def mono(unit, exp=0) -> Monomial:
    from .cyclo import parse_unit

    unit = parse_unit(unit) if isinstance(unit, str) else as_cyclo(unit)
    return Monomial(unit, Fraction(exp))


def qpow(exp) -> Monomial:
    return Monomial(C_ONE, Fraction(exp))


def parse_monomial(text: str):
    """Parse "c*q^(p/r)" style monomials; "inf" gives the INFINITY marker."""
    from .cyclo import parse_unit

    t = text.strip().replace(" ", "")
    if t in ("inf", "INF", "infinity"):
        return INFINITY
    unit = C_ONE
    if "*" in t:
        head, t = t.split("*", 1)
        unit = parse_unit(head)
    if not t.startswith("q") and not t.startswith("-q"):
        return Monomial(unit * parse_unit(t), Fraction(0))
    if t.startswith("-"):
        unit = -unit
        t = t[1:]
    t = t[1:]  # drop 'q'
    if not t:
        return Monomial(unit, Fraction(1))
    if not t.startswith("^"):
        raise QBaileyError(f"cannot parse monomial {text!r}")
    t = t[1:]
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    return Monomial(unit, Fraction(t))


# -- phi and W ------------------------------------------------------------------

@dataclass(frozen=True)
class PhiSpec:
    upper: tuple[Monomial, ...]
    lower: tuple[Monomial, ...]
    base: Monomial
    argument: Monomial

    def __post_init__(self):
        if len(self.upper) != len(self.lower) + 1:
            raise QBaileyError(
                f"phi needs p+1 upper over p lower parameters, got "
                f"{len(self.upper)} over {len(self.lower)}")
        if self.base.exp <= 0:
            raise QBaileyError("phi base must have positive exponent")


@dataclass(frozen=True)
class WSpec:
    """Very-well-poised series: a with the qa^(1/2), -qa^(1/2) pattern inserted."""
    a: Monomial
    tail: tuple[Monomial, ...]
    base: Monomial
    argument: Monomial

    def expand(self) -> PhiSpec:
        sa = self.a.sqrt()
        qsa = self.base * sa
        upper = (self.a, qsa, -qsa) + self.tail
        lower = (sa, -sa) + tuple(self.a * self.base / t for t in self.tail)
        return PhiSpec(upper, lower, self.base, self.argument)


def _zero_index(param: Monomial, base: Monomial) -> int | None:
    # least j >= 0 with param.unit * base.unit^j == 1 and param.exp + j*base.exp == 0
    if param.exp > 0:
        return None
    j = -param.exp / base.exp
    if j.denominator != 1:
        return None
    j = int(j)
    if param.unit * base.unit ** j == C_ONE:
        return j
    return None


def phi_eval(spec: PhiSpec, order, max_terms: int = 10000) -> QSeries:
    """Sum the series to `order`; errors if it cannot terminate or converge."""
    order = Fraction(order)
    base = spec.base
    zeros = [z for z in (_zero_index(p, base) for p in spec.upper) if z is not None]
    r_stop = (min(zeros) + 1) if zeros else None
    if r_stop is None and spec.argument.exp <= 0:
        raise NonTerminatingError(
            "series does not terminate and its argument has nonpositive exponent")

    # past r_star every newly appended linear factor has positive exponent,
    # so the exact term valuation then grows by the argument exponent per step
    params = list(spec.upper) + [base] + list(spec.lower)
    r_star = 0
    for p in params:
        if p.exp <= 0:
            r_star = max(r_star, int(-p.exp // base.exp) + 2)

    total = QSeries.zero(order)
    val_lb = Fraction(0)  # exact valuation of term r from the factor exponents
    r = 0
    while True:
        if r_stop is not None and r >= r_stop:
            break
        if r_stop is None and r > r_star and val_lb >= order:
            break
        if r > max_terms:
            raise NonTerminatingError(f"phi_eval exceeded max_terms={max_terms}")
        num: list = []
        den: list = []
        for p in spec.upper:
            u, e = p.unit, p.exp
            for _ in range(r):
                num.append((u, e, False))
                u, e = u * base.unit, e + base.exp
        for p in [base] + list(spec.lower):
            u, e = p.unit, p.exp
            for _ in range(r):
                den.append((u, e, False))
                u, e = u * base.unit, e + base.exp
        term = assemble_term(spec.argument.unit ** r, spec.argument.exp * r,
                             num, den, order)
        if term is not None:
            total = total + term
        # valuation of term r+1: argument power plus the negative factor exponents
        val_lb = spec.argument.exp * (r + 1)
        for p in spec.upper:
            j, e = 0, p.exp
            while j <= r and e < 0:
                val_lb += e
                j, e = j + 1, e + base.exp
        for p in spec.lower:
            j, e = 0, p.exp
            while j <= r and e < 0:
                val_lb -= e
                j, e = j + 1, e + base.exp
        r += 1
    return total


def w_eval(spec: WSpec, order, max_terms: int = 10000) -> QSeries:
    return phi_eval(spec.expand(), order, max_terms)


def vwp_order(d: int, e: int, k: int) -> int:
    """Index t of the very-well-poised (t+1)phi_t behind the (d,e,k) pair."""
    if d < 1 or e < 1 or k < 1:
        raise QBaileyError("d, e, k must be positive")
    return e * d + abs(2 * k - e * d - 2 * d + 1) + 2


# -- the six transformation formulas ---------------------------------------------

def _poch_ratio(num_pairs, den_pairs, length: int, base: Monomial, order) -> QSeries:
    """prod (x;base)_length over num / same over den, all finite."""
    num: list = []
    den: list = []
    for p in num_pairs:
        u, e = p.unit, p.exp
        for _ in range(length):
            num.append((u, e, False))
            u, e = u * base.unit, e + base.exp
    for p in den_pairs:
        u, e = p.unit, p.exp
        for _ in range(length):
            den.append((u, e, False))
            u, e = u * base.unit, e + base.exp
    out = assemble_term(1, 0, num, den, order)
    if out is None:
        raise QBaileyError("vanishing prefactor")
    return out


def _poch_inf_ratio(num_list, den_list, base: Monomial, order) -> QSeries:
    num: list = []
    den: list = []
    order = Fraction(order)
    for p in num_list:
        u, e = p.unit, p.exp
        while e < order:
            num.append((u, e, False))
            u, e = u * base.unit, e + base.exp
    for p in den_list:
        u, e = p.unit, p.exp
        while e < order:
            den.append((u, e, False))
            u, e = u * base.unit, e + base.exp
    out = assemble_term(1, 0, num, den, order)
    if out is None:
        raise QBaileyError("vanishing prefactor")
    return out


_Q = qpow(1)


def _wqw_sides(asg, n, order, max_terms):
    a, b, c, d, e = (asg[k] for k in "abcde")
    qn = qpow(-n)
    z = (a ** 2 * qpow(n + 2)) / (b * c * d * e)
    lhs = w_eval(WSpec(a, (b, c, d, e, qn), _Q, z), order, max_terms)
    pre = _poch_ratio([a * _Q, a * _Q / (d * e)], [a * _Q / d, a * _Q / e], n, _Q, order)
    phi = phi_eval(PhiSpec((a * _Q / (b * c), d, e, qn),
                           (a * _Q / b, a * _Q / c, d * e * qn / a),
                           _Q, _Q), order, max_terms)
    return lhs, pre * phi


def _vj1_sides(asg, n, order, max_terms):
    a, b, x, y = (asg[k] for k in "abxy")
    qn = qpow(-n)
    z = -((a ** 3 * qpow(2 * n + 3)) / (b * x ** 2 * y ** 2))
    lhs = w_eval(WSpec(a, (b, x, -x, y, -y, qn, -qn), _Q, z), order, max_terms)
    q2 = qpow(2)
    a2q2 = a ** 2 * q2
    pre = _poch_ratio([a2q2, a2q2 / (x ** 2 * y ** 2)],
                      [a2q2 / x ** 2, a2q2 / y ** 2], n, q2, order)
    phi = phi_eval(PhiSpec((qpow(-2 * n), x ** 2, y ** 2, -(a * _Q / b), -(a * q2 / b)),
                           (x ** 2 * y ** 2 * qpow(-2 * n) / a ** 2,
                            a2q2 / b ** 2, -(a * _Q), -(a * q2)),
                           q2, q2), order, max_terms)
    return lhs, pre * phi


def _vj2_sides(asg, n, order, max_terms):
    # quadratic base change: the very-well-poised side lives in base q^2
    a, b, x, y = (asg[k] for k in "abxy")
    qn = qpow(-n)
    z = (a ** 3 * qpow(2 * n + 3)) / (b * x ** 2 * y ** 2)
    lhs = w_eval(WSpec(a, (b, x, x * _Q, y, y * _Q, qpow(1 - n), qn), qpow(2), z),
                 order, max_terms)
    pre = _poch_ratio([a * _Q, a * _Q / (x * y)], [a * _Q / x, a * _Q / y], n, _Q, order)
    saqb = (a * _Q / b).sqrt()
    saq = (a * _Q).sqrt()
    phi = phi_eval(PhiSpec((x, y, saqb, -saqb, qn),
                           (saq, -saq, a * _Q / b, x * y * qn / a),
                           _Q, _Q), order, max_terms)
    return lhs, pre * phi


def _vj3_sides(asg, n, order, max_terms):
    from .cyclo import OMEGA, OMEGA2

    a, x, y = (asg[k] for k in "axy")
    w1, w2 = mono(OMEGA), mono(OMEGA2)
    qn = qpow(-n)
    z = (a ** 4 * qpow(3 * n + 4)) / (x ** 3 * y ** 3)
    lhs = w_eval(WSpec(a, (x, w1 * x, w2 * x, y, w1 * y, w2 * y,
                           qn, w1 * qn, w2 * qn), _Q, z), order, max_terms)
    q3 = qpow(3)
    a3q3 = a ** 3 * q3
    pre = _poch_ratio([a3q3, a3q3 / (x ** 3 * y ** 3)],
                      [a3q3 / x ** 3, a3q3 / y ** 3], n, q3, order)
    aq32 = (a * _Q).pow_frac(Fraction(3, 2))
    a32q3 = a.pow_frac(Fraction(3, 2)) * q3
    phi = phi_eval(PhiSpec((qpow(-3 * n), x ** 3, y ** 3, a * _Q, a * qpow(2), a * q3),
                           (aq32, -aq32, a32q3, -a32q3,
                            x ** 3 * y ** 3 * qpow(-3 * n) / a ** 3),
                           q3, q3), order, max_terms)
    return lhs, pre * phi


def _vj4_sides(asg, n, order, max_terms):
    from .cyclo import OMEGA, OMEGA2

    # cubic base change: the very-well-poised side lives in base q^3
    a, x, y = (asg[k] for k in "axy")
    w1, w2 = mono(OMEGA), mono(OMEGA2)
    qn = qpow(-n)
    z = (a ** 4 * qpow(3 * n + 3)) / (x ** 3 * y ** 3)
    lhs = w_eval(WSpec(a, (x, x * _Q, x * qpow(2), y, y * _Q, y * qpow(2),
                           qpow(2 - n), qpow(1 - n), qn), qpow(3), z), order, max_terms)
    pre = _poch_ratio([a * _Q, a * _Q / (x * y)], [a * _Q / x, a * _Q / y], n, _Q, order)
    ca = a.pow_frac(Fraction(1, 3))
    sa = a.sqrt()
    saq = (a * _Q).sqrt()
    phi = phi_eval(PhiSpec((ca, w1 * ca, w2 * ca, x, y, qn),
                           (sa, -sa, saq, -saq, x * y * qn / a),
                           _Q, _Q), order, max_terms)
    return lhs, pre * phi


def _vwp87_sides(asg, n, order, max_terms):
    a, x, y = (asg[k] for k in "axy")
    sy = y.sqrt()
    syq = (y * _Q).sqrt()
    z = (a ** 2 * _Q) / (y ** 2 * x)
    lhs = w_eval(WSpec(a, (sy, -sy, syq, -syq, x), _Q, z), order, max_terms)
    pre = _poch_inf_ratio([a * _Q, a ** 2 * _Q / y ** 2],
                          [a * _Q / y, a ** 2 * _Q / y], _Q, order)
    phi = phi_eval(PhiSpec((y, x * y / a), (a * _Q / x,), _Q, z), order, max_terms)
    return lhs, pre * phi


_TRANSFORMS = {
    "WQW": (_wqw_sides, ("a", "b", "c", "d", "e"), True),
    "VJ1": (_vj1_sides, ("a", "b", "x", "y"), True),
    "VJ2": (_vj2_sides, ("a", "b", "x", "y"), True),
    "VJ3": (_vj3_sides, ("a", "x", "y"), True),
    "VJ4": (_vj4_sides, ("a", "x", "y"), True),
    "VWP87": (_vwp87_sides, ("a", "x", "y"), False),
}

#: Specializations used by the verification suite; each entry gives the
#: parameter map plus n where the formula is terminating.
DEFAULT_ASSIGNMENTS = {
    "WQW": [
        ({"a": "q^4", "b": "q", "c": "q^2", "d": "q^3", "e": "q"}, 3),
        ({"a": "q^6", "b": "q^2", "c": "q", "d": "q^2", "e": "q^3"}, 2),
        ({"a": "q^4", "b": "q^3", "c": "q", "d": "q", "e": "q^2"}, 4),
    ],
    "VJ1": [
        ({"a": "q^2", "b": "q", "x": "q", "y": "q"}, 2),
        ({"a": "q^4", "b": "q", "x": "q^2", "y": "q^2"}, 3),
        ({"a": "q^4", "b": "q^2", "x": "q", "y": "q^3"}, 4),
    ],
    "VJ2": [
        ({"a": "q^3", "b": "q^2", "x": "q", "y": "q^2"}, 2),
        ({"a": "q^5", "b": "q^2", "x": "q^2", "y": "q^3"}, 3),
        ({"a": "q^3", "b": "q^2", "x": "q^2", "y": "q"}, 4),
    ],
    "VJ3": [
        ({"a": "q^6", "x": "q", "y": "q^2"}, 2),
        ({"a": "q^2", "x": "q", "y": "q"}, 3),
        ({"a": "q^4", "x": "q^2", "y": "q^2"}, 4),
    ],
    "VJ4": [
        ({"a": "q^6", "x": "q", "y": "q^2"}, 3),
        ({"a": "q^6", "x": "q^2", "y": "q"}, 4),
        ({"a": "q^6", "x": "q", "y": "q"}, 5),
    ],
    "VWP87": [
        ({"a": "q^2", "x": "q^2", "y": "q"}, None),
        ({"a": "q^3", "x": "q^2", "y": "q^2"}, None),
        ({"a": "q^4", "x": "q^3", "y": "q^2"}, None),
    ],
}

TRANSFORM_IDS = tuple(_TRANSFORMS)


def transform_symbols(t_id: str) -> tuple[str, ...]:
    return _TRANSFORMS[t_id][1]


def transform_needs_n(t_id: str) -> bool:
    return _TRANSFORMS[t_id][2]


def transformation_sides(t_id: str, assignment: dict[str, Monomial],
                         n: int | None, order, max_terms: int = 10000):
    """Evaluate both sides of a named transformation at a specialization."""
    if t_id not in _TRANSFORMS:
        raise QBaileyError(f"unknown transformation {t_id!r}")
    fn, symbols, needs_n = _TRANSFORMS[t_id]
    missing = [s for s in symbols if s not in assignment]
    if missing:
        raise QBaileyError(f"{t_id} assignment missing symbols {missing}")
    if needs_n and n is None:
        raise QBaileyError(f"{t_id} needs a terminating index n")
    return fn(assignment, n, Fraction(order), max_terms)


def verify_transformation(t_id: str, assignment: dict[str, Monomial],
                          n: int | None, order, max_terms: int = 10000) -> Verdict:
    lhs, rhs = transformation_sides(t_id, assignment, n, order, max_terms)
    t = min(lhs.order, rhs.order, Fraction(order))
    return lhs.equal_to_order(rhs, t)

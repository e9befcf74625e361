"""The multiparameter Bailey pair engine.

For positive integers (d, e, k) the alpha sequence (written here with the
a -> a^e, q -> q^e replacement already applied, so everything below is a
concrete series in q once a is a monomial) is

    alpha_n = 0 unless n = d*r, and at n = d*r, with b -> 0:

        (-1)^r a^{(k-d)r} q^{(dk - d^2 + d/2) r^2 - (d/2) r}
            * (a q^{2d}; q^{2d})_r (a; q^d)_r
            / ((a; q^{2d})_r (q^d; q^d)_r).

At a = 1 the ratio (a;q^d)_r / (a;q^{2d})_r is evaluated with the common
(1 - a) factor cancelled, so the specialization is regular.  The partner
beta is defined by

    beta_n = sum_{s=0..n} alpha_s / ((q^e;q^e)_{n-s} (a^e q^e;q^e)_{n+s}),

and the closed beta formulas shipped in data/bailey_pairs.json are checked
against this definition.  lemma_sides evaluates both sides of the Bailey
lemma with the alpha/beta pair inserted, including the standard limit
rewrites for rho -> infinity and N -> infinity:

    (rho; Q)_j * rho^{-j}      -> (-1)^j Q^{j(j-1)/2},
    (x / rho; Q)_j             -> 1,
    (y; Q)_{N-j} / (Q;Q)_{N-j} -> (y; Q)_inf / (Q; Q)_inf,
    1 / ((A Q; Q)_{N+r})       -> 1 / ((A Q; Q)_inf).

rho values are given in the lemma's own base (i.e. already raised to the
e-th power); a bracket like "rho2 = -sqrt(q)" therefore enters here as the
monomial -q^{e/2}.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .cyclo import Cyclo, ONE as C_ONE, as_cyclo
from .errors import QBaileyError, RegistryError
from .hypergeom import INFINITY, Monomial, mono, qpow
from .qproducts import (INFINITE, PochFactor, ProductSpec, assemble_term,
                        finite_linear_factors, infinite_linear_factors,
                        poch, product_spec_eval)
from .qseries import QSeries, Verdict
from .registry import beta_formula_sum, parse_term_spec, TermSpec


@dataclass(frozen=True)
class PairSpec:
    """A (d, e, k) triple with the a (and optionally b) specialization."""
    d: int
    e: int
    k: int
    a: Monomial
    b: Monomial | None = None   # None means the b -> 0 form

    def __post_init__(self):
        if min(self.d, self.e, self.k) < 1:
            raise QBaileyError("d, e, k must be positive integers")


def _alpha_ratio_factors(a: Monomial, d: int, r: int):
    """Tagged factors of (a q^{2d};q^{2d})_r (a;q^d)_r / ((a;q^{2d})_r (q^d;q^d)_r)."""
    num: list = []
    den: list = []
    for pf, side, parametric in (
            (poch(a.unit, a.exp + 2 * d, 1, 2 * d, r), num, True),
            (poch(a.unit, a.exp, 1, d, r), num, True),
            (poch(a.unit, a.exp, 1, 2 * d, r), den, True),
            (poch(1, d, 1, d, r), den, False)):
        _, factors = finite_linear_factors(pf)
        side.extend((u, x, parametric) for u, x in factors)
    return num, den


def alpha_mp(spec: PairSpec, n: int, order) -> QSeries:
    """alpha_n of the multiparameter pair, as a series truncated at order."""
    order = Fraction(order)
    if n < 0:
        raise QBaileyError("alpha index must be nonnegative")
    d, e, k, a = spec.d, spec.e, spec.k, spec.a
    if n % d:
        return QSeries.zero(order)
    r = n // d
    num, den = _alpha_ratio_factors(a, d, r)
    if spec.b is None:
        unit = (-C_ONE) ** r * a.unit ** ((k - d) * r)
        shift = (Fraction(d * k - d * d) + Fraction(d, 2)) * r * r \
            - Fraction(d, 2) * r + a.exp * (k - d) * r
    else:
        b = spec.b
        unit = a.unit ** ((k - d + 1) * r) * b.unit ** (-r)
        shift = Fraction((k - d + 1) * d) * r * r \
            + a.exp * (k - d + 1) * r - b.exp * r
        for pf, side in ((poch(b.unit, b.exp, 1, d, r), num),
                         (poch(a.unit * b.unit.inverse(), a.exp - b.exp + d, 1, d, r), den)):
            _, factors = finite_linear_factors(pf)
            side.extend((u, x, True) for u, x in factors)
    out = assemble_term(unit, shift, num, den, order)
    return out if out is not None else QSeries.zero(order)


def alpha_mp_b_infinity(spec: PairSpec, n: int, order) -> QSeries:
    """The b -> infinity termwise limit of the two-parameter alpha.

    Each b-bearing combination tends to (-1)^r q^{d r(r-1)/2}, giving

        (-1)^r a^{(k-d+1)r} q^{(k-d+1)d r^2 + d r(r-1)/2} * (the same ratio).
    """
    order = Fraction(order)
    d, e, k, a = spec.d, spec.e, spec.k, spec.a
    if n % d:
        return QSeries.zero(order)
    r = n // d
    num, den = _alpha_ratio_factors(a, d, r)
    unit = (-C_ONE) ** r * a.unit ** ((k - d + 1) * r)
    shift = Fraction((k - d + 1) * d) * r * r + Fraction(d * r * (r - 1), 2) \
        + a.exp * (k - d + 1) * r
    out = assemble_term(unit, shift, num, den, order)
    return out if out is not None else QSeries.zero(order)


@lru_cache(maxsize=4096)
def _poch_inverse(unit: Cyclo, base_exp: Fraction, step_exp: Fraction,
                  length, order: Fraction) -> QSeries:
    f = PochFactor(unit, base_exp, C_ONE, step_exp, length, -1)
    from .qproducts import _poch_series
    out = _poch_series(f, order)
    if out == "ZERO-DIVISOR":
        raise QBaileyError("vanishing Bailey-sum denominator")
    return out


def beta_from_alpha(alpha_fn, a: Monomial, e: int, n: int, order) -> QSeries:
    """beta_n = sum_{s<=n} alpha(s) / ((q^e;q^e)_{n-s} (a^e q^e;q^e)_{n+s})."""
    order = Fraction(order)
    ae_unit = a.unit ** e
    ae_exp = a.exp * e + e
    total = QSeries.zero(order)
    for s in range(n + 1):
        al = alpha_fn(s, order)
        if al.is_zero():
            continue
        inv1 = _poch_inverse(C_ONE, Fraction(e), Fraction(e), n - s, order)
        inv2 = _poch_inverse(ae_unit, ae_exp, Fraction(e), n + s, order)
        total = total + al * inv1 * inv2
    return total


# -- the shipped closed beta formulas ------------------------------------------

@lru_cache(maxsize=1)
def _pair_table() -> dict[str, dict]:
    raw = resources.files("qbailey.data").joinpath("bailey_pairs.json").read_text()
    doc = json.loads(raw)
    table: dict[str, dict] = {}
    for entry in doc["pairs"]:
        pid = entry["id"]
        if pid in table:
            raise RegistryError(f"duplicate pair id {pid!r}")
        table[pid] = {
            "dek": tuple(int(v) for v in entry["dek"]),
            "term": parse_term_spec(entry["beta"], pid, variables=("r",)),
        }
    return table


def pair_ids() -> list[str]:
    return sorted(_pair_table(), key=lambda p: _pair_table()[p]["dek"])


def pair_triple(pair_id: str) -> tuple[int, int, int]:
    try:
        return _pair_table()[pair_id]["dek"]
    except KeyError:
        raise QBaileyError(f"unknown Bailey pair {pair_id!r}") from None


def pair_term_spec(pair_id: str) -> TermSpec:
    try:
        return _pair_table()[pair_id]["term"]
    except KeyError:
        raise QBaileyError(f"unknown Bailey pair {pair_id!r}") from None


def beta_formula(pair_id: str, a: Monomial, n: int, order) -> QSeries:
    """The printed closed form of beta_n for a registered pair."""
    return beta_formula_sum(pair_term_spec(pair_id), n, a, order)


def beta_defining(pair_id_or_dek, a: Monomial, n: int, order) -> QSeries:
    """beta_n straight from the definition, via the alpha sequence."""
    if isinstance(pair_id_or_dek, str):
        d, e, k = pair_triple(pair_id_or_dek)
    else:
        d, e, k = pair_id_or_dek
    spec = PairSpec(d, e, k, a)
    return beta_from_alpha(lambda s, o: alpha_mp(spec, s, o), a, e, n, order)


STANDARD_A_SPECS = ("1", "q", "q^2", "3*q")


@dataclass
class PairReport:
    pair_id: str
    order: Fraction
    results: list[tuple[str, int, Verdict]]

    @property
    def passed(self) -> bool:
        return all(v.equal for _, _, v in self.results)

    def first_failure(self):
        for a_text, n, v in self.results:
            if not v.equal:
                return a_text, n, v
        return None


def verify_pair(pair_id: str, a_specs, n_max: int, order) -> PairReport:
    """Check printed beta = defining beta for each a and n <= n_max."""
    from .hypergeom import parse_monomial

    order = Fraction(order)
    d, e, k = pair_triple(pair_id)
    results = []
    for a_text in a_specs:
        a = parse_monomial(a_text) if isinstance(a_text, str) else a_text
        spec = PairSpec(d, e, k, a)
        alpha_fn = lambda s, o: alpha_mp(spec, s, o)
        for n in range(n_max + 1):
            lhs = beta_formula(pair_id, a, n, order)
            rhs = beta_from_alpha(alpha_fn, a, e, n, order)
            results.append((str(a_text), n, lhs.equal_to_order(rhs, order)))
    return PairReport(pair_id, order, results)


# -- the underlying summation-reordering identity --------------------------------

def bailey_transform_check(alpha: list[QSeries], delta: list[QSeries],
                           a: Monomial, order) -> Verdict:
    """Check sum alpha_n gamma_n = sum beta_n delta_n for finitely supported data.

    Uses the canonical weights u_m = 1/(q;q)_m and v_m = 1/(aq;q)_m; delta
    is treated as zero beyond the given list, which makes gamma a finite sum.
    """
    order = Fraction(order)

    def u(m):
        return _poch_inverse(C_ONE, Fraction(1), Fraction(1), m, order)

    def v(m):
        return _poch_inverse(a.unit, a.exp + 1, Fraction(1), m, order)

    n_max = len(delta) - 1
    lhs = QSeries.zero(order)
    for n, al in enumerate(alpha):
        if n > n_max:
            break
        gamma_n = QSeries.zero(order)
        for r in range(n, n_max + 1):
            gamma_n = gamma_n + delta[r] * u(r - n) * v(r + n)
        lhs = lhs + al * gamma_n
    rhs = QSeries.zero(order)
    for n, de in enumerate(delta):
        beta_n = QSeries.zero(order)
        for r in range(min(n, len(alpha) - 1) + 1):
            beta_n = beta_n + alpha[r] * u(n - r) * v(n + r)
        rhs = rhs + de * beta_n
    return lhs.equal_to_order(rhs, order)


def random_transform_data(rng: random.Random, support: int = 6, order=30):
    """Random rational alpha and delta lists for the transform check."""
    def rand_scalar():
        return as_cyclo(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    alpha = [QSeries.constant(rand_scalar(), order) for _ in range(support)]
    delta = [QSeries.constant(rand_scalar(), order) for _ in range(support)]
    return alpha, delta


# -- the Bailey lemma with the pair inserted --------------------------------------

@dataclass(frozen=True)
class LemmaSpec:
    """rho1, rho2: monomials in the lemma base (or INFINITY); N likewise."""
    rho1: object = INFINITY
    rho2: object = INFINITY
    N: object = INFINITY
    order: Fraction = Fraction(40)

    def __post_init__(self):
        if Fraction(self.order) <= 0:
            raise QBaileyError("lemma verification order must be positive")


def _rho_factor(rho, e: int, count: int):
    """(rho;q^e)_count * rho^{-count} as (unit, shift, factors); handles rho = inf."""
    if rho is INFINITY:
        unit = (-C_ONE) ** count
        shift = Fraction(e) * count * (count - 1) / 2
        return unit, shift, []
    f = poch(rho.unit, rho.exp, 1, e, count)
    _, factors = finite_linear_factors(f)
    return rho.unit ** (-count), -rho.exp * count, [(u, x, False) for u, x in factors]


def lemma_sides(pair_id_or_dek, a: Monomial, spec: LemmaSpec,
                use_formula: bool = True) -> tuple[QSeries, QSeries]:
    """Both sides of the Bailey lemma for the chosen pair and specialization."""
    order = Fraction(spec.order)
    if isinstance(pair_id_or_dek, str):
        pair_id = pair_id_or_dek
        d, e, k = pair_triple(pair_id)
    else:
        pair_id = None
        d, e, k = pair_id_or_dek
    pspec = PairSpec(d, e, k, a)
    rho1, rho2, N = spec.rho1, spec.rho2, spec.N
    aq_e = mono(a.unit ** e, a.exp * e + e)          # a^e q^e
    qe = Fraction(e)
    finite_rhos = [rho for rho in (rho1, rho2) if rho is not INFINITY]

    def beta(j):
        if pair_id is not None and use_formula:
            return beta_formula(pair_id, a, j, order)
        return beta_defining((d, e, k), a, j, order)

    # 1 / prod_i (a^e q^e / rho_i; q^e)_N, which is 1 for infinite rho_i
    pred: list = []
    for rho in finite_rhos:
        base = aq_e / rho
        if N is INFINITY:
            f = poch(base.unit, base.exp, 1, e, INFINITE)
            pred.extend((u, x, False) for u, x in infinite_linear_factors(f, order))
        else:
            _, factors = finite_linear_factors(poch(base.unit, base.exp, 1, e, N))
            pred.extend((u, x, False) for u, x in factors)

    if N is INFINITY:
        inv_qe_inf = _poch_inverse(C_ONE, qe, qe, INFINITE, order)
        inv_aq_inf = _poch_inverse(aq_e.unit, aq_e.exp, qe, INFINITE, order)
        g_inf_factors = None
        if len(finite_rhos) == 2:
            g = aq_e / (rho1 * rho2)
            g_inf_factors = [(u, x, False) for u, x in
                             infinite_linear_factors(poch(g.unit, g.exp, 1, e, INFINITE),
                                                     order)]

    # left side: sum_j rho-pieces * (a^e q^e)^j * middle(N-j) * beta_j
    lhs = QSeries.zero(order)
    j = 0
    prev_shift = None
    while True:
        if N is not INFINITY and j > N:
            break
        u1, s1, f1 = _rho_factor(rho1, e, j)
        u2, s2, f2 = _rho_factor(rho2, e, j)
        unit = u1 * u2 * aq_e.unit ** j
        shift = s1 + s2 + aq_e.exp * j
        if N is INFINITY and shift >= order \
                and prev_shift is not None and shift >= prev_shift:
            break
        prev_shift = shift
        num = f1 + f2
        den: list = []
        if N is INFINITY:
            if g_inf_factors is not None:
                num = num + g_inf_factors
            piece = assemble_term(unit, shift, num, den, order)
            if piece is not None:
                lhs = lhs + piece * inv_qe_inf * beta(j)
        else:
            if len(finite_rhos) == 2:
                g = aq_e / (rho1 * rho2)
                _, gf = finite_linear_factors(poch(g.unit, g.exp, 1, e, N - j))
                num = num + [(u, x, False) for u, x in gf]
            _, qf = finite_linear_factors(poch(1, e, 1, e, N - j))
            den = den + [(u, x, False) for u, x in qf]
            piece = assemble_term(unit, shift, num, den, order)
            if piece is not None:
                lhs = lhs + piece * beta(j)
        j += 1
    if pred:
        lhs = lhs * assemble_term(1, 0, [], pred, order)

    # right side: sum_r rho-pieces at dr / (aq/rho;.)_dr-pieces * tails * alpha_dr
    rhs = QSeries.zero(order)
    r = 0
    prev_shift = None
    while True:
        dr = d * r
        if N is not INFINITY and dr > N:
            break
        u1, s1, f1 = _rho_factor(rho1, e, dr)
        u2, s2, f2 = _rho_factor(rho2, e, dr)
        unit = u1 * u2 * aq_e.unit ** dr
        shift = s1 + s2 + aq_e.exp * dr
        if N is INFINITY and shift >= order \
                and prev_shift is not None and shift >= prev_shift:
            break
        prev_shift = shift
        num = f1 + f2
        den: list = []
        for rho in finite_rhos:
            base = aq_e / rho
            _, ff = finite_linear_factors(poch(base.unit, base.exp, 1, e, dr))
            den.extend((u, x, False) for u, x in ff)
        if N is not INFINITY:
            _, qf = finite_linear_factors(poch(1, e, 1, e, N - dr))
            den.extend((u, x, False) for u, x in qf)
            _, af = finite_linear_factors(poch(aq_e.unit, aq_e.exp, 1, e, N + dr))
            den.extend((u, x, False) for u, x in af)
        piece = assemble_term(unit, shift, num, den, order)
        if piece is not None:
            term = piece * alpha_mp(pspec, dr, order)
            if N is INFINITY:
                term = term * inv_qe_inf * inv_aq_inf
            rhs = rhs + term
        r += 1
    return lhs, rhs


def lemma_identity_sides(pair_id_or_dek, a: Monomial, spec: LemmaSpec,
                         rescale=1) -> tuple[QSeries, QSeries]:
    """Lemma sides in identity normalization: multiplied by the Euler factor
    (q^e;q^e)_inf and by (a^e q^e/rho;q^e)_inf for each finite rho, then with
    exponents rescaled (q -> q^rescale) where the printed identity was."""
    if spec.N is not INFINITY:
        raise QBaileyError("identity normalization applies to the N -> infinity case")
    if isinstance(pair_id_or_dek, str):
        d, e, k = pair_triple(pair_id_or_dek)
    else:
        d, e, k = pair_id_or_dek
    rescale = Fraction(rescale)
    order = Fraction(spec.order)
    inner_order = order / rescale
    lhs, rhs = lemma_sides(pair_id_or_dek, a,
                           LemmaSpec(spec.rho1, spec.rho2, INFINITY, inner_order))
    aq_e = mono(a.unit ** e, a.exp * e + e)
    factors = [poch(1, e, 1, e, INFINITE)]
    for rho in (spec.rho1, spec.rho2):
        if rho is not INFINITY:
            base = aq_e / rho
            factors.append(poch(base.unit, base.exp, 1, e, INFINITE))
    m = product_spec_eval(ProductSpec(tuple(factors)), inner_order)
    lhs = (lhs * m).scale_exponents(rescale) if rescale != 1 else lhs * m
    rhs = (rhs * m).scale_exponents(rescale) if rescale != 1 else rhs * m
    return lhs, rhs

"""Identity registry: a machine-readable catalog of series = product identities.

Registry files are JSON.  Each identity entry carries a left-hand summand
(TermSpec) and a right-hand product (list of Pochhammer factor dicts):

    {"identities": [
        {"id": "RRa1",
         "vars": ["n"],
         "lhs": {"units": [{"unit": "-1", "power": {"n": 1}}],
                 "qexp": {"A": "1"},
                 "apow": null,
                 "num": [],
                 "den": [{"base_unit": "1", "base_exp": "1",
                          "step_unit": "1", "step_exp": "1",
                          "length": {"n": 1}, "power": 1}]},
         "rhs": [ ...factor dicts with "length": int or "inf"... ],
         "meta": {...}}]}

Rationals are "p/q" strings, units are shorthand tags ("1", "-1", "i",
"-i", "omega", ...), plain rationals, or 4-lists of coordinates.  Factor
lengths inside a TermSpec are integer linear forms in the summation
indices; bases may reference the symbol a through "apow", substituted at
evaluation time.  The same TermSpec DSL encodes the closed Bailey-pair
beta formulas (summed over r with n as a parameter).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .cyclo import Cyclo, ONE as C_ONE, as_cyclo, parse_unit
from .errors import RegistryError
from .hypergeom import Monomial
from .qseries import QSeries, Verdict
from .qproducts import (INFINITE, PochFactor, ProductSpec, assemble_term,
                        finite_linear_factors, infinite_linear_factors,
                        product_spec_eval)


# -- linear and quadratic forms -------------------------------------------------

@dataclass(frozen=True)
class LinearForm:
    n: int = 0
    r: int = 0
    c: int = 0

    def __call__(self, nval: int, rval: int) -> int:
        return self.n * nval + self.r * rval + self.c


@dataclass(frozen=True)
class QuadForm:
    A: Fraction = Fraction(0)
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    D: Fraction = Fraction(0)
    E: Fraction = Fraction(0)
    F: Fraction = Fraction(0)

    def __call__(self, n: int, r: int) -> Fraction:
        return (self.A * n * n + self.B * n * r + self.C * r * r
                + self.D * n + self.E * r + self.F)


@dataclass(frozen=True)
class TermPoch:
    """A Pochhammer symbol whose length is a linear form in the indices."""
    base_unit: Cyclo
    base_exp: Fraction
    step_unit: Cyclo
    step_exp: Fraction
    length: LinearForm
    power: int = 1
    base_a_pow: int = 0  # base carries a^base_a_pow, substituted at evaluation

    def resolved(self, nval: int, rval: int, a: Monomial | None) -> PochFactor:
        unit, exp = self.base_unit, self.base_exp
        if self.base_a_pow:
            if a is None:
                raise RegistryError("factor references the symbol a but none was given")
            unit = unit * a.unit ** self.base_a_pow
            exp = exp + a.exp * self.base_a_pow
        return PochFactor(unit, exp, self.step_unit, self.step_exp,
                          self.length(nval, rval), 1)


@dataclass(frozen=True)
class TermSpec:
    variables: tuple[str, ...]
    units: tuple[tuple[Cyclo, LinearForm], ...]
    qexp: QuadForm
    apow: LinearForm | None
    num: tuple[TermPoch, ...]
    den: tuple[TermPoch, ...]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    lhs: TermSpec
    rhs: ProductSpec
    meta: dict = field(compare=False, hash=False, default_factory=dict)


# -- term evaluation -------------------------------------------------------------

def term_value(spec: TermSpec, nval: int, rval: int, a: Monomial | None,
               order) -> QSeries | None:
    """One summand at lattice point (n, r); None when the term vanishes."""
    unit = C_ONE
    for u, pw in spec.units:
        unit = unit * u ** pw(nval, rval)
    shift = spec.qexp(nval, rval)
    if spec.apow is not None:
        if a is None:
            raise RegistryError("TermSpec with apow needs the a monomial")
        p = spec.apow(nval, rval)
        unit = unit * a.unit ** p
        shift = shift + a.exp * p

    num: list = []
    den: list = []
    for side, pochs in ((num, spec.num), (den, spec.den)):
        other = den if side is num else num
        for tp in pochs:
            f = tp.resolved(nval, rval, a)
            flip, factors = finite_linear_factors(f)
            parametric = tp.base_a_pow != 0
            tagged = [(u, x, parametric) for u, x in factors] * tp.power
            (other if flip else side).extend(tagged)
    return assemble_term(unit, shift, num, den, order)


def _kill_factor(tp: TermPoch, nval: int, rval: int, a: Monomial | None) -> bool:
    # a denominator symbol with negative length whose reciprocal vanishes
    # kills this term and every later r at this n (the length only shrinks)
    if tp.length.r >= 0:
        return False
    if tp.length(nval, rval) >= 0:
        return False
    f = tp.resolved(nval, rval, a)
    _, factors = finite_linear_factors(f)
    return any(x == 0 and u == C_ONE for u, x in factors)


def _sum_r_at_n(spec: TermSpec, nval: int, a: Monomial | None, order: Fraction,
                total: QSeries, max_terms: int = 100000) -> QSeries:
    a_exp = a.exp if a is not None else Fraction(0)

    def val_lb(r: int) -> Fraction:
        v = spec.qexp(nval, r)
        if spec.apow is not None:
            v += a_exp * spec.apow(nval, r)
        return v

    rval = 0
    prev = None
    while True:
        if rval > max_terms:
            raise RegistryError("summation failed to terminate")
        v = val_lb(rval)
        if v >= order and prev is not None and v >= prev:
            # past the vertex of the r-section, valuations only grow
            if spec.qexp.C > 0 or (spec.qexp.B * nval + spec.qexp.E) > 0 \
                    or (spec.apow is not None and a_exp * spec.apow.r > 0):
                break
        prev = v
        if any(_kill_factor(tp, nval, rval, a) for tp in spec.den):
            break
        if v < order:
            t = term_value(spec, nval, rval, a, order)
            if t is not None:
                total = total + t
        rval += 1
    return total


def sum_lhs(spec: TermSpec, order, a: Monomial | None = None) -> QSeries:
    """Sum the (single or double) series over its lattice, truncated at order."""
    order = Fraction(order)
    total = QSeries.zero(order)
    two_vars = "r" in spec.variables
    q = spec.qexp

    def min_over_r(nval: int) -> Fraction:
        if not two_vars:
            return q(nval, 0)
        if q.C == 0:
            return q(nval, 0)
        vertex = Fraction(-(q.B * nval + q.E), 2 * q.C)
        cands = {0, max(0, int(vertex)), max(0, int(vertex) + 1)}
        return min(q(nval, rv) for rv in cands)

    nval = 0
    hits_above = 0
    while True:
        m = min_over_r(nval)
        if m >= order:
            hits_above += 1
            if hits_above >= 2:
                break
        else:
            hits_above = 0
        if two_vars:
            total = _sum_r_at_n(spec, nval, a, order, total)
        elif m < order:
            t = term_value(spec, nval, 0, a, order)
            if t is not None:
                total = total + t
        nval += 1
    return total


def beta_formula_sum(spec: TermSpec, nval: int, a: Monomial, order) -> QSeries:
    """Evaluate a closed beta formula: sum over r with n held fixed."""
    return _sum_r_at_n(spec, nval, a, Fraction(order), QSeries.zero(Fraction(order)))


# -- parsing ----------------------------------------------------------------------

def _frac(v, ctx: str) -> Fraction:
    try:
        return Fraction(str(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise RegistryError(f"{ctx}: bad rational {v!r}") from exc


def _linform(d, ctx: str) -> LinearForm:
    if not isinstance(d, dict):
        raise RegistryError(f"{ctx}: linear form must be an object, got {d!r}")
    extra = set(d) - {"n", "r", "c"}
    if extra:
        raise RegistryError(f"{ctx}: unknown linear-form keys {sorted(extra)}")
    return LinearForm(int(d.get("n", 0)), int(d.get("r", 0)), int(d.get("c", 0)))


def _term_poch(d, ctx: str) -> TermPoch:
    try:
        return TermPoch(
            base_unit=parse_unit(d.get("base_unit", "1")),
            base_exp=_frac(d.get("base_exp", 0), ctx),
            step_unit=parse_unit(d.get("step_unit", "1")),
            step_exp=_frac(d.get("step_exp", 1), ctx),
            length=_linform(d["length"], ctx),
            power=int(d.get("power", 1)),
            base_a_pow=int(d.get("apow", 0)),
        )
    except KeyError as exc:
        raise RegistryError(f"{ctx}: factor missing field {exc}") from exc


def parse_term_spec(d, ctx: str, variables=("n", "r")) -> TermSpec:
    qd = d.get("qexp", {})
    qexp = QuadForm(**{k: _frac(qd.get(k, 0), ctx) for k in "ABCDEF"})
    units = tuple((parse_unit(u["unit"]), _linform(u["power"], ctx))
                  for u in d.get("units", []))
    apow = d.get("apow")
    return TermSpec(
        variables=tuple(variables),
        units=units,
        qexp=qexp,
        apow=_linform(apow, ctx) if apow is not None else None,
        num=tuple(_term_poch(p, ctx) for p in d.get("num", [])),
        den=tuple(_term_poch(p, ctx) for p in d.get("den", [])),
    )


def parse_product(factors, ctx: str) -> ProductSpec:
    out = []
    for fd in factors:
        ln = fd.get("length", "inf")
        length = INFINITE if ln == "inf" else int(ln)
        try:
            out.append(PochFactor(
                base_unit=parse_unit(fd.get("base_unit", "1")),
                base_exp=_frac(fd.get("base_exp", 1), ctx),
                step_unit=parse_unit(fd.get("step_unit", "1")),
                step_exp=_frac(fd.get("step_exp", 1), ctx),
                length=length,
                power=int(fd.get("power", 1)),
            ))
        except Exception as exc:
            raise RegistryError(f"{ctx}: bad product factor {fd!r}: {exc}") from exc
    return ProductSpec(tuple(out))


def _validate_coercive(ident: IdentitySpec):
    q = ident.lhs.qexp
    two = "r" in ident.lhs.variables
    if q.A <= 0:
        raise RegistryError(f"{ident.id}: non-coercive exponent (A = {q.A} <= 0)")
    if two:
        if q.C <= 0:
            raise RegistryError(f"{ident.id}: non-coercive exponent (C = {q.C} <= 0)")
        # on the nonnegative lattice either a nonnegative cross term or full
        # positive semidefiniteness guarantees the r-sections run away
        if q.B < 0 and 4 * q.A * q.C - q.B * q.B < 0:
            raise RegistryError(f"{ident.id}: indefinite exponent with negative cross term")


def load_registry(path=None) -> list[IdentitySpec]:
    """Load and validate a registry file (the bundled one by default)."""
    if path is None:
        raw = resources.files("qbailey.data").joinpath("identities.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    if not raw.strip():
        return []
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise RegistryError(f"registry parse error at line {exc.lineno}: {exc.msg}") from exc
    entries = doc.get("identities", []) if isinstance(doc, dict) else doc
    out: list[IdentitySpec] = []
    seen: set[str] = set()
    for i, e in enumerate(entries):
        ctx = e.get("id", f"entry #{i}")
        if "id" not in e:
            raise RegistryError(f"{ctx}: missing id")
        if e["id"] in seen:
            raise RegistryError(f"duplicate identity id {e['id']!r}")
        seen.add(e["id"])
        variables = tuple(e.get("vars", ["n", "r"]))
        ident = IdentitySpec(
            id=e["id"],
            lhs=parse_term_spec(e["lhs"], ctx, variables),
            rhs=parse_product(e["rhs"], ctx),
            meta=dict(e.get("meta", {})),
        )
        _validate_coercive(ident)
        out.append(ident)
    return out


# -- verification -----------------------------------------------------------------

def eval_rhs(ident: IdentitySpec, order) -> QSeries:
    return product_spec_eval(ident.rhs, Fraction(order))


def eval_lhs(ident: IdentitySpec, order) -> QSeries:
    return sum_lhs(ident.lhs, Fraction(order))


@dataclass
class IdentityReport:
    id: str
    status: str                      # "pass" | "fail" | "error"
    order: Fraction
    millis: int = 0
    first_mismatch: Verdict | None = None
    message: str = ""

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status, "order": str(self.order),
               "millis": self.millis}
        if self.first_mismatch is not None and not self.first_mismatch.equal:
            v = self.first_mismatch
            out["first_mismatch"] = {"exponent": str(v.exponent),
                                     "lhs": str(v.left), "rhs": str(v.right)}
        if self.message:
            out["message"] = self.message
        return out


def verify_identity(ident: IdentitySpec, order) -> IdentityReport:
    order = Fraction(order)
    t0 = time.perf_counter()
    try:
        lhs = eval_lhs(ident, order)
        rhs = eval_rhs(ident, order)
        verdict = lhs.equal_to_order(rhs, order)
        ms = int((time.perf_counter() - t0) * 1000)
        if verdict.equal:
            return IdentityReport(ident.id, "pass", order, ms)
        return IdentityReport(ident.id, "fail", order, ms, first_mismatch=verdict)
    except Exception as exc:
        ms = int((time.perf_counter() - t0) * 1000)
        return IdentityReport(ident.id, "error", order, ms, message=str(exc))


def verify_all(identities: list[IdentitySpec], order, threads: int = 1
               ) -> list[IdentityReport]:
    """Verify every entry; reports come back in registry order regardless of threads."""
    order = Fraction(order)
    if threads <= 1:
        return [verify_identity(e, order) for e in identities]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(verify_identity, e, order) for e in identities]
        return [f.result() for f in futures]


def triple_product_blocks(spec: ProductSpec) -> list[tuple[Fraction, Fraction]]:
    """Detect (a, m) blocks (q^a, q^{m-a}, q^m; q^m)_inf inside a product."""
    pool: dict[tuple[Fraction, Fraction], int] = {}
    for f in spec.factors:
        if f.length is INFINITE and f.power > 0 and f.base_unit == C_ONE \
                and f.step_unit == C_ONE:
            pool[(f.base_exp, f.step_exp)] = pool.get((f.base_exp, f.step_exp), 0) + f.power
    blocks = []
    for (a, m), cnt in sorted(pool.items()):
        if a >= m or cnt <= 0:
            continue
        euler = pool.get((m, m), 0)
        if 2 * a == m:
            while pool.get((a, m), 0) >= 2 and euler > 0:
                pool[(a, m)] -= 2
                pool[(m, m)] = euler = euler - 1
                blocks.append((a, m))
        else:
            comp = pool.get((m - a, m), 0)
            while pool.get((a, m), 0) > 0 and comp > 0 and euler > 0:
                pool[(a, m)] -= 1
                pool[(m - a, m)] = comp = comp - 1
                pool[(m, m)] = euler = euler - 1
                blocks.append((a, m))
    return blocks

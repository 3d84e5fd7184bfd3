"""Registry of identities checked as exact equalities in Q(lambda)[x].

Each entry turns a parameter point into two lists of polynomials (left and
right side, component by component) which must agree coefficient by
coefficient.  Scalar identities use constant polynomials; structural checks
compare a pairing matrix against n! delta_{n,k}.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import families as fam
from .errors import BadParameter, RangeTooLarge
from .poly import Poly, falling_factorial, x_pow
from .scalar import LAMBDA, LambdaRat
from .series import Series, exp_series
from .umbral import associated_by_inverse, pairing_matrix, transfer

MUST_HOLD = "must_hold"
PROBE = "probe"

IDS = (
    "T1", "T2", "T3", "T4", "T5", "T6", "T8", "T9", "T10",
    "E15", "E16", "E19", "E41", "E43", "E45", "E47", "E51", "E53", "EFinal",
)

DEFAULT_CAPS = {"T10": 3, "EFinal": 4}

_ONE_MINUS = 1 - LAMBDA
_NEG = -LAMBDA


def trunc_guard(default: int = 2) -> int:
    """Extra series precision; UMBRA_TRUNC_GUARD overrides the default."""
    value = os.environ.get("UMBRA_TRUNC_GUARD")
    if value is None:
        return default
    guard = int(value)
    if guard < 0:
        raise BadParameter("UMBRA_TRUNC_GUARD must be nonnegative")
    return guard


Sides = Tuple[List[Poly], List[Poly]]


def _c(value) -> Poly:
    return Poly.const(value)


def _shifted_sum(weights, base: Poly) -> Poly:
    """sum_l weights[l] * base(x + l)."""
    out = Poly()
    for l, w in enumerate(weights):
        if not w.is_zero():
            out = out + base.shift(l).scale(w)
    return out


# -- associated families, cached per process ---------------------------------

_FAMILY_CACHE: Dict[tuple, tuple] = {}


def _associated(kind: str, param, n: int) -> Poly:
    key = (kind, param)
    polys = _FAMILY_CACHE.get(key, ())
    if len(polys) <= n:
        trunc = n + trunc_guard()
        if kind == "fe":
            f = fam.fe_delta(param, trunc)
        elif kind == "t_lambda":
            f = fam.t_lambda_delta(trunc)
        elif kind == "t_poly":
            f = fam.t_poly_delta(trunc)
        elif kind == "s_poly":
            f = fam.s_poly_delta(param, trunc)
        elif kind == "abel":
            f = fam.abel_delta(param, trunc)
        elif kind == "exp":
            f = fam.exp_minus_one(trunc)
        else:
            raise KeyError(kind)
        polys = associated_by_inverse(f, n).polys
        _FAMILY_CACHE[key] = polys
    return polys[n]


# -- the identities ----------------------------------------------------------


def _t1(n, a):
    m = (a - 1) * n
    h = fam.frobenius_euler(n - 1, a * n)
    weights = [_NEG ** (m - l) * comb(m, l) for l in range(m + 1)]
    rhs = _shifted_sum(weights, h).scale(_ONE_MINUS ** (-m))
    return [fam.frobenius_euler(n - 1, n)], [rhs]


def _t2(n, a, form="reduced"):
    if form == "reduced":
        left_exp, right_exp = 0, n
    else:
        left_exp, right_exp = a * n, (a + 1) * n
    lw = [_NEG ** (left_exp - l) * comb(a * n, l) for l in range(a * n + 1)]
    m = (a + 1) * n
    rw = [_NEG ** (right_exp - l) * comb(m, l) for l in range(m + 1)]
    lhs = _shifted_sum(lw, x_pow(n - 1))
    rhs = _shifted_sum(rw, fam.frobenius_euler(n - 1, n)).scale(_ONE_MINUS ** (-n))
    return [lhs], [rhs]


def _t3(n, a):
    lhs = fam.frobenius_euler(n - 1, a * n).shift(1)
    rhs = Poly()
    for l in range(n):
        s1 = fam.stirling1(n - 1, l)
        if not s1:
            continue
        for k in range(l + 1):
            w = Fraction(s1 * fam.stirling2(k + n, n) * comb(l, k), comb(k + n, n))
            rhs = rhs + fam.frobenius_euler(l - k, a * n).scale(w)
    return [lhs], [rhs]


def _t4(n, l):
    lhs = fam.stirling1(n, l + 1)
    rhs = fam.bernoulli_number(n - 1 - l, n) * comb(n - 1, l)
    return [_c(lhs)], [_c(rhs)]


def _t5(n, a):
    h = fam.frobenius_euler(n - 1, a * n)
    weights = [_NEG ** (a * n - l) * comb(a * n, l) for l in range(a * n + 1)]
    lhs = _shifted_sum(weights, h).scale(_ONE_MINUS ** (-a * n))
    x_minus_1 = Poly((-1, 1))
    rhs = Poly()
    for l in range(n):
        s1 = fam.stirling1(n - 1, l)
        if not s1:
            continue
        for k in range(l + 1):
            w = Fraction(comb(l, k) * s1 * fam.stirling2(k + n, n), comb(k + n, n))
            rhs = rhs + (x_minus_1 ** (l - k)).scale(w)
    return [lhs], [rhs]


def _t6(n, a, p):
    an = a * n
    total = LambdaRat()
    for k in range(an + 1):
        outer = _NEG ** (an - k) * comb(an, k)
        for l in range(p, n):
            kl = comb(n - 1, l) * k ** (n - 1 - l)
            if not kl:
                continue
            for m in range(p, l + 1):
                w = kl * comb(l, m) * comb(m, p)
                h = fam.frobenius_euler_value(l - m, an)
                b = fam.bernoulli_number(m - p, n)
                total = total + outer * h * b * w
    rhs = total * _ONE_MINUS ** (-an)
    return [_c(fam.stirling1(n, p + 1))], [_c(rhs)]


def _t8(n, order=None):
    if order is None:
        order = n + trunc_guard(4)
    c = fam.exp_minus_lambda(order) ** n
    lhs = []
    for m in range(order + 1):
        coeffs = [c[m - i] * Fraction((-1) ** i, factorial(i)) for i in range(m + 1)]
        lhs.append(Poly(coeffs))
    rhs = []
    for m in range(order + 1):
        total = Poly()
        for l in range(min(n, m) + 1):
            k = m - l
            head = _ONE_MINUS ** (n - l) * comb(n, l)
            for j in range(k + 1):
                w = Fraction(comb(k, j) * fam.stirling2(j + l, l) * (-1) ** (k - j),
                             comb(j + l, l) * factorial(k))
                if w:
                    total = total + Poly.monomial(k - j, head * w)
        rhs.append(total)
    return lhs, rhs


def _t9(n, a, b):
    b = Fraction(b)
    an = a * n
    lhs = x_pow(n - 1).shift(-b * n)
    rhs = Poly()
    for l in range(an + 1):
        for k in range(n - l):
            idx = n - 1 - l - k
            if idx < 0:
                continue
            h = fam.frobenius_euler(idx, an)
            for j in range(k + 1):
                w = Fraction(comb(an, l) * comb(k, j) * perm(n - 1, k + l),
                             factorial(k) * comb(j + l, l))
                w *= fam.stirling2(j + l, l) * (-1) ** (k - j) * (n * b) ** (k - j)
                if w:
                    rhs = rhs + h.scale(_ONE_MINUS ** (-l) * w)
    return [lhs], [rhs]


def _changhee_at(mu: int, top: int):
    return [fam.changhee2(l)(mu) for l in range(top + 1)]


def _t10(n, mu, k):
    lhs = Fraction(comb(mu * n, n - k), factorial(k - 1))
    values = _changhee_at(mu, n - k)
    rhs = LambdaRat()
    for b in range(k, n + 1):
        comp = fam.composition_power_coeff(values, b - k, n)
        if comp.is_zero():
            continue
        inner = LambdaRat()
        for a in range(n + 1):
            w = comb(n, a) * comb(a, n - b)
            if w:
                inner = inner + LAMBDA**a * w
        rhs = rhs + inner * comp * Fraction(comb(b - 1, k - 1), factorial(b - 1))
    return [_c(lhs)], [_c(rhs)]


def _structural(f: Series, polys: Sequence[Poly]) -> Sides:
    matrix = pairing_matrix(Series.const(1, f.trunc), f, polys)
    lhs, rhs = [], []
    for k, row in enumerate(matrix):
        for m, value in enumerate(row):
            lhs.append(_c(value))
            rhs.append(_c(factorial(m) if m == k else 0))
    return lhs, rhs


def _e15(n_max):
    polys = [Poly.const(1)]
    for n in range(1, n_max + 1):
        polys.append(fam.frobenius_euler(n - 1, n).mul_x().scale(_ONE_MINUS ** (-n)))
    return _structural(fam.t_lambda_delta(n_max + trunc_guard()), polys)


def _e16(n_max, a):
    polys = [Poly.const(1)]
    for n in range(1, n_max + 1):
        polys.append(fam.frobenius_euler(n - 1, a * n).mul_x())
    return _structural(fam.fe_delta(a, n_max + trunc_guard()), polys)


def _e19(n, a):
    an = a * n
    weights = [_NEG ** (an - l) * comb(an, l) for l in range(an + 1)]
    lhs = _shifted_sum(weights, x_pow(n - 1)).mul_x().scale(_ONE_MINUS ** (-an))
    # ((1-lambda)/(e^t-lambda))^a t is the fe delta with exponent -a
    return [lhs], [_associated("fe", -a, n)]


def _e41(n):
    c = fam.changhee2(n)
    return [c + c.shift(1).scale(LAMBDA)], [falling_factorial(n)]


def _e43(n):
    base = fam.bernoulli_higher(n - 1, n).mul_x()
    weights = [_NEG**l for l in range(n + 1)]
    return [fam.changhee2(n)], [_shifted_sum(weights, base)]


def _e45(n):
    return [fam.t_poly(n)], [_associated("t_poly", None, n)]


def _e47(n, mu):
    return [fam.s_poly(n, mu)], [_associated("s_poly", mu, n)]


def _e51(n):
    return [_c(fam.frobenius_euler_number(n))], [_c(fam.frobenius_euler_number_by_series(n))]


def _e53(n):
    weights = [_NEG ** (n - k) * comb(n, k) for k in range(n + 1)]
    lhs = _shifted_sum(weights, x_pow(n - 1)).mul_x().scale(_ONE_MINUS ** (-n))
    trunc = n + trunc_guard()
    rhs = transfer(Series.t(trunc), fam.fe_delta(-1, trunc), x_pow(n), n)
    return [lhs], [rhs]


def _efinal(n):
    values = [fam.frobenius_euler_number(l) for l in range(n)]
    rhs = Poly()
    for l in range(n):
        comp = fam.composition_power_coeff(values, l, n)
        if comp.is_zero():
            continue
        for k in range(n + 1):
            w = comp * _NEG ** (n - k) * (comb(n, k) * comb(n - 1, l))
            rhs = rhs + x_pow(n - 1 - l).shift(k).scale(w)
    rhs = rhs.scale(_ONE_MINUS ** (-n))
    return [x_pow(n - 1)], [rhs]


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class _Entry:
    title: str
    expectation: str
    sides: Callable[..., Sides]
    grid: Callable[..., List[dict]]


def _rng(lo, hi):
    return range(lo, hi + 1)


def _grid_na(n_lo, n_hi, a_lo, a_hi):
    def build(n_max=None, a_max=None, **_):
        return [{"n": n, "a": a}
                for n in _rng(n_lo, n_max if n_max is not None else n_hi)
                for a in _rng(a_lo, a_max if a_max is not None else a_hi)]
    return build


def _grid_n(n_lo, n_hi):
    def build(n_max=None, **_):
        return [{"n": n} for n in _rng(n_lo, n_max if n_max is not None else n_hi)]
    return build


def _grid_t2(n_max=None, a_max=None, **_):
    return [{"n": n, "a": a, "form": form}
            for n in _rng(1, n_max if n_max is not None else 4)
            for a in _rng(0, a_max if a_max is not None else 3)
            for form in ("reduced", "unreduced")]


def _grid_t4(n_max=None, **_):
    return [{"n": n, "l": l} for n in _rng(1, n_max if n_max is not None else 8) for l in range(n)]


def _grid_t6(n_max=None, a_max=None, **_):
    return [{"n": n, "a": a, "p": p}
            for n in _rng(1, n_max if n_max is not None else 3)
            for a in _rng(0, a_max if a_max is not None else 2)
            for p in range(n)]


def _grid_t9(n_max=None, a_max=None, b=None, **_):
    bs = b if b is not None else (Fraction(1), Fraction(-1), Fraction(1, 2))
    return [{"n": n, "a": a, "b": Fraction(bb)}
            for n in _rng(1, n_max if n_max is not None else 3)
            for a in _rng(0, a_max if a_max is not None else 2)
            for bb in bs]


def _grid_t10(n_max=None, mu=None, **_):
    mus = mu if mu is not None else range(0, 4)
    return [{"n": n, "mu": int(m), "k": k}
            for n in _rng(1, n_max if n_max is not None else 3)
            for m in mus
            for k in _rng(1, n)]


def _grid_e15(n_max=None, **_):
    return [{"n_max": n_max if n_max is not None else 5}]


def _grid_e16(n_max=None, a_max=None, **_):
    a_values = _rng(1, a_max) if a_max is not None else (-1, 1, 2)
    return [{"n_max": n_max if n_max is not None else 5, "a": a} for a in a_values]


def _grid_e47(n_max=None, mu=None, **_):
    mus = mu if mu is not None else range(1, 4)
    return [{"n": n, "mu": int(m)} for n in _rng(0, n_max if n_max is not None else 6) for m in mus]


_REGISTRY: Dict[str, _Entry] = {
    "T1": _Entry("H_{n-1}^(n) as a binomial sum of shifted H_{n-1}^(an)", MUST_HOLD, _t1, _grid_na(1, 4, 1, 3)),
    "T2": _Entry("power sums against shifted H_{n-1}^(n)", MUST_HOLD, _t2, _grid_t2),
    "T3": _Entry("H_{n-1}^(an)(x+1) via Stirling numbers of both kinds", MUST_HOLD, _t3, _grid_na(1, 6, 0, 3)),
    "T4": _Entry("S1(n, l+1) = C(n-1, l) B_{n-1-l}^(n)", MUST_HOLD, _t4, _grid_t4),
    "T5": _Entry("shifted H_{n-1}^(an) sum against powers of x-1", MUST_HOLD, _t5, _grid_na(1, 4, 0, 3)),
    "T6": _Entry("S1(n, p+1) via Frobenius-Euler and Bernoulli numbers", MUST_HOLD, _t6, _grid_t6),
    "T8": _Entry("expansion of e^(-xt)(e^t - lambda)^n", MUST_HOLD, _t8, _grid_n(0, 4)),
    "T9": _Entry("(x - bn)^(n-1) in terms of H^(an)", MUST_HOLD, _t9, _grid_t9),
    "T10": _Entry("C(mu n, n-k)/(k-1)! via Changhee values", MUST_HOLD, _t10, _grid_t10),
    "E15": _Entry("x H_{n-1}^(n)/(1-lambda)^n is associated to t(e^t - lambda)", MUST_HOLD, _e15, _grid_e15),
    "E16": _Entry("x H_{n-1}^(an) is associated to t((e^t-lambda)/(1-lambda))^a", MUST_HOLD, _e16, _grid_e16),
    "E19": _Entry("closed form for the family of ((1-lambda)/(e^t-lambda))^a t", MUST_HOLD, _e19, _grid_na(1, 5, 1, 2)),
    "E41": _Entry("(1 + lambda e^t) C_n(x|lambda) = (x)_n", MUST_HOLD, _e41, _grid_n(0, 8)),
    "E43": _Entry("C_n as a finite geometric sum of shifted x B_{n-1}^(n)", PROBE, _e43, _grid_n(1, 4)),
    "E45": _Entry("t_n(x|lambda) closed form vs reversion", MUST_HOLD, _e45, _grid_n(0, 6)),
    "E47": _Entry("S_n(x|mu) closed form vs reversion", MUST_HOLD, _e47, _grid_e47),
    "E51": _Entry("H_n(lambda) via Stirling numbers vs series expansion", MUST_HOLD, _e51, _grid_n(0, 10)),
    "E53": _Entry("closed form for the family of ((1-lambda)/(e^t-lambda)) t vs transfer", MUST_HOLD, _e53, _grid_n(1, 6)),
    "EFinal": _Entry("x^(n-1) rebuilt from products of H_l(lambda)", MUST_HOLD, _efinal, _grid_n(1, 4)),
}


def _validate(id_: str, params: dict):
    n = params.get("n", params.get("n_max"))
    a = params.get("a")
    if id_ in ("T1",) and (n < 1 or a < 1):
        raise BadParameter("T1 needs n >= 1 and a >= 1")
    if id_ in ("T2", "T3", "T5", "T6", "T9") and (n < 1 or a < 0):
        raise BadParameter(f"{id_} needs n >= 1 and a >= 0")
    if id_ == "T9" and params["b"] == 0:
        raise BadParameter("T9 needs b != 0")
    if id_ == "T10" and (n < 1 or params["mu"] < 0):
        raise BadParameter("T10 needs n >= 1 and mu >= 0")
    if id_ in ("E16", "E19") and a == 0:
        raise BadParameter(f"{id_} needs a != 0")
    if id_ == "E47" and params["mu"] < 1:
        raise BadParameter("E47 needs mu >= 1")
    if n is not None and n < 0:
        raise BadParameter("n must be nonnegative")
    if id_ in ("E43", "E53", "EFinal", "E19") and n < 1:
        raise BadParameter(f"{id_} needs n >= 1")


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    expectation: str
    grid: Tuple[dict, ...]
    title: str = ""

    def __post_init__(self):
        if self.id not in _REGISTRY:
            raise BadParameter(f"unknown identity {self.id!r}")
        if not self.grid:
            raise BadParameter(f"empty grid for {self.id}")
        for params in self.grid:
            _validate(self.id, params)

    def describe(self) -> str:
        keys = []
        for params in self.grid:
            for k in params:
                if k not in keys:
                    keys.append(k)
        parts = []
        for k in keys:
            values = sorted({_jsonable(p[k]) for p in self.grid if k in p}, key=str)
            parts.append(f"{k} in {{{', '.join(str(v) for v in values)}}}")
        return "; ".join(parts)


def make_spec(id_: str, n_max=None, a_max=None, b=None, mu=None) -> IdentitySpec:
    """Spec for one identity with optional grid overrides."""
    if id_ not in _REGISTRY:
        raise BadParameter(f"unknown identity {id_!r}")
    if a_max is not None and a_max < 0:
        raise BadParameter("a-max must be nonnegative")
    if b is not None and any(Fraction(v) == 0 for v in b):
        raise BadParameter("b must be nonzero")
    entry = _REGISTRY[id_]
    grid = entry.grid(n_max=n_max, a_max=a_max, b=b, mu=mu)
    return IdentitySpec(id_, entry.expectation, tuple(grid), entry.title)


def registry() -> List[IdentitySpec]:
    return [make_spec(id_) for id_ in IDS]


def instance_sides(id_: str, params: dict) -> Sides:
    """Both sides of one grid point, as component lists of polynomials."""
    _validate(id_, params)
    return _REGISTRY[id_].sides(**params)


# -- verification ------------------------------------------------------------


@dataclass
class InstanceResult:
    params: dict
    status: str
    witness: Optional[str] = None
    ms: float = 0.0


@dataclass
class IdentityReport:
    id: str
    expectation: str
    grid: str
    instances: List[InstanceResult] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        """True when a must-hold identity has a failing instance."""
        return self.expectation == MUST_HOLD and any(i.status == "fail" for i in self.instances)

    def counts(self) -> Dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for inst in self.instances:
            out[inst.status] += 1
        return out


WITNESS_LIMIT = 400


def _witness(lhs: Sequence[Poly], rhs: Sequence[Poly]) -> Optional[str]:
    """Rendered rhs - lhs at the first differing component, or None."""
    if len(lhs) != len(rhs):
        return f"component count differs: {len(lhs)} vs {len(rhs)}"
    for i, (left, right) in enumerate(zip(lhs, rhs)):
        diff = right - left
        if diff.is_zero():
            continue
        text = diff.render()
        if len(text) > WITNESS_LIMIT:
            k = diff.degree
            text = f"({diff[k].render()})*x^{k} + ..."
        return text if len(lhs) == 1 else f"[{i}] {text}"
    return None


def _cap_for(id_: str, caps: Optional[dict]) -> Optional[int]:
    merged = dict(DEFAULT_CAPS)
    if caps:
        merged.update(caps)
    return merged.get(id_)


def run_instance(id_: str, params: dict, caps: Optional[dict] = None) -> InstanceResult:
    start = time.perf_counter()
    cap = _cap_for(id_, caps)
    if cap is not None and params.get("n", 0) > cap:
        n = params["n"]
        err = RangeTooLarge(
            f"n = {n} exceeds the cap {cap} "
            f"({fam.count_weak_compositions(n - 1, n)} compositions per inner sum)"
        )
        return InstanceResult(params, "skipped", f"RangeTooLarge: {err}", 0.0)
    lhs, rhs = instance_sides(id_, params)
    witness = _witness(lhs, rhs)
    ms = (time.perf_counter() - start) * 1000.0
    return InstanceResult(params, "pass" if witness is None else "fail", witness, ms)


def _run_packed(args):
    return run_instance(*args)


def verify(spec: IdentitySpec, jobs: int = 1, caps: Optional[dict] = None) -> IdentityReport:
    """Check every grid point of ``spec``; results keep grid order."""
    work = [(spec.id, dict(p), caps) for p in spec.grid]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_packed, work))
    else:
        results = [run_instance(*w) for w in work]
    return IdentityReport(spec.id, spec.expectation, spec.describe(), results)


def verify_many(specs: Sequence[IdentitySpec], jobs: int = 1,
                caps: Optional[dict] = None) -> List[IdentityReport]:
    if jobs <= 1:
        return [verify(s, 1, caps) for s in specs]
    work = [(s.id, dict(p), caps) for s in specs for p in s.grid]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = iter(list(pool.map(_run_packed, work)))
    return [
        IdentityReport(s.id, s.expectation, s.describe(), [next(results) for _ in s.grid])
        for s in specs
    ]


def exit_code(reports: Sequence[IdentityReport]) -> int:
    return 1 if any(r.failed for r in reports) else 0


# -- rendering ---------------------------------------------------------------


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    return value


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={_jsonable(v)}" for k, v in params.items())


def report_dict(r: IdentityReport, timing: bool = True) -> dict:
    instances = []
    for inst in r.instances:
        entry = {"params": {k: _jsonable(v) for k, v in inst.params.items()},
                 "status": inst.status}
        if inst.witness is not None:
            entry["witness"] = inst.witness
        if timing:
            entry["ms"] = round(inst.ms, 3)
        instances.append(entry)
    return {"id": r.id, "expectation": r.expectation, "grid": r.grid, "instances": instances}


def _text(r: IdentityReport, timing: bool) -> str:
    counts = r.counts()
    verdict = "FAIL" if r.failed else ("PROBE" if r.expectation == PROBE else "PASS")
    lines = [f"{r.id} [{r.expectation}] {verdict}: "
             f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped ({r.grid})"]
    for inst in r.instances:
        line = f"  {_params_text(inst.params)}: {inst.status}"
        if timing:
            line += f" ({inst.ms:.1f} ms)"
        if inst.witness is not None:
            line += f"  witness: {inst.witness}"
        lines.append(line)
    return "\n".join(lines)


CSV_FIELDS = ("id", "expectation", "params", "status", "witness")


def render_reports(reports: Sequence[IdentityReport], fmt: str = "text", timing: bool = False) -> str:
    if fmt == "json":
        return json.dumps([report_dict(r, timing) for r in reports], indent=2) + "\n"
    if fmt == "text":
        return "\n".join(_text(r, timing) for r in reports) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        fields = CSV_FIELDS + (("ms",) if timing else ())
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for r in reports:
            for inst in r.instances:
                row = [r.id, r.expectation, _params_text(inst.params), inst.status, inst.witness or ""]
                if timing:
                    row.append(f"{inst.ms:.3f}")
                writer.writerow(row)
        return buf.getvalue()
    raise BadParameter(f"unknown report format {fmt!r}")


def report_render(r: IdentityReport, fmt: str = "json", timing: bool = True) -> str:
    if fmt == "json":
        return json.dumps(report_dict(r, timing), indent=2) + "\n"
    return render_reports([r], fmt, timing)

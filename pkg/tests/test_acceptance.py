"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from math import factorial

import pytest

from umbra import families as fam
from umbra import identities as idt
from umbra.cli import main
from umbra.errors import PoleAtEvaluation
from umbra.poly import Poly, x_pow
from umbra.scalar import LAMBDA
from umbra.series import Series
from umbra.umbral import associated_by_inverse, pairing_matrix, transfer

L = LAMBDA
x = Poly.x()
N = 8
BIORTH_N = 6


def _criterion_families(trunc):
    t = Series.t(trunc)
    out = {"e^t-1": fam.exp_minus_one(trunc)}
    for b in (1, -1, Fraction(1, 2)):
        out[f"t e^(bt), b={b}"] = fam.abel_delta(b, trunc)
    out["t(e^t-L)"] = t * fam.exp_minus_lambda(trunc)
    for a in (1, 2):
        out[f"t((e^t-L)/(1-L))^{a}"] = fam.fe_delta(a, trunc)
    out["t/(1+L(1+t))"] = fam.t_poly_delta(trunc)
    for mu in (1, 2, 3):
        out[f"t/(1+t)^{mu}"] = fam.s_poly_delta(mu, trunc)
    return out


def test_criterion_1_identity_suite(acceptance_line):
    start = time.perf_counter()
    reports = idt.verify_many(idt.registry())
    elapsed = time.perf_counter() - start
    must = [r for r in reports if r.expectation == idt.MUST_HOLD]
    total = sum(len(r.instances) for r in must)
    bad = [(r.id, i.params) for r in must for i in r.instances if i.status != "pass"]
    ok = not bad and elapsed < 300
    acceptance_line(1, ok, f"{total} must-hold instances over {len(must)} identities, "
                           f"{len(bad)} not passing, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 300


def test_criterion_2_dual_path(acceptance_line):
    t = Series.t(N + 2)
    mismatches = []
    checked = 0
    for name, f in _criterion_families(N + 2).items():
        family = associated_by_inverse(f, N)
        for n in range(N + 1):
            q = transfer(t, f, x_pow(n), n)
            checked += 1
            if q != family[n]:
                mismatches.append((name, n))
    acceptance_line(2, not mismatches, f"{checked} (f, n) pairs, {len(mismatches)} mismatches")
    assert not mismatches


def test_criterion_3_oracles(acceptance_line):
    problems = []
    for n in range(13):
        for l in range(13):
            if fam.stirling2(l, n) != fam.stirling2_by_series(l, n):
                problems.append(("S2", l, n))
            if fam.stirling1(n, l) != (fam.stirling1_by_expansion(n, l) if l <= n else 0):
                problems.append(("S1", n, l))
    for n in range(11):
        if fam.frobenius_euler_number(n) != fam.frobenius_euler_number_by_series(n):
            problems.append(("H", n))
    for b in (1, -1, Fraction(1, 2)):
        family = associated_by_inverse(fam.abel_delta(b, 6), 6)
        for n in range(7):
            if fam.abel(n, b) != family[n]:
                problems.append(("abel", n, b))
    acceptance_line(3, not problems, f"{len(problems)} disagreements")
    assert not problems


def _is_identity_scaled(matrix):
    return all(
        v == (factorial(m) if m == k else 0)
        for k, row in enumerate(matrix) for m, v in enumerate(row)
    )


def test_criterion_4_biorthogonality(acceptance_line):
    one = Series.const(1, BIORTH_N)
    failures = []
    cases = 0
    for name, f in _criterion_families(BIORTH_N).items():
        polys = associated_by_inverse(f, BIORTH_N).polys
        cases += 1
        if not _is_identity_scaled(pairing_matrix(one, f, polys)):
            failures.append(name)
    t = Series.t(BIORTH_N)
    base = fam.frobenius_euler_base(BIORTH_N)
    for alpha in (1, 2, -1):
        polys = [fam.frobenius_euler(n, alpha) for n in range(BIORTH_N + 1)]
        cases += 1
        if not _is_identity_scaled(pairing_matrix(base ** (-alpha), t, polys)):
            failures.append(f"H^({alpha})")
    polys = [fam.changhee2(n) for n in range(BIORTH_N + 1)]
    cases += 1
    if not _is_identity_scaled(pairing_matrix(fam.changhee_g(BIORTH_N), fam.exp_minus_one(BIORTH_N), polys)):
        failures.append("Changhee")
    acceptance_line(4, not failures, f"{cases} families, n,k <= {BIORTH_N}, failures: {failures or 'none'}")
    assert not failures


def test_criterion_5_probe(acceptance_line, capsys):
    result = idt.run_instance("E43", {"n": 1})
    expected = ((x * (1 - L) - L) - fam.changhee2(1)).render()
    code = main(["verify", "--all"])
    capsys.readouterr()
    ok = result.status == "fail" and result.witness == expected and code == 0
    acceptance_line(5, ok, f"E43 n=1 {result.status}, witness {result.witness}; verify --all exit {code}")
    assert result.status == "fail"
    assert result.witness == expected
    assert code == 0


LAMBDAS = (Fraction(2), Fraction(-2), Fraction(1, 3))
XS = (0, 1, -1, 5)


def test_criterion_6_numeric_specialisation(acceptance_line):
    rng = random.Random(20240611)
    pool = [(s.id, p) for s in idt.registry() if s.expectation == idt.MUST_HOLD
            for p in s.grid if p.get("n", 0) <= idt.DEFAULT_CAPS.get(s.id, 99)]
    sample = rng.sample(pool, 20)
    disagreements = []
    for id_, params in sample:
        lhs, rhs = idt.instance_sides(id_, params)
        symbolic = all(a == b for a, b in zip(lhs, rhs)) and len(lhs) == len(rhs)
        for lam in LAMBDAS:
            for xv in XS:
                numeric = all(a.evaluate(lam, xv) == b.evaluate(lam, xv) for a, b in zip(lhs, rhs))
                if numeric != symbolic or not symbolic:
                    disagreements.append((id_, params, lam, xv))
    poles = 0
    for thunk in (lambda: fam.frobenius_euler(2, 1).evaluate(1, 0),
                  lambda: fam.frobenius_euler_number(3).evaluate(1),
                  lambda: fam.changhee2(2).evaluate(-1, 0)):
        with pytest.raises(PoleAtEvaluation):
            thunk()
        poles += 1
    ok = not disagreements and poles == 3
    acceptance_line(6, ok, f"20 instances x {len(LAMBDAS) * len(XS)} points, "
                           f"{len(disagreements)} disagreements, {poles}/3 poles raised")
    assert not disagreements

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import lambda_rats, polys
from umbra.errors import ConstantTermNonzero
from umbra.poly import (
    Poly,
    derivative,
    divide_by_x,
    falling_factorial,
    poly_arith,
    poly_eval,
    shift,
)
from umbra.scalar import LAMBDA

L = LAMBDA
x = Poly.x()


def test_arith_examples():
    assert poly_arith(x, x - 1, "mul") == Poly.parse("x^2 - x")
    assert poly_arith(x * x, -(x * x), "add").is_zero()
    assert poly_arith(x, Poly.const(1 + L), "mul") == Poly([0, 1 + L])


def _sympy_falling(n):
    sx = sympy.Symbol("x")
    expr = sympy.expand(sympy.prod([sx - k for k in range(n)]))
    return [int(c) for c in reversed(sympy.Poly(expr, sx).all_coeffs())]


@pytest.mark.parametrize("n", range(0, 8))
def test_falling_factorial_matches_expanded_product(n):
    assert list(falling_factorial(n).coeffs) == _sympy_falling(n)


def test_falling_factorial_examples():
    assert falling_factorial(0) == 1
    assert falling_factorial(3) == Poly.parse("x^3 - 3*x^2 + 2*x")
    assert falling_factorial(4) == Poly.parse("x^4 - 6*x^3 + 11*x^2 - 6*x")


def test_shift_examples():
    assert shift(x * x, 1) == Poly.parse("x^2 + 2*x + 1")
    assert shift(falling_factorial(2), 1) == Poly.parse("x^2 + x")
    assert shift(x, -L) == x - L


def test_derivative_examples():
    assert derivative(x**3, 1) == Poly.parse("3*x^2")
    assert derivative(x**3, 3) == 6
    assert derivative(x * x - x * L, 1) == 2 * x - L


def test_divide_by_x_examples():
    assert divide_by_x(x * x - x) == x - 1
    assert divide_by_x(x) == 1
    with pytest.raises(ConstantTermNonzero):
        divide_by_x(x + 1)


def test_eval_examples():
    assert poly_eval(x * x - x, 2) == 2
    assert poly_eval(falling_factorial(3), 3) == 6
    assert poly_eval(x - L, L) == 0


def test_render():
    assert Poly.parse("x^2 - 2*x").render() == "x^2 - 2*x"
    p = Poly([-L / (1 + L) ** 2, 1 / (1 + L)])
    assert p.render() == "(1/(L+1))*x - L/(L+1)^2"
    assert Poly([Fraction(1, 2), -3]).render() == "-3*x + 1/2"
    assert Poly().render() == "0"


@given(polys())
def test_render_roundtrip(p):
    assert Poly.parse(p.render()) == p


@given(polys(), lambda_rats(), lambda_rats())
def test_shift_composes(p, a, b):
    assert shift(shift(p, a), b) == shift(p, a + b)
    assert shift(p, 0) == p


@given(polys())
def test_repeated_derivative_vanishes(p):
    q = p
    for _ in range(p.degree + 1):
        q = derivative(q, 1)
    assert q.is_zero()
    assert derivative(p, p.degree + 1).is_zero() or p.is_zero()


@given(polys())
def test_divide_by_x_inverts_mul(p):
    assert divide_by_x(x * p) == p


@given(polys(), lambda_rats(), lambda_rats())
def test_eval_of_shift(p, c, v):
    assert poly_eval(shift(p, c), v) == poly_eval(p, v + c)


@given(polys(), polys(), st.integers(-3, 3))
def test_mul_degree_and_eval(p, q, v):
    prod = p * q
    if not p.is_zero() and not q.is_zero():
        assert prod.degree == p.degree + q.degree
    assert poly_eval(prod, v) == poly_eval(p, v) * poly_eval(q, v)

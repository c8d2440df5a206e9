"""Exact polynomial / rational function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linext.ratfunc import (
    RF_ONE,
    RF_Q,
    RF_ZERO,
    RatFunc,
    cyclotomic,
    divisible_by_qm1,
    format_factored,
    padd,
    pdeg,
    pdiv_exact,
    peval,
    pgcd,
    pmul,
    pnorm,
    poly_str,
    ppow,
    prem_monic,
    psub,
    qm1_order,
)

polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(
    lambda xs: pnorm(tuple(xs))
)


def test_pnorm_strips_trailing_zeros():
    assert pnorm((1, 2, 0, 0)) == (1, 2)
    assert pnorm((0, 0)) == ()
    assert pdeg(()) == -1
    assert pdeg((0, 0, 3)) == 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert padd(a, b) == padd(b, a)
    assert pmul(a, b) == pmul(b, a)
    assert pmul(a, padd(b, c)) == padd(pmul(a, b), pmul(a, c))
    assert psub(padd(a, b), b) == a


@given(polys, polys)
def test_eval_is_homomorphism(a, b):
    x = Fraction(3, 2)
    assert peval(padd(a, b), x) == peval(a, x) + peval(b, x)
    assert peval(pmul(a, b), x) == peval(a, x) * peval(b, x)


@given(polys, polys)
def test_pdiv_exact_roundtrip(a, b):
    if not b:
        return
    prod = pmul(a, b)
    assert pdiv_exact(prod, b) == a


def test_pdiv_exact_rejects_inexact():
    with pytest.raises((ArithmeticError, ValueError)):
        pdiv_exact((1, 1), (0, 1))  # (x+1)/x


@given(polys, polys)
@settings(max_examples=60)
def test_pgcd_divides_both(a, b):
    g = pgcd(a, b)
    if g:
        pdiv_exact(a, g)
        pdiv_exact(b, g)


def test_cyclotomic_small():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_product_is_qn_minus_1():
    # prod over d | n of Phi_d = x^n - 1
    for n in (1, 2, 3, 4, 6, 8, 12):
        prod = (1,)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = pmul(prod, cyclotomic(d))
        expect = tuple([-1] + [0] * (n - 1) + [1])
        assert prod == pnorm(expect)


def test_prem_monic():
    # x^2 + 1 mod x - 1 = 2
    assert prem_monic((1, 0, 1), (-1, 1)) == (2,)
    assert prem_monic((1, 0, 1), (1, 0, 1)) == ()


def test_ratfunc_canonical():
    half = RatFunc.make((1,), (2,))
    assert half.eval(Fraction(5)) == Fraction(1, 2)
    # (q^2-1)/(q-1) reduces to q+1
    r = RatFunc.make((-1, 0, 1), (-1, 1))
    assert r == RatFunc.make((1, 1), (1,))


def test_ratfunc_field_ops():
    q = RF_Q
    one = RF_ONE
    expr = (q - one) * (q + one)
    assert expr == RatFunc.make((-1, 0, 1), (1,))
    assert q / q == one
    assert (expr / (q - one)) == q + one
    assert RF_ZERO + q == q


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 5))
def test_ratfunc_eval_matches_fraction_arithmetic(a, b, c):
    r = RatFunc.make((a, b), (c,))
    x = Fraction(7, 3)
    assert r.eval(x) == Fraction(a + b * x, c)


def test_qm1_divisibility_order():
    # (q-1)^3 * (q+2) has order 3 at q=1
    f = RatFunc.make(pmul(ppow((-1, 1), 3), (2, 1)), (1,))
    assert qm1_order(f) == 3
    assert divisible_by_qm1(f, 3)
    assert not divisible_by_qm1(f, 4)
    with pytest.raises(ValueError):
        qm1_order(RF_ZERO)


def test_poly_str_and_factored_format():
    assert poly_str((1, 0, 2)) == "2*q^2+1"
    assert poly_str(()) == "0"
    neg = RatFunc.make(
        pmul((-2,), ppow((-1, 1), 3)), ppow((1, 1), 4)
    )
    assert format_factored(neg) == "-2*(q-1)^3/(q+1)^4"
    assert format_factored(RF_ZERO) == "0"

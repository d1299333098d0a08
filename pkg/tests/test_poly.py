"""Polynomial ring core: orders, arithmetic laws, exact division, rendering."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satminors.field import QQ, PrimeField
from satminors.poly import (BlockOrder, Grevlex, Lex, RingContext, mono_deg,
                            mono_div, mono_lcm, mono_mul, order_from_name)

CTX = RingContext(("x", "y", "z"), QQ, Grevlex())
X, Y, Z = CTX.gens()


# -- monomial helpers --------------------------------------------------------

def test_mono_ops():
    assert mono_mul((1, 2, 0), (0, 1, 3)) == (1, 3, 3)
    assert mono_div((1, 3, 3), (0, 1, 3)) == (1, 2, 0)
    assert mono_div((1, 0, 0), (0, 1, 0)) is None
    assert mono_lcm((2, 0, 1), (1, 1, 1)) == (2, 1, 1)
    assert mono_deg((2, 1, 1)) == 4


# -- monomial orders ---------------------------------------------------------

def test_grevlex_classic_comparisons():
    o = Grevlex()
    # degree dominates
    assert o.key((1, 1, 1)) > o.key((2, 0, 0))
    # x^2 > xy > y^2 > xz > yz > z^2 in grevlex on (x, y, z)
    seq = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    keys = [o.key(e) for e in seq]
    assert keys == sorted(keys, reverse=True)


def test_lex_comparisons():
    o = Lex()
    assert o.key((1, 0, 0)) > o.key((0, 5, 5))
    assert o.key((1, 1, 0)) > o.key((1, 0, 9))


def test_block_order_eliminates_first_block():
    o = BlockOrder(1, Lex(), Grevlex())
    # any monomial containing the first variable beats any without it
    assert o.key((1, 0, 0)) > o.key((0, 7, 7))


def test_order_from_name():
    assert order_from_name("grevlex") == Grevlex()
    assert order_from_name("lex") == Lex()
    with pytest.raises(ValueError):
        order_from_name("weird")


def test_order_well_founded_on_divisors():
    # a proper divisor is strictly smaller in any admissible order
    for o in (Grevlex(), Lex()):
        assert o.key((1, 2, 0)) < o.key((1, 2, 1))
        assert o.key((0, 0, 0)) < o.key((0, 0, 1))


# -- arithmetic --------------------------------------------------------------

def test_basic_arithmetic():
    p = (X + Y) * (X - Y)
    assert p == X * X - Y * Y
    assert (X + 1) ** 3 == X ** 3 + 3 * X ** 2 + 3 * X + 1
    assert (p - p).is_zero()
    assert X * CTX.zero() == CTX.zero()


def test_int_coercion_and_scale():
    assert 2 * X == X + X
    assert (X + 1) - 1 == X
    assert X.scale(Fraction(1, 2)) + X.scale(Fraction(1, 2)) == X


def test_evaluate():
    p = X ** 2 * Y - Z + 3
    assert p.evaluate([Fraction(2), Fraction(3), Fraction(5)]) == Fraction(10)


def test_leading_term_depends_on_order():
    p = X + Y ** 2
    assert p.leading_term(Grevlex())[0] == (0, 2, 0)
    assert p.leading_term(Lex())[0] == (1, 0, 0)


def test_exact_divide():
    p = (X + Y) * (X ** 2 + Z)
    assert p.exact_divide(X + Y) == X ** 2 + Z
    assert p.exact_divide(X + Z) is None
    with pytest.raises(ZeroDivisionError):
        p.exact_divide(CTX.zero())


def test_str_rendering():
    assert str(X ** 2 * Y - Z ** 3) == "x^2*y - z^3"
    assert str(CTX.zero()) == "0"
    assert str(CTX.from_int(-2)) == "-2"
    assert str(-X + 1) == "-x + 1"


def test_prime_field_ring():
    fp = PrimeField(7)
    ctx = RingContext(("a", "b"), fp, Grevlex())
    a, b = ctx.gens()
    assert (a + b) ** 7 == a ** 7 + b ** 7   # Frobenius
    assert ctx.from_int(7).is_zero()


def test_context_extension_roundtrip():
    ext = CTX.extended("@t")
    assert ext.variables[0] == "@t"
    lifted = CTX.lift(X * Y + 1, ext)
    assert CTX.project(lifted, 1) == X * Y + 1
    t = ext.var(0)
    with pytest.raises(ValueError):
        CTX.project(t, 1)


# -- property-based ring laws ------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coeffs, max_size=5).map(
    lambda d: CTX.from_terms({e: Fraction(c) for e, c in d.items() if c}))


@settings(max_examples=120, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + CTX.zero() == p
    assert p * CTX.one() == p
    assert (p - p).is_zero()


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_exact_division_roundtrip(p, q):
    if q.is_zero():
        return
    prod = p * q
    quot = prod.exact_divide(q)
    assert quot is not None and quot == p


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_leading_term_multiplicative(p, q):
    if p.is_zero() or q.is_zero():
        return
    o = Grevlex()
    ep, cp = p.leading_term(o)
    eq, cq = q.leading_term(o)
    em, cm = (p * q).leading_term(o)
    assert em == mono_mul(ep, eq)
    assert cm == QQ.mul(cp, cq)

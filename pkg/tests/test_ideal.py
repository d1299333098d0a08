"""Ideal calculus: sums, products, intersection, colon, saturation,
dimension, height, standard monomial counting."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satminors.errors import NotZeroDimensional
from satminors.field import QQ
from satminors.ideal import Ideal
from satminors.poly import Grevlex, RingContext

CTX = RingContext(("x", "y", "z"), QQ, Grevlex())
X, Y, Z = CTX.gens()


def I(*gens):
    return Ideal(CTX, list(gens))


# -- basics ------------------------------------------------------------------

def test_trivial_ideals():
    assert I().is_zero()
    assert I(CTX.one()).is_unit()
    assert I(CTX.from_int(5)).is_unit()
    assert not I(X).is_unit()


def test_membership_and_equality():
    a = I(X ** 2 - Y, X * Y - Z)
    assert a.contains_poly(X * Z - Y ** 2)
    assert a.equals(I(X * Y - Z, X ** 2 - Y))
    assert not a.equals(I(X))


def test_sum_product_power():
    assert (I(X) + I(Y)).equals(I(X, Y))
    assert I(X, Y).product(I(X, Y)).equals(I(X ** 2, X * Y, Y ** 2))
    assert I(X, Y).power(2).equals(I(X ** 2, X * Y, Y ** 2))
    assert I(X).power(0).is_unit()


def test_minimal_generators():
    a = I(X, X ** 2, X + X ** 3, Y)
    assert len(a.minimal_generators().generators) == 2


# -- intersection / colon / saturation ---------------------------------------

def test_intersection_of_monomial_ideals():
    assert I(X).intersect(I(Y)).equals(I(X * Y))
    assert I(X, Y).intersect(I(Y, Z)).equals(I(Y, X * Z))


def test_intersection_principal():
    assert I(X * Y).intersect(I(X * Z)).equals(I(X * Y * Z))


def test_colon_textbook():
    # (x y) : (x) = (y)
    assert I(X * Y).colon(I(X)).equals(I(Y))
    # (x^2, xy) : (x) = (x, y)
    assert I(X ** 2, X * Y).colon(I(X)).equals(I(X, Y))
    # colon by something already inside: unit ideal
    assert I(X).colon(I(X ** 2)).is_unit()


def test_colon_poly_vs_colon():
    a = I(X ** 2, X * Y)
    assert a.colon_poly(X).equals(a.colon(I(X)))


def test_saturation_strips_embedded_component():
    # (x^2, xy) = (x) meet (x^2, y)-ish; saturating at (x, y) leaves (x)
    a = I(X ** 2, X * Y)
    sat, steps = a.saturate(I(X, Y))
    assert sat.equals(I(X))
    assert steps >= 1


def test_saturation_of_saturated_ideal_is_identity():
    sat, steps = I(X).saturate(I(X, Y))
    assert sat.equals(I(X)) and steps == 0


# -- dimension / height ------------------------------------------------------

def test_dimension_and_height():
    assert I().dimension() == 3
    assert I(CTX.one()).dimension() == -1
    assert I(X).dimension() == 2 and I(X).height() == 1
    assert I(X, Y).dimension() == 1
    assert I(X, Y, Z).dimension() == 0 and I(X, Y, Z).height() == 3
    # a hypersurface through a non-monomial ideal
    assert I(X ** 2 - Y * Z).height() == 1


def test_dimension_of_twisted_cubic():
    assert I(X ** 2 - Y, X * Y - Z).dimension() == 1


# -- standard monomials ------------------------------------------------------

def test_std_monomial_count():
    assert I(X, Y, Z).std_monomial_count() == 1
    assert I(X ** 2, Y ** 3, Z).std_monomial_count() == 6
    assert I(X ** 2, Y ** 2, Z ** 2, X * Y).std_monomial_count() == 6
    with pytest.raises(NotZeroDimensional):
        I(X, Y).std_monomial_count()


# -- algebraic laws (property-based) -----------------------------------------

coeffs = st.integers(min_value=-2, max_value=2)
exps = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(exps, coeffs, min_size=1, max_size=3).map(
    lambda d: CTX.from_terms({e: Fraction(c) for e, c in d.items() if c}))
small_ideals = st.lists(polys, min_size=1, max_size=2).map(
    lambda ps: Ideal(CTX, [p for p in ps if not p.is_zero()]))


@settings(max_examples=25, deadline=None)
@given(small_ideals, polys)
def test_colon_contains_ideal(a, f):
    if f.is_zero():
        return
    q = a.colon_poly(f)
    assert q.contains(a)
    for g in q.generators:
        assert a.contains_poly(g * f)


@settings(max_examples=25, deadline=None)
@given(small_ideals, small_ideals)
def test_intersection_is_lower_bound(a, b):
    if a.is_zero() or b.is_zero():
        return
    c = a.intersect(b)
    assert a.contains(c) and b.contains(c)
    # and contains the product
    assert c.contains(a.product(b))


@settings(max_examples=25, deadline=None)
@given(small_ideals)
def test_saturation_is_monotone_and_idempotent(a):
    if a.is_zero():
        return
    m = Ideal(CTX, [X, Y, Z])
    sat, _ = a.saturate(m)
    assert sat.contains(a)
    again, steps = sat.saturate(m)
    assert steps == 0 and again.equals(sat)

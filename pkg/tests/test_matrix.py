"""Polynomial matrices: determinants, minors ideals, signed minors, rank."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satminors.errors import NonSquare
from satminors.field import QQ
from satminors.pmatrix import PolyMatrix
from satminors.poly import Grevlex, RingContext

CTX = RingContext(("x", "y", "z", "w"), QQ, Grevlex())
X, Y, Z, W = CTX.gens()


def test_shape_validation():
    with pytest.raises(ValueError):
        PolyMatrix([[X], [X, Y]])
    with pytest.raises(NonSquare):
        PolyMatrix([[X, Y]]).determinant()


def test_determinant_small():
    assert PolyMatrix([[X]]).determinant() == X
    assert PolyMatrix([[X, Y], [Z, W]]).determinant() == X * W - Y * Z
    # singular: repeated rows
    assert PolyMatrix([[X, Y], [X, Y]]).determinant().is_zero()


def test_determinant_multilinear_in_rows():
    a = PolyMatrix([[X, Y], [Z, W]]).determinant()
    b = PolyMatrix([[X.scale(Fraction(3)), Y.scale(Fraction(3))],
                    [Z, W]]).determinant()
    assert b == a.scale(Fraction(3))


def test_determinant_row_swap_sign():
    a = PolyMatrix([[X, Y], [Z, W]]).determinant()
    b = PolyMatrix([[Z, W], [X, Y]]).determinant()
    assert b == -a


def test_vandermonde_factorization():
    rows = [[CTX.one(), v, v * v] for v in (X, Y, Z)]
    det = PolyMatrix(rows).determinant()
    assert det == (Y - X) * (Z - X) * (Z - Y)


def _random_matrix(rng, n):
    gens = CTX.gens()

    def entry():
        p = CTX.from_int(rng.randrange(-2, 3))
        for g in gens:
            if rng.random() < 0.4:
                p = p + g.scale(Fraction(rng.randrange(-2, 3)))
        return p
    return PolyMatrix([[entry() for _ in range(n)] for _ in range(n)])


def _det_cofactor_reference(mat):
    return mat._det_cofactor(list(range(mat.nrows)), list(range(mat.ncols)))


def test_bareiss_matches_cofactor_randomized():
    rng = random.Random(42)
    for _ in range(30):
        mat = _random_matrix(rng, rng.choice([2, 3, 5]))
        assert mat._det_bareiss() == _det_cofactor_reference(mat)


def test_determinant_multiplicative_randomized():
    rng = random.Random(7)
    for _ in range(10):
        a = _random_matrix(rng, 3)
        b = _random_matrix(rng, 3)
        assert a.matmul(b).determinant() == a.determinant() * b.determinant()


def test_signed_max_minors_kernel_identity():
    # M . (a_1, ..., a_{n+1})^T = 0 for the signed maximal minors
    m = PolyMatrix([[X, Y, Z], [Y, Z, W]])
    a = m.signed_max_minors()
    assert all(p.is_zero() for p in m.mul_vector(a))


def test_minors_ideal_bounds():
    m = PolyMatrix([[X, Y, Z], [Y, Z, W]])
    assert m.minors_ideal(0).is_unit()
    assert m.minors_ideal(3).is_zero()
    assert len(m.minors_ideal(2).generators) == 3
    assert len(m.minors_ideal(1).generators) == 4   # deduped entries


def test_rank_probabilistic_and_symbolic():
    m = PolyMatrix([[X, Y], [X, Y]])
    assert m.rank(rng=random.Random(0)) == 1
    assert m.rank(symbolic=True) == 1
    full = PolyMatrix([[X, Y], [Z, W]])
    assert full.rank(rng=random.Random(0)) == 2
    assert full.rank(symbolic=True) == 2
    zero = PolyMatrix([[CTX.zero()]])
    assert zero.rank(symbolic=True) == 0


coeffs = st.integers(min_value=-2, max_value=2)
exps = st.tuples(*(st.integers(0, 1) for _ in range(4)))
polys = st.dictionaries(exps, coeffs, max_size=3).map(
    lambda d: CTX.from_terms({e: Fraction(c) for e, c in d.items() if c}))


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=9, max_size=9))
def test_det_transpose_invariant(entries):
    mat = PolyMatrix([entries[0:3], entries[3:6], entries[6:9]])
    assert mat.determinant() == mat.transpose().determinant()


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=25, max_size=25))
def test_bareiss_agrees_with_cofactor(entries):
    mat = PolyMatrix([entries[i * 5:(i + 1) * 5] for i in range(5)])
    assert mat._det_bareiss() == _det_cofactor_reference(mat)

"""Koszul strand complexes: ranks, exactness, pd/depth, augmentation."""

from math import comb

import pytest
from satminors.errors import CertificateMissing
from satminors.family import CyclicFamily, CyclicSpec
from satminors.field import field_from_name
from satminors.strand import (StrandBasisLabel, StrandComplex,
                              claim2_decomposition, member_of_power)


def fam(m, fld=None):
    return CyclicFamily(CyclicSpec.ones(m), fld=fld) if fld else \
        CyclicFamily(CyclicSpec.ones(m))


def test_label_rendering():
    lab = StrandBasisLabel((2, 0, 1), (1, 3))
    assert str(lab) == "T1^2*T3.e1^e3"
    assert str(StrandBasisLabel((0, 0, 0), ())) == "1.1"


def test_ranks_formula():
    for m in (2, 3):
        f = fam(m)
        for n in (1, 2, 3):
            s = StrandComplex(f, n)
            assert s.ranks == [comb(m, r) * comb(n - r + m, m)
                               for r in range(min(n, m) + 1)]


def test_boundary_composites_vanish():
    s = StrandComplex(fam(3), 3)
    for r in range(2, s.top + 1):
        assert s.boundary(r - 1).matmul(s.boundary(r)).is_zero()


def test_euler_characteristic_is_one():
    for m in (2, 3):
        for n in (1, 2, 3):
            assert StrandComplex(fam(m), n).euler_characteristic() == 1


def test_minimality():
    for m in (2, 3):
        for n in (1, 2, 3):
            assert StrandComplex(fam(m), n).is_minimal()


def test_exactness_certificates():
    for m in (2, 3):
        for n in (1, 2, 3):
            cert = StrandComplex(fam(m), n).is_exact()
            assert cert.exact
            assert all(cert.per_degree.values())


def test_pd_depth_closed_form():
    for m in (2, 3):
        for n in (1, 2, 3):
            s = StrandComplex(fam(m), n)
            s.is_exact()
            pd, depth = s.pd_depth()
            if n < m:
                assert (pd, depth) == (n + 1, m - n)
            else:
                assert (pd, depth) == (m + 1, 0)


def test_pd_depth_requires_certificate():
    s = StrandComplex(fam(2), 1)
    with pytest.raises(CertificateMissing):
        s.pd_depth()


def test_augmentation():
    for m, n in ((2, 1), (2, 2), (3, 1), (3, 2)):
        assert StrandComplex(fam(m), n).augmentation_check()


def test_augmentation_products_lie_in_power():
    f = fam(2)
    s = StrandComplex(f, 2)
    for p in s.augmentation_products():
        assert member_of_power(f, p, 2)


def test_claim2_decomposition():
    for m in (2, 3):
        verdicts = claim2_decomposition(fam(m))
        assert verdicts == {"t_injective": True, "decomposition": True,
                            "basis_exchange": True}


def test_claim2_random_exponents():
    import random
    rng = random.Random(9)
    for _ in range(5):
        m = rng.choice([2, 3])
        alpha = tuple(tuple(rng.randrange(1, 4) for _ in range(m + 1))
                      for _ in range(m))
        f = CyclicFamily(CyclicSpec(m, alpha))
        assert all(claim2_decomposition(f).values())


def test_strand_over_prime_field():
    f = fam(3, field_from_name("fp:32003"))
    s = StrandComplex(f, 3)
    assert s.is_exact().exact
    assert s.pd_depth() == (4, 0)


def test_invalid_strand_degree():
    with pytest.raises(ValueError):
        StrandComplex(fam(2), 0)

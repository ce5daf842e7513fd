import random

import pytest

from acaa.algebra import (change_basis, check_acaa, check_quadratic_identity,
                          fingerprint, jacobi_coeffs)
from acaa.catalog import (all_entries, catalog, entry, enumerate_finite,
                          recognize)
from acaa.fields import PrimeField, Q
from acaa.linalg import random_invertible

from conftest import simple_lie_3


def gl_order(dim, p):
    order = 1
    for k in range(dim):
        order *= p ** dim - p ** k
    return order


def test_catalog_sizes():
    assert [e.name for e in catalog(2)] == ["abelian2"]
    assert [e.name for e in catalog(3)] == ["abelian3", "h3"]
    assert [e.name for e in catalog(4)] == ["abelian4", "h3+K"]
    assert [e.name for e in catalog(5)] == ["abelian5", "h3+K2", "L5", "h5"]


def test_catalog_rejects_unsupported_dim():
    with pytest.raises(ValueError):
        catalog(6)
    with pytest.raises(ValueError):
        catalog(7)


def test_extras_exposed_by_name():
    assert entry("free3").algebra.dim == 7
    assert entry("n6").algebra.dim == 6
    with pytest.raises(ValueError):
        entry("nope")


def test_every_entry_is_acaa_with_expected_fingerprint():
    for e in all_entries():
        assert check_acaa(e.algebra) is None, e.name
        assert fingerprint(e.algebra) == e.fingerprint, e.name


def test_fingerprints_distinct_within_dimension():
    by_dim = {}
    for e in all_entries():
        by_dim.setdefault(e.algebra.dim, []).append(e.fingerprint.as_tuple())
    for dim, fps in by_dim.items():
        assert len(set(fps)) == len(fps), dim


def test_lie_entries_satisfy_jacobi_free3_does_not():
    for e in all_entries():
        w = check_quadratic_identity(e.algebra, jacobi_coeffs(Q))
        if e.name == "free3":
            assert w is not None
            assert e.fingerprint.cube_dim == 1
        else:
            assert w is None
            assert e.fingerprint.cube_dim == 0


def test_recognize_after_seeded_basis_changes():
    rng = random.Random(1729)
    for dim in (2, 3, 4, 5):
        for e in catalog(dim):
            for _ in range(10):
                P = random_invertible(Q, e.algebra.dim, rng)
                assert recognize(change_basis(e.algebra, P)) == e.name


def test_recognize_direct_sums():
    from acaa.algebra import Algebra, direct_sum

    h3 = entry("h3").algebra
    K = Algebra.from_products(Q, 1, {}, skew=True)
    assert recognize(direct_sum(h3, K)) == "h3+K"
    assert recognize(direct_sum(direct_sum(h3, K), K)) == "h3+K2"
    assert recognize(entry("abelian4").algebra) == "abelian4"


def test_recognize_preconditions():
    with pytest.raises(ValueError):
        recognize(entry("n6").algebra)          # dim 6 not covered
    with pytest.raises(ValueError):
        recognize(simple_lie_3())               # not acaa
    from acaa.algebra import Algebra

    mod5 = Algebra.from_products(PrimeField(5), 3, {(0, 1): {2: 1}}, skew=True)
    with pytest.raises(ValueError):
        recognize(mod5)                         # wrong field


def test_enumerate_dim2():
    assert enumerate_finite(2, 3) == (1, 1)
    assert enumerate_finite(2, 5) == (1, 1)


def test_enumerate_dim3_mod3_matches_orbit_counting():
    acaa_count, classes = enumerate_finite(3, 3)
    assert classes == 2
    # the nonabelian class is one GL-orbit; its stabilizer is the
    # automorphism group of the Heisenberg algebra, of order |GL(2,p)| p^2
    expected = 1 + gl_order(3, 3) // (gl_order(2, 3) * 9)
    assert acaa_count == expected == 27


def test_enumerate_parameter_validation():
    with pytest.raises(ValueError):
        enumerate_finite(4, 3)
    with pytest.raises(ValueError):
        enumerate_finite(3, 2)
    with pytest.raises(ValueError):
        enumerate_finite(3, 7)


def test_enumerate_jobs_partition_is_deterministic():
    assert enumerate_finite(3, 3, jobs=3) == enumerate_finite(3, 3)

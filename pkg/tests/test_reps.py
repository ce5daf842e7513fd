import random

import pytest

from acaa.algebra import random_element
from acaa.catalog import all_entries, entry
from acaa.fields import Q
from acaa.free import free_acaa
from acaa.linalg import Matrix, rank_kernel
from acaa.reps import (Representation, ad_matrix, adjoint_representation,
                       check_ad_identities, check_representation,
                       check_weighted_antiderivation, h3_faithfulness_search,
                       is_faithful)
from acaa.serialize import representation_from_json, representation_to_json

from conftest import simple_lie_3


def test_ad_of_central_element_is_zero():
    h3 = entry("h3").algebra
    assert ad_matrix(h3, h3.basis(2)).is_zero()


def test_ad_e1_on_h3():
    h3 = entry("h3").algebra
    m = ad_matrix(h3, h3.basis(0))
    expected = Matrix.build(Q, [[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    assert m == expected


def test_ad_matrix_on_free3_generator():
    F = free_acaa(3)
    m = ad_matrix(F.algebra, F.generator(0))
    nonzero = {(i, j): v for i, row in enumerate(m.entries)
               for j, v in enumerate(row) if v}
    # [X1,X2]=X12, [X1,X3]=X13, [X1,X23]=X123
    assert nonzero == {(3, 1): Q.one, (4, 2): Q.one, (6, 5): Q.one}


def test_ad_matrix_columns_are_brackets():
    F = free_acaa(3)
    A = F.algebra
    rng = random.Random(17)
    for _ in range(10):
        x = random_element(A, rng)
        m = ad_matrix(A, x)
        for j in range(A.dim):
            assert m.apply(A.basis(j).coords) == (x * A.basis(j)).coords


def test_ad_matrix_rank_on_free3():
    F = free_acaa(3)
    rank, kernel = rank_kernel(ad_matrix(F.algebra, F.generator(0)))
    assert rank == 3
    assert kernel.dim == 4


def test_ad_identities_on_catalog():
    for e in all_entries():
        assert check_ad_identities(e.algebra) is None, e.name


def test_ad_identities_precondition():
    with pytest.raises(ValueError):
        check_ad_identities(simple_lie_3())


def test_double_bracket_identity_on_random_elements():
    rng = random.Random(23)
    for e in all_entries():
        A = e.algebra
        two = A.field.from_int(2)
        for _ in range(10):
            x, y = random_element(A, rng), random_element(A, rng)
            adx, ady = ad_matrix(A, x), ad_matrix(A, y)
            ad_br = ad_matrix(A, x * y)
            assert (ad_br.scale(two) + adx * ady - ady * adx).is_zero()
            assert (adx * adx).is_zero()


def test_ad_is_weight2_antiderivation():
    rng = random.Random(29)
    for e in all_entries():
        A = e.algebra
        for _ in range(10):
            x = random_element(A, rng)
            assert check_weighted_antiderivation(A, ad_matrix(A, x), 2) is None


def test_weight2_example_on_free3():
    F = free_acaa(3)
    X1, X2, X3 = (F.generator(i) for i in range(3))
    X123 = F.monomial((0, 1, 2))
    lhs = 2 * (X1 * (X2 * X3))
    rhs = -(X2 * (X1 * X3)) - ((X1 * X2) * X3)
    assert lhs == rhs == 2 * X123


def test_identity_map_is_not_weight1_antiderivation():
    h3 = entry("h3").algebra
    assert check_weighted_antiderivation(h3, Matrix.identity(Q, 3), 1) == (0, 1)


def test_weighted_antiderivation_validation():
    h3 = entry("h3").algebra
    with pytest.raises(ValueError):
        check_weighted_antiderivation(h3, Matrix.identity(Q, 3), 0)
    with pytest.raises(ValueError):
        check_weighted_antiderivation(h3, Matrix.identity(Q, 2), 2)


def test_adjoint_is_representation_on_catalog():
    for e in all_entries():
        rep = adjoint_representation(e.algebra)
        assert check_representation(rep) is None, e.name


def test_adjoint_not_faithful_on_h3_and_free3():
    assert is_faithful(adjoint_representation(entry("h3").algebra)) is False
    assert is_faithful(adjoint_representation(free_acaa(3).algebra)) is False


def test_zero_representation_not_faithful():
    A = entry("abelian3").algebra
    rep = Representation(A, 2, [Matrix.zero(Q, 2, 2)] * 3)
    assert check_representation(rep) is None
    assert is_faithful(rep) is False


def test_rank_one_nilpotent_pair_representation():
    h3 = entry("h3").algebra
    n1 = Matrix.build(Q, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    rep = Representation(h3, 3, [n1, n1, Matrix.zero(Q, 3, 3)])
    assert check_representation(rep) is None
    assert is_faithful(rep) is False


def test_broken_representation_witness():
    h3 = entry("h3").algebra
    diag = Matrix.build(Q, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rep = Representation(h3, 3, [diag, Matrix.zero(Q, 3, 3), Matrix.zero(Q, 3, 3)])
    assert check_representation(rep) == ("square", (0,))


def test_is_faithful_requires_valid_representation():
    h3 = entry("h3").algebra
    diag = Matrix.build(Q, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rep = Representation(h3, 3, [diag, Matrix.zero(Q, 3, 3), Matrix.zero(Q, 3, 3)])
    with pytest.raises(ValueError):
        is_faithful(rep)


def test_h3_search_exhausted_mod3():
    assert h3_faithfulness_search(3) is None


def test_h3_search_specific_pair_products_vanish():
    # X = N1 and Y with a single (2,3) entry anticommute with XY = YX = 0
    x = [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
    y = [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    xy = [[sum(x[i][m] * y[m][j] for m in range(3)) % 3 for j in range(3)]
          for i in range(3)]
    yx = [[sum(y[i][m] * x[m][j] for m in range(3)) % 3 for j in range(3)]
          for i in range(3)]
    assert all(v == 0 for row in xy for v in row)
    assert all(v == 0 for row in yx for v in row)


def test_h3_search_validation():
    with pytest.raises(ValueError):
        h3_faithfulness_search(7)
    with pytest.raises(ValueError):
        h3_faithfulness_search(3, d=4)


def test_h3_search_jobs_deterministic():
    assert h3_faithfulness_search(3, jobs=2) is None


def test_representation_json_round_trip():
    h3 = entry("h3").algebra
    rep = adjoint_representation(h3)
    data = representation_to_json(rep, "h3")
    again = representation_from_json(data, h3)
    assert check_representation(again) is None


def test_representation_shape_validation():
    h3 = entry("h3").algebra
    with pytest.raises(ValueError):
        Representation(h3, 3, [Matrix.zero(Q, 3, 3)] * 2)
    with pytest.raises(ValueError):
        Representation(h3, 3, [Matrix.zero(Q, 2, 3)] * 3)

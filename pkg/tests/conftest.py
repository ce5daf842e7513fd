"""Shared algebra builders for the test suite."""

import pytest

from acaa.algebra import Algebra
from acaa.fields import Q


def upper_triangular_2x2() -> Algebra:
    """Associative algebra on E11, E12, E22 (2x2 upper triangular matrices)."""
    products = {
        (0, 0): {0: 1},   # E11 E11 = E11
        (0, 1): {1: 1},   # E11 E12 = E12
        (1, 2): {1: 1},   # E12 E22 = E12
        (2, 2): {2: 1},   # E22 E22 = E22
    }
    return Algebra.from_products(Q, 3, products, labels=("E11", "E12", "E22"),
                                 name="ut2")


def full_matrix_2x2() -> Algebra:
    """Associative algebra on E11, E12, E21, E22 (all 2x2 matrices)."""
    basis = ((0, 0), (0, 1), (1, 0), (1, 1))
    index = {b: i for i, b in enumerate(basis)}
    products = {}
    for i, (a, b) in enumerate(basis):
        for j, (c, d) in enumerate(basis):
            if b == c:
                products[(i, j)] = {index[(a, d)]: 1}
    return Algebra.from_products(Q, 4, products,
                                 labels=("E11", "E12", "E21", "E22"), name="gl2")


def simple_lie_3() -> Algebra:
    """[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 (the cross product)."""
    return Algebra.from_products(Q, 3,
                                 {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
                                 skew=True, name="cross")


def seven_dim_table() -> Algebra:
    """The 7-dimensional anticommutative algebra with [e1,e2]=e4,
    [e1,e3]=e5, [e2,e3]=e6, [e1,e6]=-[e2,e5]=[e3,e4]=e7."""
    products = {
        (0, 1): {3: 1},
        (0, 2): {4: 1},
        (1, 2): {5: 1},
        (0, 5): {6: 1},
        (1, 4): {6: -1},
        (2, 3): {6: 1},
    }
    return Algebra.from_products(Q, 7, products, skew=True, name="acaa7")


def commutative_2() -> Algebra:
    """Commutative (and associative) 2-dimensional algebra e1*e1 = e1, cross
    terms symmetric."""
    return Algebra.from_products(Q, 2, {(0, 0): {0: 1}, (0, 1): {1: 1},
                                        (1, 0): {1: 1}})


@pytest.fixture
def ut2():
    return upper_triangular_2x2()


@pytest.fixture
def gl2():
    return full_matrix_2x2()

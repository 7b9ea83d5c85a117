from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liekit.exact import (DenseVector, NonSymmetric, Rational, SparseMatrix,
                          is_negative_definite, kernel_basis, rank, solve_linear)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def mat(rows):
    return SparseMatrix.from_rows(rows)


def test_rational_is_exact_lowest_terms():
    r = Rational(6, -4)
    assert (r.numerator, r.denominator) == (-3, 2)
    assert Rational(1, 3) + Rational(1, 6) == Rational(1, 2)


@given(rationals, rationals)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@given(rationals, rationals.filter(lambda x: x != 0))
def test_mul_div_roundtrip(a, b):
    assert (a * b) / b == a


def test_rank_identity():
    assert rank(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3


def test_rank_zero():
    assert rank(SparseMatrix(2, 2, {})) == 0


def test_rank_proportional_rows():
    assert rank(mat([[1, 2], [2, 4]])) == 1


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=2, max_size=5))
@settings(max_examples=60)
def test_rank_transpose_invariant(rows):
    m = mat(rows)
    assert rank(m) == rank(m.transpose())


def test_negative_definite_examples():
    assert is_negative_definite(mat([[-1, 0], [0, -1]]))
    assert not is_negative_definite(mat([[1, 0], [0, 1]]))
    assert not is_negative_definite(mat([[-1, 0], [0, 0]]))
    assert is_negative_definite(mat([[-2, 1], [1, -2]]))
    assert not is_negative_definite(mat([[-2, 3], [3, -2]]))


def test_negative_definite_requires_symmetry():
    with pytest.raises(NonSymmetric):
        is_negative_definite(mat([[1, 2], [0, 1]]))


def test_solve_identity():
    x = solve_linear(mat([[1, 0], [0, 1]]), DenseVector([3, 5]))
    assert x == DenseVector([3, 5])


def test_solve_inconsistent_is_a_value():
    assert solve_linear(SparseMatrix(1, 1, {}), DenseVector([1])) is None


def test_solve_diagonal():
    x = solve_linear(mat([[2, 0], [0, 4]]), DenseVector([1, 1]))
    assert x == DenseVector([Fraction(1, 2), Fraction(1, 4)])


def test_solve_underdetermined_free_vars_zero():
    x = solve_linear(mat([[1, 1]]), DenseVector([5]))
    assert x == DenseVector([5, 0])


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
@settings(max_examples=60)
def test_solve_verifies_exactly(rows, rhs):
    a = mat(rows)
    b = DenseVector(rhs)
    x = solve_linear(a, b)
    if x is not None:
        for r in range(3):
            assert sum(a.entry(r, c) * x[c] for c in range(3)) == b[r]


def test_kernel_basis_annihilates():
    a = mat([[1, 2, 3], [2, 4, 6]])
    basis = kernel_basis(a)
    assert len(basis) == 2
    for v in basis:
        for r in range(a.rows):
            assert sum(a.entry(r, c) * v[c] for c in range(a.cols)) == 0

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exoticcone import linalg
from exoticcone.errors import DomainError
from exoticcone.linalg import (
    contains,
    det,
    frac,
    full_space,
    identity,
    inverse,
    map_image,
    map_preimage,
    mat_mul,
    mat_vec,
    nonneg_combination,
    nullspace,
    rank,
    rref,
    solve,
    span,
    sub_add,
    sub_dim,
    sub_intersect,
    sub_leq,
    zero_space,
)

small_mat = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(
        st.lists(small_mat, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )


def test_frac_parses_strings():
    assert frac("3/4") == Fraction(3, 4)
    assert frac(7) == 7
    with pytest.raises(DomainError):
        frac("1/0")
    with pytest.raises(DomainError):
        frac(1.5)


def test_rref_known():
    red, pivots = rref([[1, 2], [2, 4]])
    assert red == [[1, 2]]
    assert pivots == [0]
    red, pivots = rref([[0, 1], [1, 0]])
    assert red == [[1, 0], [0, 1]]


def test_rank_and_nullspace_empty_cases():
    assert rank([]) == 0
    assert nullspace([], 3) == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 1], [0, 1]], [3, 2]) == [1, 2]
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_det_and_inverse():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[1, 2], [2, 4]]) == 0
    m = [[1, 2], [3, 4]]
    assert mat_mul(m, inverse(m)) == identity(2)
    with pytest.raises(DomainError):
        inverse([[1, 2], [2, 4]])


@given(matrices(3, 4))
@settings(max_examples=60)
def test_nullspace_annihilates_and_rank_nullity(m):
    basis = nullspace(m, 4)
    for v in basis:
        assert mat_vec(m, v) == [0, 0, 0]
    assert rank(m) + len(basis) == 4


@given(matrices(3, 3), matrices(3, 3))
@settings(max_examples=40)
def test_det_multiplicative(a, b):
    assert det(mat_mul(a, b)) == det(a) * det(b)


def test_subspace_canonical_and_ops():
    s = span([[1, 1, 0], [2, 2, 0]])
    assert sub_dim(s) == 1
    assert s == span([[3, 3, 0]])
    assert contains(s, [5, 5, 0])
    assert not contains(s, [1, 0, 0])
    a = span([[1, 0, 0]])
    b = span([[0, 1, 0]])
    assert sub_add(a, b) == span([[1, 0, 0], [0, 1, 0]])
    assert sub_intersect(a, b, 3) == zero_space()
    assert sub_intersect(sub_add(a, b), span([[1, 1, 0], [0, 0, 1]]), 3) == span(
        [[1, 1, 0]]
    )
    assert sub_leq(a, full_space(3))
    assert not sub_leq(full_space(3), a)


def test_map_image_and_preimage():
    x = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    line = span([[0, 0, 1]])
    assert map_image(x, line) == span([[0, 1, 0]])
    assert map_preimage(x, zero_space(), 3) == span([[1, 0, 0]])
    assert map_preimage(x, span([[1, 0, 0]]), 3) == span(
        [[1, 0, 0], [0, 1, 0]]
    )


@given(matrices(4, 2))
@settings(max_examples=60)
def test_image_dim_is_rank(m):
    cols = [list(c) for c in zip(*m)]
    assert sub_dim(span(cols)) == rank(m)


def test_nonneg_combination_simple():
    assert nonneg_combination([[1, 0], [0, 1]], [1, 1]) is not None
    assert nonneg_combination([[1, 2], [1, 0]], [1, 1]) is not None
    assert nonneg_combination([[1, 2], [-1, 0]], [1, 1]) is None
    assert nonneg_combination([[1, 0], [-1, 0]], [0, 1]) is None


@given(
    st.lists(st.lists(small_mat, min_size=3, max_size=3), min_size=1, max_size=4),
    st.lists(st.integers(0, 3), min_size=4, max_size=4),
)
@settings(max_examples=60)
def test_nonneg_combination_finds_known_solutions(cols, coeffs):
    coeffs = coeffs[: len(cols)]
    target = [
        sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(3)
    ]
    found = nonneg_combination(cols, target)
    assert found is not None
    assert all(c >= 0 for c in found)
    rebuilt = [
        sum(c * col[i] for c, col in zip(found, cols)) for i in range(3)
    ]
    assert rebuilt == [Fraction(t) for t in target]


def test_nonneg_combination_certificates_are_exact():
    # a system whose only solutions are fractional
    cols = [[2, 0], [0, 3]]
    got = nonneg_combination(cols, [1, 1])
    assert got == [Fraction(1, 2), Fraction(1, 3)]


def test_mat_pow_and_transpose():
    x = [[0, 1], [0, 0]]
    assert linalg.mat_pow(x, 2) == [[0, 0], [0, 0]]
    assert linalg.transpose([[1, 2], [3, 4]]) == [[1, 3], [2, 4]]
